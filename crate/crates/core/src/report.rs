//! Tabular rendering of series, decompositions and evaluation results as
//! aligned text, CSV or Markdown.

use std::str::FromStr;

use crate::decomposition::DecompositionResult;
use crate::evaluation::{HypothesisReport, MethodReport, StabilityRow};
use crate::series::MonthlyTimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(format!(
                "unknown output format {other:?}, expected text, csv or markdown"
            )),
        }
    }
}

/// Number formatting. `Display` rounds index levels to integers and
/// percentages to two decimals; `Full` prints the shortest exact form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    Display,
    Full,
}

impl FromStr for Precision {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "display" => Ok(Self::Display),
            "full" => Ok(Self::Full),
            other => Err(format!(
                "unknown precision {other:?}, expected display or full"
            )),
        }
    }
}

impl Precision {
    pub fn level(self, v: f64) -> String {
        match self {
            // avoid "-0"
            Precision::Display => format!("{:.0}", v.round() + 0.0),
            Precision::Full => format!("{v}"),
        }
    }

    pub fn percent(self, v: f64) -> String {
        match self {
            Precision::Display => {
                let r = (v * 100.0).round() / 100.0 + 0.0;
                format!("{r:.2}")
            }
            Precision::Full => format!("{v}"),
        }
    }

    fn optional_level(self, v: Option<f64>) -> String {
        v.map(|v| self.level(v)).unwrap_or_default()
    }
}

/// A rectangular table with optional trailing notes.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Rendered after the table: `# ` comment lines in CSV, plain lines otherwise.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Markdown => self.render_markdown(),
        }
    }

    fn render_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        for row in &self.rows {
            out += &line(row);
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                out += n;
                out.push('\n');
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        let mut out = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8");
        for n in &self.notes {
            out += "# ";
            out += n;
            out.push('\n');
        }
        out
    }

    fn render_markdown(&self) -> String {
        let escape = |s: &String| s.replace('|', "\\|");
        let row = |cells: &[String]| {
            format!(
                "| {} |\n",
                cells.iter().map(escape).collect::<Vec<_>>().join(" | ")
            )
        };
        let mut out = row(&self.headers);
        out += &format!("|{}\n", "---:|".repeat(self.headers.len()));
        for r in &self.rows {
            out += &row(r);
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                out += n;
                out.push_str("  \n");
            }
        }
        out
    }
}

/// `month,value` rows.
pub fn series_table(series: &MonthlyTimeSeries, precision: Precision) -> Table {
    let mut t = Table::new(["month", "value"]);
    t.rows = series
        .iter()
        .map(|(m, v)| vec![m.to_string(), precision.level(v)])
        .collect();
    t
}

/// `year,month,aggregate,trend,seasonal,random`; undefined cells are blank.
pub fn decomposition_table(d: &DecompositionResult, precision: Precision) -> Table {
    let mut t = Table::new(["year", "month", "aggregate", "trend", "seasonal", "random"]);
    t.rows = d
        .source
        .iter()
        .enumerate()
        .map(|(i, (m, y))| {
            vec![
                m.year().to_string(),
                m.month().to_string(),
                precision.level(y),
                precision.optional_level(d.trend[i]),
                precision.level(d.seasonal[i]),
                precision.optional_level(d.random[i]),
            ]
        })
        .collect();
    t
}

/// `month,actual,forecast,ape` with the error summary as a note.
pub fn method_table(report: &MethodReport, precision: Precision) -> Table {
    let mut t = Table::new(["month", "actual", "forecast", "ape"]);
    t.rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.month.to_string(),
                precision.level(r.actual),
                precision.level(r.forecast),
                precision.percent(r.ape),
            ]
        })
        .collect();
    let s = &report.summary;
    t.notes.push(format!(
        "method={} min={} max={} mean={} sd={}",
        report.method_id,
        precision.percent(s.min),
        precision.percent(s.max),
        precision.percent(s.mean),
        precision.percent(s.sd)
    ));
    t
}

/// Two decompositions side by side with the signed variation of their sums.
pub fn stability_table(rows: &[StabilityRow], precision: Precision) -> Table {
    let mut t = Table::new([
        "month",
        "trend_a",
        "seasonal_a",
        "sum_a",
        "trend_b",
        "seasonal_b",
        "sum_b",
        "variation_pct",
    ]);
    t.rows = rows
        .iter()
        .map(|r| {
            vec![
                r.month.to_string(),
                precision.level(r.trend_a),
                precision.level(r.seasonal_a),
                precision.level(r.sum_a),
                precision.level(r.trend_b),
                precision.level(r.seasonal_b),
                precision.level(r.sum_b),
                precision.percent(r.variation_pct),
            ]
        })
        .collect();
    t
}

pub fn hypothesis_table(
    report: &HypothesisReport,
    labels: [&str; 2],
    precision: Precision,
) -> Table {
    let mut t = Table::new(["series", "seasonal_pct", "random_pct"]);
    t.rows = (0..2)
        .map(|i| {
            vec![
                labels[i].to_string(),
                precision.percent(report.seasonal_amplitude[i]),
                precision.percent(report.random_amplitude[i]),
            ]
        })
        .collect();
    t.notes.push(format!(
        "verdict(i) {} is more seasonal than {}: {}",
        labels[0], labels[1], report.seasonal_verdict
    ));
    t.notes.push(format!(
        "verdict(ii) {} is more random than {}: {}",
        labels[1], labels[0], report.random_verdict
    ));
    t
}
