//! Static SVG line charts over a monthly axis.
//!
//! Output depends only on the input data: no timestamps, no generated ids.

use std::fmt::Write;

use crate::decomposition::DecompositionResult;
use crate::series::MonthStamp;

const WIDTH: f64 = 900.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 44.0;
const PANEL_HEIGHT: f64 = 170.0;
const PANEL_GAP: f64 = 42.0;
const BOTTOM: f64 = 36.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub label: String,
    /// One entry per axis month; `None` breaks the line.
    pub values: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub title: String,
    pub lines: Vec<Line>,
}

/// Vertically stacked panels sharing one monthly x axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Chart {
    pub title: String,
    pub months: Vec<MonthStamp>,
    pub panels: Vec<Panel>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Tick spacing of 1, 2 or 5 times a power of ten giving about `target` ticks.
fn nice_step(span: f64, target: f64) -> f64 {
    let raw = span / target;
    let magnitude = 10f64.powf(raw.log10().floor());
    let norm = raw / magnitude;
    let factor = if norm < 1.5 {
        1.0
    } else if norm < 3.5 {
        2.0
    } else if norm < 7.5 {
        5.0
    } else {
        10.0
    };
    factor * magnitude
}

fn format_tick(v: f64, step: f64) -> String {
    let decimals = if step >= 1.0 {
        0
    } else {
        (-step.log10().floor()) as usize
    };
    format!("{:.*}", decimals, v + 0.0)
}

impl Chart {
    fn x_of(&self, i: usize) -> f64 {
        let plot_w = WIDTH - LEFT - RIGHT;
        match self.months.len() {
            0 | 1 => LEFT + plot_w / 2.0,
            n => LEFT + plot_w * i as f64 / (n - 1) as f64,
        }
    }

    pub fn to_svg(&self) -> String {
        let n_panels = self.panels.len().max(1) as f64;
        let height = TOP + n_panels * PANEL_HEIGHT + (n_panels - 1.0) * PANEL_GAP + BOTTOM;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="11">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
            WIDTH / 2.0,
            escape(&self.title)
        );
        for (k, panel) in self.panels.iter().enumerate() {
            let top = TOP + k as f64 * (PANEL_HEIGHT + PANEL_GAP);
            self.write_panel(&mut s, panel, top);
        }
        s.push_str("</svg>\n");
        s
    }

    fn write_panel(&self, s: &mut String, panel: &Panel, top: f64) {
        let bottom = top + PANEL_HEIGHT;
        let right = WIDTH - RIGHT;
        let _ = writeln!(
            s,
            r#"<text x="{LEFT}" y="{:.2}" font-size="12" font-weight="bold">{}</text>"#,
            top - 6.0,
            escape(&panel.title)
        );
        let _ = writeln!(
            s,
            r##"<rect x="{LEFT}" y="{top:.2}" width="{:.2}" height="{PANEL_HEIGHT}" fill="none" stroke="#444"/>"##,
            right - LEFT
        );

        let finite = panel
            .lines
            .iter()
            .flat_map(|l| l.values.iter().flatten())
            .copied()
            .filter(|v| v.is_finite());
        let (mut lo, mut hi) = finite.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
            (a.min(v), b.max(v))
        });
        if !lo.is_finite() {
            (lo, hi) = (0.0, 1.0);
        } else if lo == hi {
            (lo, hi) = (lo - 1.0, hi + 1.0);
        }
        let pad = (hi - lo) * 0.05;
        let (lo, hi) = (lo - pad, hi + pad);
        let y_of = |v: f64| bottom - (v - lo) / (hi - lo) * PANEL_HEIGHT;

        let step = nice_step(hi - lo, 4.0);
        let mut tick = (lo / step).ceil() * step;
        while tick <= hi {
            let y = y_of(tick);
            let _ = writeln!(
                s,
                r##"<line x1="{LEFT}" y1="{y:.2}" x2="{right}" y2="{y:.2}" stroke="#ddd"/>"##
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 6.0,
                y + 4.0,
                format_tick(tick, step)
            );
            tick += step;
        }
        for (i, m) in self.months.iter().enumerate() {
            if m.month() == 1 {
                let x = self.x_of(i);
                let _ = writeln!(
                    s,
                    r##"<line x1="{x:.2}" y1="{top:.2}" x2="{x:.2}" y2="{bottom:.2}" stroke="#eee"/>"##
                );
                let _ = writeln!(
                    s,
                    r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                    bottom + 14.0,
                    m.year()
                );
            }
        }

        for (j, line) in panel.lines.iter().enumerate() {
            let color = PALETTE[j % PALETTE.len()];
            let mut segment: Vec<String> = Vec::new();
            let mut flush = |segment: &mut Vec<String>| {
                if segment.len() > 1 {
                    let _ = writeln!(
                        s,
                        r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
                        segment.join(" ")
                    );
                }
                segment.clear();
            };
            for (i, v) in line.values.iter().enumerate() {
                match v {
                    Some(v) if v.is_finite() => {
                        segment.push(format!("{:.2},{:.2}", self.x_of(i), y_of(*v)))
                    }
                    _ => flush(&mut segment),
                }
            }
            flush(&mut segment);
        }
        if panel.lines.len() > 1 {
            for (j, line) in panel.lines.iter().enumerate() {
                let y = top + 14.0 + 14.0 * j as f64;
                let x = right - 150.0;
                let color = PALETTE[j % PALETTE.len()];
                let _ = writeln!(
                    s,
                    r#"<line x1="{x:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/>"#,
                    y - 4.0,
                    x + 18.0,
                    y - 4.0
                );
                let _ = writeln!(
                    s,
                    r#"<text x="{:.2}" y="{y:.2}">{}</text>"#,
                    x + 24.0,
                    escape(&line.label)
                );
            }
        }
    }
}

/// Observed, trend, seasonal and random panels.
pub fn decomposition_chart(d: &DecompositionResult, title: &str) -> String {
    let single = |name: &str, values: Vec<Option<f64>>| Panel {
        title: name.to_string(),
        lines: vec![Line {
            label: name.to_string(),
            values,
        }],
    };
    Chart {
        title: title.to_string(),
        months: d.source.iter().map(|(m, _)| m).collect(),
        panels: vec![
            single(
                "observed",
                d.source.values().iter().copied().map(Some).collect(),
            ),
            single("trend", d.trend.clone()),
            single("seasonal", d.seasonal.iter().copied().map(Some).collect()),
            single("random", d.random.clone()),
        ],
    }
    .to_svg()
}

/// Several lines in one panel.
pub fn overlay_chart(title: &str, months: &[MonthStamp], lines: Vec<Line>) -> String {
    Chart {
        title: title.to_string(),
        months: months.to_vec(),
        panels: vec![Panel {
            title: String::new(),
            lines,
        }],
    }
    .to_svg()
}
