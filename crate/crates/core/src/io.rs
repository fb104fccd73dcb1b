//! Reading monthly series from values files and daily CSV.
//!
//! A values file holds one number per line for consecutive months. Blank
//! lines and `#` comments are ignored. A line may also carry its month as
//! `YYYY-MM,value`, optionally under a `month,value` header, which is the
//! layout `ingest` writes as CSV; labelled files need no out-of-band start.

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use chrono::NaiveDate;

use crate::series::{aggregate_daily_to_monthly, DailyObservation, MonthStamp, MonthlyTimeSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Values,
    DailyCsv,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "values" => Ok(Self::Values),
            "daily_csv" | "daily-csv" => Ok(Self::DailyCsv),
            other => Err(format!(
                "unknown input format {other:?}, expected values or daily_csv"
            )),
        }
    }
}

#[derive(Debug)]
pub enum InputError {
    Io(std::io::Error),
    /// Malformed content; `line` is 1-based.
    Parse {
        line: usize,
        message: String,
    },
    /// A values file without month labels needs a start month.
    MissingStart,
    /// The input parsed but does not form a valid series.
    Series(crate::error::Error),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(e) => write!(f, "cannot read input: {e}"),
            InputError::Parse { line, message } => write!(f, "line {line}: {message}"),
            InputError::MissingStart => {
                f.write_str("values input without month labels needs --start YYYY-MM")
            }
            InputError::Series(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for InputError {}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError::Io(e)
    }
}

impl From<crate::error::Error> for InputError {
    fn from(e: crate::error::Error) -> Self {
        InputError::Series(e)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> InputError {
    InputError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_value(text: &str, line: usize) -> Result<f64, InputError> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| parse_error(line, format!("expected a number, found {:?}", text.trim())))?;
    if !v.is_finite() {
        return Err(parse_error(line, "value is not finite"));
    }
    Ok(v)
}

/// Parse values-format text. `start` is required unless lines carry months,
/// in which case it must agree with the first label when given.
pub fn parse_values(
    text: &str,
    start: Option<MonthStamp>,
) -> Result<MonthlyTimeSeries, InputError> {
    let mut values = Vec::new();
    let mut labelled: Option<bool> = None;
    let mut first_month = None;
    let mut expected: Option<MonthStamp> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split(',').map(str::trim).collect();
        if labelled.is_none() && fields.len() == 2 && fields[0].eq_ignore_ascii_case("month") {
            labelled = Some(true);
            continue;
        }
        let has_label = fields.len() == 2;
        if fields.len() > 2 {
            return Err(parse_error(line, "expected `value` or `YYYY-MM,value`"));
        }
        match labelled {
            Some(l) if l != has_label => {
                return Err(parse_error(line, "mixes labelled and unlabelled lines"));
            }
            _ => labelled = Some(has_label),
        }
        if has_label {
            let month: MonthStamp = fields[0]
                .parse()
                .map_err(|_| parse_error(line, format!("invalid month {:?}", fields[0])))?;
            if let Some(e) = expected {
                if month != e {
                    return Err(parse_error(
                        line,
                        format!("expected month {e}, found {month}"),
                    ));
                }
            } else {
                first_month = Some(month);
            }
            expected = Some(month.add_months(1));
            values.push(parse_value(fields[1], line)?);
        } else {
            values.push(parse_value(fields[0], line)?);
        }
    }
    let start = match (first_month, start) {
        (Some(first), Some(given)) if first != given => {
            return Err(parse_error(
                1,
                format!("labels start at {first} but --start is {given}"),
            ));
        }
        (Some(first), _) => first,
        (None, Some(given)) => given,
        (None, None) if values.is_empty() => return Err(crate::error::Error::EmptyInput.into()),
        (None, None) => return Err(InputError::MissingStart),
    };
    Ok(MonthlyTimeSeries::new(start, values)?)
}

/// Parse daily CSV with a `date,value` header and ISO-8601 dates.
pub fn parse_daily_csv<R: Read>(reader: R) -> Result<Vec<DailyObservation>, InputError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| parse_error(1, e.to_string()))?
        .clone();
    let position = |name: &str| {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or_else(|| {
                parse_error(
                    1,
                    format!("header must contain `date,value`, found {headers:?}"),
                )
            })
    };
    let (date_col, value_col) = (position("date")?, position("value")?);
    let mut out = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            parse_error(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let date_text = record.get(date_col).unwrap_or("");
        let date = NaiveDate::parse_from_str(date_text, "%Y-%m-%d")
            .map_err(|_| parse_error(line, format!("invalid date {date_text:?}")))?;
        let value = parse_value(record.get(value_col).unwrap_or(""), line)?;
        out.push(DailyObservation { date, value });
    }
    Ok(out)
}

/// Read a monthly series from `path` in the given format.
pub fn load_series(
    path: &Path,
    format: InputFormat,
    start: Option<MonthStamp>,
) -> Result<MonthlyTimeSeries, InputError> {
    match format {
        InputFormat::Values => parse_values(&std::fs::read_to_string(path)?, start),
        InputFormat::DailyCsv => {
            let daily = parse_daily_csv(std::fs::File::open(path)?)?;
            Ok(aggregate_daily_to_monthly(&daily)?)
        }
    }
}
