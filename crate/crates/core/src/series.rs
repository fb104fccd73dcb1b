//! Calendar-anchored monthly series and daily-to-monthly aggregation.

use std::fmt;
use std::str::FromStr;

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};

/// Number of months in a seasonal cycle.
pub const PERIOD: usize = 12;

/// A calendar month. Ordering is `(year, month)` lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonthStamp {
    year: i32,
    month: u32,
}

impl MonthStamp {
    pub fn new(year: i32, month: u32) -> Result<Self> {
        if !(1..=12).contains(&month) {
            return Err(Error::InvalidMonth { year, month });
        }
        Ok(Self { year, month })
    }

    pub fn year(self) -> i32 {
        self.year
    }

    /// Month number in `1..=12`.
    pub fn month(self) -> u32 {
        self.month
    }

    /// Zero-based month index, January = 0.
    pub fn month_index(self) -> usize {
        (self.month - 1) as usize
    }

    fn ordinal(self) -> i64 {
        self.year as i64 * 12 + (self.month as i64 - 1)
    }

    fn from_ordinal(ord: i64) -> Self {
        Self {
            year: ord.div_euclid(12) as i32,
            month: ord.rem_euclid(12) as u32 + 1,
        }
    }

    /// Shift by a signed number of months.
    pub fn add_months(self, n: i64) -> Self {
        Self::from_ordinal(self.ordinal() + n)
    }

    /// Signed number of months from `self` to `other`.
    pub fn months_until(self, other: MonthStamp) -> i64 {
        other.ordinal() - self.ordinal()
    }

    pub fn of_date(date: NaiveDate) -> Self {
        Self {
            year: date.year(),
            month: date.month(),
        }
    }
}

impl fmt::Display for MonthStamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

impl FromStr for MonthStamp {
    type Err = Error;

    /// Parses `YYYY-MM`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidMonth { year: 0, month: 0 };
        let (y, m) = s.trim().split_once('-').ok_or_else(bad)?;
        let year: i32 = y.parse().map_err(|_| bad())?;
        let month: u32 = m.parse().map_err(|_| bad())?;
        MonthStamp::new(year, month)
    }
}

/// One daily index reading. Non-trading days are simply absent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DailyObservation {
    pub date: NaiveDate,
    pub value: f64,
}

/// Gapless monthly observations starting at `start`, period 12.
#[derive(Debug, Clone, PartialEq)]
pub struct MonthlyTimeSeries {
    start: MonthStamp,
    values: Vec<f64>,
}

impl MonthlyTimeSeries {
    pub fn new(start: MonthStamp, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { start, values })
    }

    pub fn start(&self) -> MonthStamp {
        self.start
    }

    /// Last month covered.
    pub fn end(&self) -> MonthStamp {
        self.start.add_months(self.values.len() as i64 - 1)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn period(&self) -> usize {
        PERIOD
    }

    pub fn month_at(&self, t: usize) -> MonthStamp {
        self.start.add_months(t as i64)
    }

    /// Position of `month` in the series, if covered.
    pub fn index_of(&self, month: MonthStamp) -> Option<usize> {
        let off = self.start.months_until(month);
        (off >= 0 && (off as usize) < self.values.len()).then_some(off as usize)
    }

    pub fn value_at(&self, month: MonthStamp) -> Option<f64> {
        self.index_of(month).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (MonthStamp, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (self.month_at(i), v))
    }

    /// Sub-series covering `from..=to`.
    pub fn slice_window(&self, from: MonthStamp, to: MonthStamp) -> Result<Self> {
        let out_of_range = || Error::OutOfRange {
            from,
            to,
            start: self.start,
            end: self.end(),
        };
        if from > to {
            return Err(out_of_range());
        }
        let (a, b) = match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(out_of_range()),
        };
        Ok(Self {
            start: from,
            values: self.values[a..=b].to_vec(),
        })
    }

    /// Same calendar anchor, new values (used for derived series such as a trend).
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        Self::new(self.start, values)
    }
}

/// Average daily readings into one value per calendar month.
///
/// Every month between the first and last observation must contain at least
/// one reading.
pub fn aggregate_daily_to_monthly(daily: &[DailyObservation]) -> Result<MonthlyTimeSeries> {
    let first = daily.first().ok_or(Error::EmptyInput)?;
    for (i, w) in daily.windows(2).enumerate() {
        if w[1].date < w[0].date {
            return Err(Error::Unsorted(i + 1));
        }
    }
    if let Some(i) = daily.iter().position(|o| !o.value.is_finite()) {
        return Err(Error::NonFinite(i));
    }

    let start = MonthStamp::of_date(first.date);
    let last = MonthStamp::of_date(daily[daily.len() - 1].date);
    let n = start.months_until(last) as usize + 1;
    let mut sums = vec![0.0; n];
    let mut counts = vec![0usize; n];
    for obs in daily {
        let i = start.months_until(MonthStamp::of_date(obs.date)) as usize;
        sums[i] += obs.value;
        counts[i] += 1;
    }
    let values = sums
        .iter()
        .zip(&counts)
        .enumerate()
        .map(|(i, (&s, &c))| {
            if c == 0 {
                Err(Error::GapInSeries(start.add_months(i as i64)))
            } else {
                Ok(s / c as f64)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    MonthlyTimeSeries::new(start, values)
}
