//! Classical additive decomposition: 2x12 centered moving-average trend,
//! centered monthly seasonal indices and the leftover random component.

use crate::error::{Error, Result};
use crate::series::{MonthlyTimeSeries, PERIOD};

const HALF: usize = PERIOD / 2;

/// Trend, seasonal and random parts of a monthly series.
///
/// `trend` and `random` are `None` for the first and last six months, where
/// the centered average is not defined.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionResult {
    pub source: MonthlyTimeSeries,
    pub trend: Vec<Option<f64>>,
    pub seasonal: Vec<f64>,
    /// January..December.
    pub seasonal_indices: [f64; PERIOD],
    pub random: Vec<Option<f64>>,
}

impl DecompositionResult {
    /// Defined trend values together with their positions.
    pub fn defined_trend(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.trend
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.map(|v| (i, v)))
    }

    /// The contiguous defined part of the trend as its own series.
    pub fn trend_series(&self) -> Result<MonthlyTimeSeries> {
        let (first, _) = self.defined_trend().next().ok_or(Error::SeriesTooShort {
            len: self.source.len(),
            required: PERIOD + 1,
        })?;
        let values = self.defined_trend().map(|(_, v)| v).collect();
        MonthlyTimeSeries::new(self.source.month_at(first), values)
    }

    /// Trend plus seasonal where the trend is defined.
    pub fn trend_plus_seasonal(&self) -> Vec<Option<f64>> {
        self.trend
            .iter()
            .zip(&self.seasonal)
            .map(|(t, s)| t.map(|t| t + s))
            .collect()
    }
}

/// 2x12 centered moving average. Positions closer than six months to either
/// end are `None`.
pub fn centered_moving_average_trend(series: &MonthlyTimeSeries) -> Result<Vec<Option<f64>>> {
    let y = series.values();
    let n = y.len();
    if n < PERIOD + 1 {
        return Err(Error::SeriesTooShort {
            len: n,
            required: PERIOD + 1,
        });
    }
    Ok((0..n)
        .map(|t| {
            (t >= HALF && t + HALF < n).then(|| {
                let inner: f64 = y[t + 1 - HALF..t + HALF].iter().sum();
                (0.5 * y[t - HALF] + inner + 0.5 * y[t + HALF]) / PERIOD as f64
            })
        })
        .collect())
}

/// Mean detrended value per calendar month, centered to sum to zero.
pub fn seasonal_indices(
    series: &MonthlyTimeSeries,
    trend: &[Option<f64>],
) -> Result<[f64; PERIOD]> {
    if trend.len() != series.len() {
        return Err(Error::LengthMismatch {
            series: series.len(),
            component: trend.len(),
        });
    }
    let mut sums = [0.0; PERIOD];
    let mut counts = [0usize; PERIOD];
    for (t, (&y, tr)) in series.values().iter().zip(trend).enumerate() {
        if let Some(tr) = tr {
            let m = series.month_at(t).month_index();
            sums[m] += y - tr;
            counts[m] += 1;
        }
    }
    let mut raw = [0.0; PERIOD];
    for m in 0..PERIOD {
        if counts[m] == 0 {
            return Err(Error::InsufficientCoverage(m as u32 + 1));
        }
        raw[m] = sums[m] / counts[m] as f64;
    }
    let mean = raw.iter().sum::<f64>() / PERIOD as f64;
    Ok(raw.map(|r| r - mean))
}

pub fn decompose_additive(series: &MonthlyTimeSeries) -> Result<DecompositionResult> {
    if series.len() < 2 * PERIOD {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            required: 2 * PERIOD,
        });
    }
    let trend = centered_moving_average_trend(series)?;
    let indices = seasonal_indices(series, &trend)?;
    let seasonal: Vec<f64> = (0..series.len())
        .map(|t| indices[series.month_at(t).month_index()])
        .collect();
    let random = series
        .values()
        .iter()
        .zip(&trend)
        .zip(&seasonal)
        .map(|((y, tr), s)| tr.map(|tr| y - (tr + s)))
        .collect();
    Ok(DecompositionResult {
        source: series.clone(),
        trend,
        seasonal,
        seasonal_indices: indices,
        random,
    })
}

/// Signed `component / value * 100` for each defined component entry.
pub fn component_percentage(
    series: &MonthlyTimeSeries,
    component: &[Option<f64>],
) -> Result<Vec<Option<f64>>> {
    if component.len() != series.len() {
        return Err(Error::LengthMismatch {
            series: series.len(),
            component: component.len(),
        });
    }
    series
        .values()
        .iter()
        .zip(component)
        .enumerate()
        .map(|(t, (&y, c))| match c {
            None => Ok(None),
            Some(_) if y == 0.0 => Err(Error::DivisionByZero(t)),
            Some(c) => Ok(Some(c / y * 100.0)),
        })
        .collect()
}
