//! Forecast evaluation protocols, error metrics, structural stability and the
//! two-series amplitude comparison.

use std::fmt;

use crate::arima::{forecast_arima, select_model};
use crate::decomposition::{component_percentage, decompose_additive};
use crate::error::{Error, Result};
use crate::holt_winters::{fit_holt_winters, forecast_hw};
use crate::series::{MonthStamp, MonthlyTimeSeries, PERIOD};

/// Months of history every training window must contain.
pub const MIN_TRAINING: usize = 2 * PERIOD;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    HoltWinters,
    Arima,
}

/// Evaluation protocol, numbered as in the original study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodId {
    /// Holt-Winters, one fit, 12-month horizon.
    I,
    /// Holt-Winters, refit monthly, 1-month horizon.
    II,
    /// Holt-Winters on the trend plus past seasonal indices.
    III,
    /// ARIMA, one fit, 12-month horizon.
    IV,
    /// ARIMA, order re-selected monthly, 1-month horizon.
    V,
}

impl MethodId {
    pub fn fixed_origin(engine: Engine) -> Self {
        match engine {
            Engine::HoltWinters => MethodId::I,
            Engine::Arima => MethodId::IV,
        }
    }

    pub fn rolling(engine: Engine) -> Self {
        match engine {
            Engine::HoltWinters => MethodId::II,
            Engine::Arima => MethodId::V,
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MethodId::I => "I",
            MethodId::II => "II",
            MethodId::III => "III",
            MethodId::IV => "IV",
            MethodId::V => "V",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for MethodId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(MethodId::I),
            "II" | "2" => Ok(MethodId::II),
            "III" | "3" => Ok(MethodId::III),
            "IV" | "4" => Ok(MethodId::IV),
            "V" | "5" => Ok(MethodId::V),
            other => Err(format!("unknown method {other:?}, expected I..V")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForecastRow {
    pub month: MonthStamp,
    pub actual: f64,
    pub forecast: f64,
    /// Absolute percentage error, in percent.
    pub ape: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorSummary {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator).
    pub sd: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodReport {
    pub method_id: MethodId,
    pub rows: Vec<ForecastRow>,
    pub summary: ErrorSummary,
}

impl MethodReport {
    fn from_pairs(method_id: MethodId, pairs: Vec<(MonthStamp, f64, f64)>) -> Result<Self> {
        let rows = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (month, actual, forecast))| {
                let ape = absolute_percentage_error(actual, forecast)
                    .map_err(|_| Error::DivisionByZero(i))?;
                Ok(ForecastRow {
                    month,
                    actual,
                    forecast,
                    ape,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let apes: Vec<f64> = rows.iter().map(|r| r.ape).collect();
        Ok(Self {
            method_id,
            summary: summarize_errors(&apes)?,
            rows,
        })
    }
}

/// One month of the structural-stability comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityRow {
    pub month: MonthStamp,
    pub trend_a: f64,
    pub seasonal_a: f64,
    pub sum_a: f64,
    pub trend_b: f64,
    pub seasonal_b: f64,
    pub sum_b: f64,
    /// `(sum_b - sum_a) / sum_a * 100`, signed.
    pub variation_pct: f64,
}

/// Mean absolute component percentages of two series, index 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypothesisReport {
    pub seasonal_amplitude: [f64; 2],
    pub random_amplitude: [f64; 2],
    /// The first series is more seasonal than the second.
    pub seasonal_verdict: bool,
    /// The second series is more random than the first.
    pub random_verdict: bool,
}

pub fn absolute_percentage_error(actual: f64, forecast: f64) -> Result<f64> {
    if actual == 0.0 {
        return Err(Error::DivisionByZero(0));
    }
    Ok((forecast - actual).abs() / actual.abs() * 100.0)
}

pub fn summarize_errors(apes: &[f64]) -> Result<ErrorSummary> {
    let n = apes.len();
    if n < 2 {
        return Err(Error::InsufficientData(n));
    }
    let mean = apes.iter().sum::<f64>() / n as f64;
    let ss: f64 = apes.iter().map(|a| (a - mean) * (a - mean)).sum();
    Ok(ErrorSummary {
        min: apes.iter().copied().fold(f64::INFINITY, f64::min),
        max: apes.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        mean,
        sd: (ss / (n - 1) as f64).sqrt(),
    })
}

fn check_window(series: &MonthlyTimeSeries, from: MonthStamp, to: MonthStamp) -> Result<()> {
    if from > to || from < series.start() || to > series.end() {
        return Err(Error::OutOfRange {
            from,
            to,
            start: series.start(),
            end: series.end(),
        });
    }
    Ok(())
}

fn forecast_with(engine: Engine, train: &MonthlyTimeSeries, horizon: usize) -> Result<Vec<f64>> {
    match engine {
        Engine::HoltWinters => forecast_hw(&fit_holt_winters(train)?, horizon),
        Engine::Arima => forecast_arima(&select_model(train)?, horizon),
    }
}

/// Fit once on `[start, train_end]` and forecast the next `horizon` months.
pub fn run_fixed_origin(
    series: &MonthlyTimeSeries,
    engine: Engine,
    train_end: MonthStamp,
    horizon: usize,
) -> Result<MethodReport> {
    if horizon == 0 {
        return Err(Error::InvalidHorizon);
    }
    let last = train_end.add_months(horizon as i64);
    check_window(series, series.start(), last)?;
    let train = series.slice_window(series.start(), train_end)?;
    let forecasts = forecast_with(engine, &train, horizon)?;
    let pairs = forecasts
        .into_iter()
        .enumerate()
        .map(|(h, f)| {
            let month = train_end.add_months(h as i64 + 1);
            (month, series.value_at(month).expect("checked window"), f)
        })
        .collect();
    MethodReport::from_pairs(MethodId::fixed_origin(engine), pairs)
}

/// One-step forecasts for every month of `[eval_start, eval_end]`, each from a
/// model fitted on all earlier months.
///
/// With the ARIMA engine the order is re-selected for every month.
pub fn run_rolling(
    series: &MonthlyTimeSeries,
    engine: Engine,
    eval_start: MonthStamp,
    eval_end: MonthStamp,
) -> Result<MethodReport> {
    check_window(series, eval_start, eval_end)?;
    let history = series.start().months_until(eval_start);
    if history < MIN_TRAINING as i64 {
        return Err(Error::SeriesTooShort {
            len: history.max(0) as usize,
            required: MIN_TRAINING,
        });
    }
    let months: Vec<MonthStamp> = (0..=eval_start.months_until(eval_end))
        .map(|k| eval_start.add_months(k))
        .collect();
    let forecasts: Vec<Result<f64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = months
            .iter()
            .map(|&m| {
                scope.spawn(move || {
                    let train = series.slice_window(series.start(), m.add_months(-1))?;
                    Ok(forecast_with(engine, &train, 1)?[0])
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("rolling fit panicked"))
            .collect()
    });
    let pairs = months
        .iter()
        .zip(forecasts)
        .map(|(&m, f)| Ok((m, series.value_at(m).expect("checked window"), f?)))
        .collect::<Result<Vec<_>>>()?;
    MethodReport::from_pairs(MethodId::rolling(engine), pairs)
}

/// Forecast trend-plus-seasonal sums for the `eval_months` months starting
/// half a year before `train_end`.
///
/// The training trend ends six months before `train_end`; Holt-Winters
/// extends it and the training seasonal indices are added back. Actual sums
/// come from decomposing the whole series, so it must reach six months past
/// the evaluation window.
pub fn run_trend_seasonal(
    series_full: &MonthlyTimeSeries,
    train_end: MonthStamp,
    eval_months: usize,
) -> Result<MethodReport> {
    if eval_months == 0 {
        return Err(Error::InvalidHorizon);
    }
    let half = (PERIOD / 2) as i64;
    let first = train_end.add_months(1 - half);
    let last = first.add_months(eval_months as i64 - 1);
    check_window(series_full, series_full.start(), last.add_months(half))?;

    let train = decompose_additive(&series_full.slice_window(series_full.start(), train_end)?)?;
    let trend = train.trend_series()?;
    let trend_forecast = forecast_hw(&fit_holt_winters(&trend)?, eval_months)?;

    let full = decompose_additive(series_full)?;
    let pairs = trend_forecast
        .iter()
        .enumerate()
        .map(|(k, tf)| {
            let month = first.add_months(k as i64);
            let t = series_full.index_of(month).expect("checked window");
            let season = month.month_index();
            let actual = full.trend[t].expect("trend defined inside checked window")
                + full.seasonal_indices[season];
            (month, actual, tf + train.seasonal_indices[season])
        })
        .collect();
    MethodReport::from_pairs(MethodId::III, pairs)
}

/// Decompose two windows independently and compare their trend-plus-seasonal
/// sums over the months where both trends are defined.
pub fn structural_stability(
    series_full: &MonthlyTimeSeries,
    window_a: (MonthStamp, MonthStamp),
    window_b: (MonthStamp, MonthStamp),
) -> Result<Vec<StabilityRow>> {
    let a = decompose_additive(&series_full.slice_window(window_a.0, window_a.1)?)?;
    let b = decompose_additive(&series_full.slice_window(window_b.0, window_b.1)?)?;
    let mut rows = Vec::new();
    for (i, trend_a) in a.defined_trend() {
        let month = a.source.month_at(i);
        let Some(j) = b.source.index_of(month) else {
            continue;
        };
        let Some(trend_b) = b.trend[j] else {
            continue;
        };
        let (seasonal_a, seasonal_b) = (a.seasonal[i], b.seasonal[j]);
        let (sum_a, sum_b) = (trend_a + seasonal_a, trend_b + seasonal_b);
        if sum_a == 0.0 {
            return Err(Error::DivisionByZero(i));
        }
        rows.push(StabilityRow {
            month,
            trend_a,
            seasonal_a,
            sum_a,
            trend_b,
            seasonal_b,
            sum_b,
            variation_pct: (sum_b - sum_a) / sum_a * 100.0,
        });
    }
    if rows.is_empty() {
        return Err(Error::NoOverlap);
    }
    Ok(rows)
}

fn mean_abs(values: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = values.fold((0.0, 0usize), |(s, n), v| (s + v.abs(), n + 1));
    sum / n as f64
}

/// Seasonal percentages are averaged over every month, random percentages
/// over the months where the random component is defined.
fn amplitudes(series: &MonthlyTimeSeries) -> Result<(f64, f64)> {
    let d = decompose_additive(series)?;
    let seasonal: Vec<Option<f64>> = d.seasonal.iter().copied().map(Some).collect();
    let seasonal = component_percentage(series, &seasonal)?;
    let random = component_percentage(series, &d.random)?;
    Ok((
        mean_abs(seasonal.into_iter().flatten()),
        mean_abs(random.into_iter().flatten()),
    ))
}

pub fn compare_hypotheses(
    series_1: &MonthlyTimeSeries,
    series_2: &MonthlyTimeSeries,
) -> Result<HypothesisReport> {
    let (s1, r1) = amplitudes(series_1)?;
    let (s2, r2) = amplitudes(series_2)?;
    Ok(HypothesisReport {
        seasonal_amplitude: [s1, s2],
        random_amplitude: [r1, r2],
        seasonal_verdict: s1 > s2,
        random_verdict: r2 > r1,
    })
}
