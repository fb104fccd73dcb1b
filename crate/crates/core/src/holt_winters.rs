//! Additive Holt-Winters smoothing (level, changing slope, period-12 seasonal).
//!
//! State is initialized from a classical decomposition of the first two years:
//! a least-squares line through the defined trend gives the slope and the level
//! at the last month of the first year; the decomposition's seasonal indices
//! seed the seasonal state. The recursions then run from the 13th observation
//! onward and the smoothing constants are chosen by minimizing the one-step
//! squared error with a coarse grid followed by Nelder-Mead refinement.

use std::fmt;
use std::str::FromStr;

use crate::decomposition::decompose_additive;
use crate::error::{Error, Result};
use crate::optimize::{nelder_mead, NelderMeadOptions};
use crate::series::{MonthStamp, MonthlyTimeSeries, PERIOD};

const MIN_LEN: usize = 2 * PERIOD;
const GRID_STEPS: usize = 11;

/// Smoothing constants for level, slope and seasonal state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoltWintersParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl HoltWintersParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let p = Self { alpha, beta, gamma };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let ok = |v: f64| (0.0..=1.0).contains(&v);
        if ok(self.alpha) && ok(self.beta) && ok(self.gamma) {
            Ok(())
        } else {
            Err(Error::InvalidParams {
                alpha: self.alpha,
                beta: self.beta,
                gamma: self.gamma,
            })
        }
    }

    fn clamped(x: &[f64]) -> Self {
        Self {
            alpha: x[0].clamp(0.0, 1.0),
            beta: x[1].clamp(0.0, 1.0),
            gamma: x[2].clamp(0.0, 1.0),
        }
    }
}

/// Starting state for the recursions.
#[derive(Debug, Clone, PartialEq)]
pub struct InitialState {
    /// Level at the twelfth observation.
    pub level: f64,
    pub slope: f64,
    /// Indexed by calendar month, January = 0.
    pub seasonal: [f64; PERIOD],
}

#[derive(Debug, Clone, PartialEq)]
pub struct HoltWintersModel {
    pub params: HoltWintersParams,
    pub level: f64,
    pub trend_slope: f64,
    /// Most recent seasonal estimate for each calendar month, January = 0.
    pub seasonal_state: [f64; PERIOD],
    pub sse: f64,
    pub train_span: (MonthStamp, MonthStamp),
}

fn check_len(series: &MonthlyTimeSeries) -> Result<()> {
    if series.len() < MIN_LEN {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            required: MIN_LEN,
        });
    }
    Ok(())
}

pub fn initialize_state(series: &MonthlyTimeSeries) -> Result<InitialState> {
    check_len(series)?;
    let head = series.slice_window(series.start(), series.month_at(MIN_LEN - 1))?;
    let dec = decompose_additive(&head)?;

    let points: Vec<(f64, f64)> = dec.defined_trend().map(|(t, v)| (t as f64, v)).collect();
    let n = points.len() as f64;
    let mean_t = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_v = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points
        .iter()
        .map(|(t, v)| (t - mean_t) * (v - mean_v))
        .sum();
    let sxx: f64 = points.iter().map(|(t, _)| (t - mean_t).powi(2)).sum();
    let slope = sxy / sxx;
    let level = mean_v + slope * ((PERIOD - 1) as f64 - mean_t);

    Ok(InitialState {
        level,
        slope,
        seasonal: dec.seasonal_indices,
    })
}

struct Filtered {
    sse: f64,
    level: f64,
    slope: f64,
    seasonal: [f64; PERIOD],
}

fn filter(series: &MonthlyTimeSeries, init: &InitialState, p: HoltWintersParams) -> Filtered {
    let HoltWintersParams { alpha, beta, gamma } = p;
    let mut level = init.level;
    let mut slope = init.slope;
    let mut seasonal = init.seasonal;
    let mut sse = 0.0;
    for (t, &y) in series.values().iter().enumerate().skip(PERIOD) {
        let m = series.month_at(t).month_index();
        let s_prev = seasonal[m];
        let err = y - (level + slope + s_prev);
        sse += err * err;
        let new_level = alpha * (y - s_prev) + (1.0 - alpha) * (level + slope);
        slope = beta * (new_level - level) + (1.0 - beta) * slope;
        seasonal[m] = gamma * (y - new_level) + (1.0 - gamma) * s_prev;
        level = new_level;
    }
    Filtered {
        sse,
        level,
        slope,
        seasonal,
    }
}

/// Sum of squared one-step-ahead errors over observations 13..n.
pub fn one_step_sse(series: &MonthlyTimeSeries, params: HoltWintersParams) -> Result<f64> {
    params.validate()?;
    let init = initialize_state(series)?;
    Ok(filter(series, &init, params).sse)
}

/// Fit all three smoothing constants by SSE minimization.
///
/// The 11x11x11 grid over `[0,1]^3` is scanned in lexicographic order and the
/// first minimum wins, so flat surfaces resolve to the smallest parameters.
/// Nelder-Mead then refines from that point and is kept only if it improves.
pub fn fit_holt_winters(series: &MonthlyTimeSeries) -> Result<HoltWintersModel> {
    let init = initialize_state(series)?;
    let sse_at = |p: HoltWintersParams| filter(series, &init, p).sse;

    let grid = |i: usize| i as f64 / (GRID_STEPS - 1) as f64;
    let mut best = (f64::INFINITY, HoltWintersParams::clamped(&[0.0, 0.0, 0.0]));
    for a in 0..GRID_STEPS {
        for b in 0..GRID_STEPS {
            for g in 0..GRID_STEPS {
                let p = HoltWintersParams::clamped(&[grid(a), grid(b), grid(g)]);
                let v = sse_at(p);
                if v < best.0 {
                    best = (v, p);
                }
            }
        }
    }

    let objective = |x: &[f64]| {
        let outside: f64 = x.iter().map(|v| (-v).max(0.0) + (v - 1.0).max(0.0)).sum();
        let v = sse_at(HoltWintersParams::clamped(x));
        v + outside * (1.0 + v) * 1e3
    };
    let start = [best.1.alpha, best.1.beta, best.1.gamma];
    let refined = nelder_mead(objective, &start, NelderMeadOptions::default());
    let candidate = HoltWintersParams::clamped(&refined.point);
    let params = if sse_at(candidate) < best.0 {
        candidate
    } else {
        best.1
    };

    let f = filter(series, &init, params);
    Ok(HoltWintersModel {
        params,
        level: f.level,
        trend_slope: f.slope,
        seasonal_state: f.seasonal,
        sse: f.sse,
        train_span: (series.start(), series.end()),
    })
}

impl HoltWintersModel {
    /// Build a model from explicit state, e.g. to forecast from known values.
    pub fn from_state(
        params: HoltWintersParams,
        level: f64,
        trend_slope: f64,
        seasonal_state: [f64; PERIOD],
        train_span: (MonthStamp, MonthStamp),
    ) -> Self {
        Self {
            params,
            level,
            trend_slope,
            seasonal_state,
            sse: 0.0,
            train_span,
        }
    }

    pub fn train_end(&self) -> MonthStamp {
        self.train_span.1
    }

    /// Key-value summary block.
    pub fn summary(&self) -> String {
        self.to_string()
    }
}

pub fn forecast_hw(model: &HoltWintersModel, horizon: usize) -> Result<Vec<f64>> {
    if horizon < 1 {
        return Err(Error::InvalidHorizon);
    }
    let end = model.train_end();
    Ok((1..=horizon)
        .map(|h| {
            let m = end.add_months(h as i64).month_index();
            model.level + h as f64 * model.trend_slope + model.seasonal_state[m]
        })
        .collect())
}

impl fmt::Display for HoltWintersModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha={}", self.params.alpha)?;
        writeln!(f, "beta={}", self.params.beta)?;
        writeln!(f, "gamma={}", self.params.gamma)?;
        writeln!(f, "sse={}", self.sse)?;
        writeln!(f, "level={}", self.level)?;
        writeln!(f, "slope={}", self.trend_slope)?;
        let seasonal: Vec<String> = self.seasonal_state.iter().map(|s| s.to_string()).collect();
        writeln!(f, "seasonal={}", seasonal.join(","))?;
        writeln!(f, "train_start={}", self.train_span.0)?;
        write!(f, "train_end={}", self.train_span.1)
    }
}

/// Error returned when a summary block cannot be read back.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("malformed model summary: {0}")]
pub struct SummaryParseError(pub String);

impl FromStr for HoltWintersModel {
    type Err = SummaryParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut fields = std::collections::HashMap::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| SummaryParseError(line.to_string()))?;
            fields.insert(k.trim(), v.trim());
        }
        let get = |k: &str| {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| SummaryParseError(format!("missing {k}")))
        };
        let num = |k: &str| -> std::result::Result<f64, SummaryParseError> {
            get(k)?
                .parse()
                .map_err(|_| SummaryParseError(format!("bad {k}")))
        };
        let month = |k: &str| -> std::result::Result<MonthStamp, SummaryParseError> {
            get(k)?
                .parse()
                .map_err(|_| SummaryParseError(format!("bad {k}")))
        };
        let seasonal_vals: Vec<f64> = get("seasonal")?
            .split(',')
            .map(|v| v.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| SummaryParseError("bad seasonal".into()))?;
        let seasonal_state: [f64; PERIOD] = seasonal_vals
            .try_into()
            .map_err(|_| SummaryParseError("seasonal needs 12 values".into()))?;
        let params = HoltWintersParams::new(num("alpha")?, num("beta")?, num("gamma")?)
            .map_err(|e| SummaryParseError(e.to_string()))?;
        Ok(Self {
            params,
            level: num("level")?,
            trend_slope: num("slope")?,
            seasonal_state,
            sse: num("sse")?,
            train_span: (month("train_start")?, month("train_end")?),
        })
    }
}
