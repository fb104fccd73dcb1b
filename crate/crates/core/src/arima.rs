//! ARIMA(p, d, q) with optional drift, fitted by conditional sum of squares.
//!
//! Order selection picks `d` with a lag-1 autocorrelation / variance
//! heuristic and then searches `(p, q, drift)` by AICc, either stepwise from a
//! handful of small models or exhaustively over `p, q <= 5`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::optimize::{nelder_mead, NelderMeadOptions};
use crate::series::MonthlyTimeSeries;

pub const MAX_P: usize = 5;
pub const MAX_Q: usize = 5;
pub const MAX_D: usize = 2;
/// Coefficient magnitude bound standing in for stationarity/invertibility.
pub const COEFF_BOUND: f64 = 0.99;

/// Largest `p + q` visited by the stepwise search.
pub const MAX_STEPWISE_ORDER: usize = 5;

const ACF_LIMIT: f64 = 0.9;
const MIN_RESIDUALS: usize = 10;
/// Leading differenced values every fit conditions on.
const CONDITION: usize = MAX_P;
const BOUNDARY_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArimaOrder {
    pub p: usize,
    pub d: usize,
    pub q: usize,
    pub drift: bool,
}

impl ArimaOrder {
    pub fn new(p: usize, d: usize, q: usize, drift: bool) -> Result<Self> {
        if p > MAX_P || q > MAX_Q || d > MAX_D {
            return Err(Error::InvalidOrder(format!(
                "({p},{d},{q}) exceeds p,q <= {MAX_P}, d <= {MAX_D}"
            )));
        }
        if drift && d == 0 {
            return Err(Error::InvalidOrder(
                "drift requires d >= 1; d = 0 fits a mean term".into(),
            ));
        }
        Ok(Self { p, d, q, drift })
    }

    /// Whether a constant (drift or mean) is part of the model.
    fn has_constant(&self) -> bool {
        self.drift || self.d == 0
    }

    /// Number of estimated parameters, innovation variance included.
    pub fn parameter_count(&self) -> usize {
        self.p + self.q + usize::from(self.has_constant()) + 1
    }
}

impl fmt::Display for ArimaOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.d, self.q)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArimaModel {
    pub order: ArimaOrder,
    pub ar_coeffs: Vec<f64>,
    pub ma_coeffs: Vec<f64>,
    /// Drift per step when `order.drift`, the process mean when `d == 0`, else 0.
    pub mu: f64,
    pub sigma2: f64,
    pub css: f64,
    pub aicc: f64,
    /// Last `max(p, q, 1) + d` training observations.
    pub tail_observations: Vec<f64>,
    /// Last `max(p, q, 1)` in-sample residuals.
    pub tail_residuals: Vec<f64>,
}

impl ArimaModel {
    /// Assemble a model from known coefficients and training tail.
    pub fn from_parts(
        order: ArimaOrder,
        ar_coeffs: Vec<f64>,
        ma_coeffs: Vec<f64>,
        mu: f64,
        tail_observations: Vec<f64>,
        tail_residuals: Vec<f64>,
    ) -> Result<Self> {
        let lag = order.p.max(order.q).max(1);
        if ar_coeffs.len() != order.p
            || ma_coeffs.len() != order.q
            || tail_observations.len() != lag + order.d
            || tail_residuals.len() != lag
        {
            return Err(Error::InvalidOrder(format!(
                "coefficients or tail do not match order {order}"
            )));
        }
        Ok(Self {
            order,
            ar_coeffs,
            ma_coeffs,
            mu,
            sigma2: f64::NAN,
            css: f64::NAN,
            aicc: f64::NAN,
            tail_observations,
            tail_residuals,
        })
    }

    pub fn drift_value(&self) -> f64 {
        if self.order.drift {
            self.mu
        } else {
            0.0
        }
    }

    /// Key-value summary block.
    pub fn summary(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ArimaModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[f64]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(f, "order={}", self.order)?;
        writeln!(f, "drift={}", self.drift_value())?;
        writeln!(f, "ar={}", join(&self.ar_coeffs))?;
        writeln!(f, "ma={}", join(&self.ma_coeffs))?;
        writeln!(f, "sigma2={}", self.sigma2)?;
        write!(f, "aicc={}", self.aicc)
    }
}

/// Apply first differencing `d` times.
pub fn difference(series: &[f64], d: usize) -> Result<Vec<f64>> {
    if series.len() <= d {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            required: d + 1,
        });
    }
    let mut out = series.to_vec();
    for _ in 0..d {
        out = out.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Ok(out)
}

/// Inverse of [`difference`]: `heads[k]` is the first value of the k-times
/// differenced series, for `k = 0..d`.
pub fn integrate(diffed: &[f64], heads: &[f64]) -> Vec<f64> {
    let mut out = diffed.to_vec();
    for &head in heads.iter().rev() {
        let mut level = Vec::with_capacity(out.len() + 1);
        let mut acc = head;
        level.push(acc);
        for v in &out {
            acc += v;
            level.push(acc);
        }
        out = level;
    }
    out
}

/// Continue a series forward: `tails[k]` is the last value of the k-times
/// differenced series and `steps` are future values of the d-times
/// differenced series.
pub fn integrate_forward(steps: &[f64], tails: &[f64]) -> Vec<f64> {
    let mut out = steps.to_vec();
    for &tail in tails.iter().rev() {
        let mut acc = tail;
        for v in out.iter_mut() {
            acc += *v;
            *v = acc;
        }
    }
    out
}

/// One-step residuals from `start` on; earlier residuals are zero.
fn residuals(z: &[f64], ar: &[f64], ma: &[f64], start: usize) -> Vec<f64> {
    debug_assert!(start >= ar.len());
    let mut e = vec![0.0; z.len()];
    for t in start..z.len() {
        let mut v = z[t];
        for (i, phi) in ar.iter().enumerate() {
            v -= phi * z[t - 1 - i];
        }
        for (j, theta) in ma.iter().enumerate() {
            if t > j {
                v -= theta * e[t - 1 - j];
            }
        }
        e[t] = v;
    }
    e
}

/// Conditional sum of squared residuals of the ARMA part on `diffed - mu`,
/// with pre-sample residuals taken as zero.
pub fn css_objective(diffed: &[f64], order: &ArimaOrder, ar: &[f64], ma: &[f64], mu: f64) -> f64 {
    assert_eq!(ar.len(), order.p, "AR coefficient count must equal p");
    assert_eq!(ma.len(), order.q, "MA coefficient count must equal q");
    let z: Vec<f64> = diffed.iter().map(|v| v - mu).collect();
    residuals(&z, ar, ma, order.p)[order.p..]
        .iter()
        .map(|e| e * e)
        .sum()
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn sample_variance(v: &[f64]) -> f64 {
    if v.len() < 2 {
        return 0.0;
    }
    let m = mean(v);
    v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (v.len() - 1) as f64
}

/// Lag-1 sample autocorrelation; 0 for a constant sequence.
pub fn lag1_autocorrelation(v: &[f64]) -> f64 {
    let m = mean(v);
    let denom: f64 = v.iter().map(|x| (x - m).powi(2)).sum();
    if denom == 0.0 {
        return 0.0;
    }
    v.windows(2).map(|w| (w[0] - m) * (w[1] - m)).sum::<f64>() / denom
}

fn aicc(m: usize, sigma2: f64, k: usize) -> f64 {
    let (m_f, k_f) = (m as f64, k as f64);
    if m <= k + 1 {
        return f64::INFINITY;
    }
    m_f * sigma2.ln() + 2.0 * k_f + 2.0 * k_f * (k_f + 1.0) / (m_f - k_f - 1.0)
}

/// Fit `order` by conditional sum of squares, starting from zero coefficients.
///
/// Every order conditions on the first five differenced values: residuals
/// before the sixth are zero and the sum starts there. `css`, `sigma2` and
/// `aicc` are therefore comparable across candidates, and a model nested in a
/// larger one has the same residuals under either parameterization.
pub fn fit_arima(series: &MonthlyTimeSeries, order: ArimaOrder) -> Result<ArimaModel> {
    fit_arima_from(series, order, None)
}

/// Like [`fit_arima`], starting the optimizer at `start = [ar.., ma..]`.
pub fn fit_arima_from(
    series: &MonthlyTimeSeries,
    order: ArimaOrder,
    start: Option<&[f64]>,
) -> Result<ArimaModel> {
    let ArimaOrder { p, d, q, .. } = order;
    let y = series.values();
    let required = MIN_RESIDUALS + CONDITION + q + d;
    if y.len() < required {
        return Err(Error::SeriesTooShort {
            len: y.len(),
            required,
        });
    }
    let z = difference(y, d)?;
    let n_coef = p + q;

    // The constant is optimized on a scale of one standard deviation around
    // the sample mean of the differenced series.
    let estimate_mean = order.has_constant();
    let z_mean = mean(&z);
    let z_scale = sample_variance(&z).sqrt().max(1e-12);
    let mu_of = |x: &[f64]| {
        if estimate_mean {
            z_mean + x[n_coef] * z_scale
        } else {
            0.0
        }
    };

    let css_at = |ar: &[f64], ma: &[f64], mu: f64| -> f64 {
        let centered: Vec<f64> = z.iter().map(|v| v - mu).collect();
        residuals(&centered, ar, ma, CONDITION)[CONDITION..]
            .iter()
            .map(|e| e * e)
            .sum()
    };
    let origin = vec![0.0; n_coef + 1];
    let baseline = css_at(&origin[..p], &origin[..q], mu_of(&origin));
    let objective = |x: &[f64]| {
        let excess: f64 = x[..n_coef]
            .iter()
            .map(|c| (c.abs() - COEFF_BOUND).max(0.0))
            .sum();
        let clamped: Vec<f64> = x[..n_coef]
            .iter()
            .map(|c| c.clamp(-COEFF_BOUND, COEFF_BOUND))
            .collect();
        let v = css_at(&clamped[..p], &clamped[p..], mu_of(x));
        v + excess * (1.0 + baseline) * 1e3
    };

    let mut x0 = vec![0.0; n_coef + usize::from(estimate_mean)];
    if let Some(s) = start {
        if s.len() != n_coef {
            return Err(Error::InvalidOrder(format!(
                "start point has {} values, order {order} needs {n_coef}",
                s.len()
            )));
        }
        x0[..n_coef].copy_from_slice(s);
    }
    let opts = NelderMeadOptions {
        initial_step: 0.1,
        diameter_tol: 1e-6,
        max_iterations: 20_000,
    };
    let found = nelder_mead(objective, &x0, opts);
    // An optimum pressed against the box means the unconstrained one lies outside.
    if !found.converged
        || !found.value.is_finite()
        || found.point[..n_coef]
            .iter()
            .any(|c| c.abs() >= COEFF_BOUND - BOUNDARY_MARGIN)
    {
        return Err(Error::NonConvergent);
    }

    let x = &found.point;
    let ar = x[..p].to_vec();
    let ma = x[p..n_coef].to_vec();
    let mu = mu_of(x);
    let centered: Vec<f64> = z.iter().map(|v| v - mu).collect();
    let e = residuals(&centered, &ar, &ma, CONDITION);
    let css: f64 = e[CONDITION..].iter().map(|r| r * r).sum();
    let m = z.len() - CONDITION;
    let sigma2 = css / m as f64;

    let lag = p.max(q).max(1);
    Ok(ArimaModel {
        order,
        ar_coeffs: ar,
        ma_coeffs: ma,
        mu,
        sigma2,
        css,
        aicc: aicc(m, sigma2, order.parameter_count()),
        tail_observations: y[y.len() - lag - d..].to_vec(),
        tail_residuals: e[e.len() - lag..].to_vec(),
    })
}

/// Smallest `d` whose differenced series has lag-1 autocorrelation below 0.9
/// and would not lose variance by differencing once more. Falls back to 2.
pub fn select_difference_order(values: &[f64]) -> Result<usize> {
    for d in 0..MAX_D {
        let z = difference(values, d)?;
        let z_next = difference(values, d + 1)?;
        if lag1_autocorrelation(&z) < ACF_LIMIT && sample_variance(&z_next) >= sample_variance(&z) {
            return Ok(d);
        }
    }
    Ok(MAX_D)
}

/// How [`select_model_with`] explores `(p, q, drift)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Neighbourhood descent from a few small models, `p + q <= 5`.
    #[default]
    Stepwise,
    /// Every `p, q` in `0..=5`.
    Exhaustive,
}

fn drift_options(d: usize) -> &'static [bool] {
    if d == 1 {
        &[false, true]
    } else {
        &[false]
    }
}

/// Every order the exhaustive search fits for this series.
pub fn candidate_orders(values: &[f64]) -> Result<Vec<ArimaOrder>> {
    let d = select_difference_order(values)?;
    let mut out = Vec::new();
    for p in 0..=MAX_P {
        for q in 0..=MAX_Q {
            for &drift in drift_options(d) {
                out.push(ArimaOrder::new(p, d, q, drift)?);
            }
        }
    }
    Ok(out)
}

fn selection_cmp(a: &ArimaModel, b: &ArimaModel) -> std::cmp::Ordering {
    let key = |m: &ArimaModel| (m.order.p + m.order.q, m.order.p, m.order.drift);
    a.aicc.total_cmp(&b.aicc).then(key(a).cmp(&key(b)))
}

/// Fits orders concurrently and memoizes them; failed fits are `None`.
struct FitCache<'a> {
    series: &'a MonthlyTimeSeries,
    fits: HashMap<ArimaOrder, Option<ArimaModel>>,
}

impl<'a> FitCache<'a> {
    fn new(series: &'a MonthlyTimeSeries) -> Self {
        Self {
            series,
            fits: HashMap::new(),
        }
    }

    /// Fit the orders not seen yet and return the best of `orders`.
    fn best_of(&mut self, orders: &[ArimaOrder]) -> Option<ArimaModel> {
        let fresh: Vec<ArimaOrder> = orders
            .iter()
            .copied()
            .filter(|o| !self.fits.contains_key(o))
            .collect();
        let series = self.series;
        let results: Vec<Option<ArimaModel>> = std::thread::scope(|scope| {
            let handles: Vec<_> = fresh
                .iter()
                .map(|&o| scope.spawn(move || fit_arima(series, o).ok()))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("candidate fit panicked"))
                .collect()
        });
        self.fits.extend(fresh.into_iter().zip(results));
        orders
            .iter()
            .filter_map(|o| self.fits.get(o).and_then(Option::as_ref))
            .filter(|m| !m.aicc.is_nan())
            .min_by(|a, b| selection_cmp(a, b))
            .cloned()
    }
}

fn stepwise_neighbours(o: ArimaOrder) -> Vec<ArimaOrder> {
    let mut out = Vec::new();
    let moves = [
        (-1, 0),
        (1, 0),
        (0, -1),
        (0, 1),
        (-1, -1),
        (1, 1),
        (-1, 1),
        (1, -1),
    ];
    for (dp, dq) in moves {
        let (p, q) = (o.p as i64 + dp, o.q as i64 + dq);
        if p < 0 || q < 0 || (p + q) as usize > MAX_STEPWISE_ORDER {
            continue;
        }
        if let Ok(n) = ArimaOrder::new(p as usize, o.d, q as usize, o.drift) {
            out.push(n);
        }
    }
    if o.d == 1 {
        out.push(ArimaOrder {
            drift: !o.drift,
            ..o
        });
    }
    out
}

/// Minimum-AICc model found by [`SearchStrategy::Stepwise`].
pub fn select_model(series: &MonthlyTimeSeries) -> Result<ArimaModel> {
    select_model_with(series, SearchStrategy::Stepwise)
}

/// Choose `d` by [`select_difference_order`], then the minimum-AICc
/// `(p, q, drift)` under `strategy`.
///
/// Ties go to the smaller `p + q`, then the smaller `p`, then no drift.
pub fn select_model_with(
    series: &MonthlyTimeSeries,
    strategy: SearchStrategy,
) -> Result<ArimaModel> {
    if series.len() < 24 {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            required: 24,
        });
    }
    let mut cache = FitCache::new(series);
    let best = match strategy {
        SearchStrategy::Exhaustive => cache.best_of(&candidate_orders(series.values())?),
        SearchStrategy::Stepwise => {
            let d = select_difference_order(series.values())?;
            let with_constant = d == 1;
            let mut start = vec![
                ArimaOrder::new(2, d, 2, with_constant)?,
                ArimaOrder::new(0, d, 0, with_constant)?,
                ArimaOrder::new(1, d, 0, with_constant)?,
                ArimaOrder::new(0, d, 1, with_constant)?,
            ];
            if with_constant {
                start.push(ArimaOrder::new(0, d, 0, false)?);
            }
            let mut best = cache.best_of(&start);
            while let Some(current) = best.clone() {
                match cache.best_of(&stepwise_neighbours(current.order)) {
                    Some(next) if selection_cmp(&next, &current).is_lt() => best = Some(next),
                    _ => break,
                }
            }
            best
        }
    };
    best.ok_or(Error::SelectionFailed)
}

pub fn select_order(series: &MonthlyTimeSeries) -> Result<ArimaOrder> {
    select_model(series).map(|m| m.order)
}

pub fn forecast_arima(model: &ArimaModel, horizon: usize) -> Result<Vec<f64>> {
    if horizon < 1 {
        return Err(Error::InvalidHorizon);
    }
    let ArimaOrder { p, d, .. } = model.order;
    let obs = &model.tail_observations;

    // Last value of each differencing level, needed to integrate back.
    let tails: Vec<f64> = (0..d)
        .map(|k| *difference(obs, k).expect("tail covers d").last().unwrap())
        .collect();
    let mut z: Vec<f64> = difference(obs, d)?
        .into_iter()
        .map(|v| v - model.mu)
        .collect();
    let mut e = model.tail_residuals.clone();

    let mut steps = Vec::with_capacity(horizon);
    for _ in 0..horizon {
        let mut next = 0.0;
        for (i, phi) in model.ar_coeffs.iter().enumerate().take(p) {
            next += phi * z[z.len() - 1 - i];
        }
        for (j, theta) in model.ma_coeffs.iter().enumerate() {
            next += theta * e[e.len() - 1 - j];
        }
        z.push(next);
        e.push(0.0);
        steps.push(next + model.mu);
    }
    Ok(integrate_forward(&steps, &tails))
}
