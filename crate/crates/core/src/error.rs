use thiserror::Error;

use crate::series::MonthStamp;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("input contains no observations")]
    EmptyInput,

    #[error("no observations for {0}; monthly series must be contiguous")]
    GapInSeries(MonthStamp),

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("invalid month {year}-{month}")]
    InvalidMonth { year: i32, month: u32 },

    #[error("observations are not sorted by date at position {0}")]
    Unsorted(usize),

    #[error("window {from}..{to} lies outside the series span {start}..{end}")]
    OutOfRange {
        from: MonthStamp,
        to: MonthStamp,
        start: MonthStamp,
        end: MonthStamp,
    },

    #[error("series has {len} observations, at least {required} are required")]
    SeriesTooShort { len: usize, required: usize },

    #[error("calendar month {0} has no detrended observation")]
    InsufficientCoverage(u32),

    #[error("division by zero at position {0}")]
    DivisionByZero(usize),

    #[error("component length {component} does not match series length {series}")]
    LengthMismatch { series: usize, component: usize },

    #[error("smoothing parameters must lie in [0, 1], got ({alpha}, {beta}, {gamma})")]
    InvalidParams { alpha: f64, beta: f64, gamma: f64 },

    #[error("forecast horizon must be at least 1")]
    InvalidHorizon,

    #[error("invalid ARIMA order: {0}")]
    InvalidOrder(String),

    #[error("ARIMA fit did not converge inside the stationarity box")]
    NonConvergent,

    #[error("no candidate ARIMA order could be fitted")]
    SelectionFailed,

    #[error("at least 2 values are required, got {0}")]
    InsufficientData(usize),

    #[error("decomposition windows share no month with a defined trend")]
    NoOverlap,
}
