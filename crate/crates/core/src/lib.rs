//! Monthly index analytics: classical additive decomposition, Holt-Winters
//! and ARIMA forecasting, and fixed/rolling-origin forecast evaluation.
//!
//! ```
//! use sectorcast::decomposition::decompose_additive;
//! use sectorcast::series::{MonthStamp, MonthlyTimeSeries};
//!
//! let start = MonthStamp::new(2010, 1).unwrap();
//! let values = (0..36).map(|t| 100.0 + t as f64).collect();
//! let series = MonthlyTimeSeries::new(start, values).unwrap();
//! let d = decompose_additive(&series).unwrap();
//! assert_eq!(d.trend[6], Some(106.0));
//! ```

pub mod arima;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod evaluation;
pub mod holt_winters;
pub mod io;
pub mod optimize;
pub mod plot;
pub mod report;
pub mod series;
