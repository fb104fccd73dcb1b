//! Forecast the trend with ARIMA, add the seasonal index back, and score the
//! sum against the trend-plus-seasonal of the full decomposition.

use sectorcast::evaluation::run_trend_seasonal;
use sectorcast::io::parse_values;
use sectorcast::series::MonthStamp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let series = parse_values(
        include_str!("../data/small_cap.txt"),
        Some(MonthStamp::new(2010, 1)?),
    )?;
    let report = run_trend_seasonal(&series, MonthStamp::new(2014, 12)?, 12)?;
    for row in &report.rows {
        println!(
            "{} actual {:>7.1} forecast {:>7.1} ape {:>5.2}%",
            row.month, row.actual, row.forecast, row.ape
        );
    }
    println!("mean {:.2}%", report.summary.mean);
    Ok(())
}
