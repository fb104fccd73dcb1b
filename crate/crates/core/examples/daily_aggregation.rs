//! Average daily closes into monthly values.

use sectorcast::io::parse_daily_csv;
use sectorcast::series::aggregate_daily_to_monthly;

const DAILY: &str = "\
date,value
2015-01-01,100.0
2015-01-15,104.0
2015-01-30,103.0
2015-02-02,101.5
2015-02-27,99.5
2015-03-02,98.0
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let daily = parse_daily_csv(DAILY.as_bytes())?;
    let monthly = aggregate_daily_to_monthly(&daily)?;
    for (month, v) in monthly.iter() {
        println!("{month} {v:.3}");
    }
    Ok(())
}
