//! Fixed-origin against one-step rolling evaluation for both engines.

use sectorcast::evaluation::{run_fixed_origin, run_rolling, Engine};
use sectorcast::io::parse_values;
use sectorcast::series::MonthStamp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let series = parse_values(
        include_str!("../data/consumer_durables.txt"),
        Some(MonthStamp::new(2010, 1)?),
    )?;
    let train_end = MonthStamp::new(2014, 12)?;
    let (first, last) = (train_end.add_months(1), series.end());

    for engine in [Engine::HoltWinters, Engine::Arima] {
        let fixed = run_fixed_origin(&series, engine, train_end, 12)?;
        let rolling = run_rolling(&series, engine, first, last)?;
        for r in [fixed, rolling] {
            let s = r.summary;
            println!(
                "method {:<3} mean {:>5.2}%  sd {:>5.2}  min {:>5.2}  max {:>5.2}",
                r.method_id.to_string(),
                s.mean,
                s.sd,
                s.min,
                s.max
            );
        }
    }
    Ok(())
}
