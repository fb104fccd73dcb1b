//! Fit additive Holt-Winters to five years and forecast the sixth.

use sectorcast::evaluation::absolute_percentage_error;
use sectorcast::holt_winters::{fit_holt_winters, forecast_hw};
use sectorcast::io::parse_values;
use sectorcast::series::MonthStamp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let series = parse_values(
        include_str!("../data/small_cap.txt"),
        Some(MonthStamp::new(2010, 1)?),
    )?;
    let train = series.slice_window(series.start(), MonthStamp::new(2014, 12)?)?;
    let model = fit_holt_winters(&train)?;
    println!("{}", model.summary());
    println!("in-sample SSE {:.0}", model.sse);

    let forecast = forecast_hw(&model, 12)?;
    for (h, f) in forecast.iter().enumerate() {
        let month = train.end().add_months(h as i64 + 1);
        let actual = series.value_at(month).unwrap();
        let ape = absolute_percentage_error(actual, *f)?;
        println!("{month} actual {actual:>6.0} forecast {f:>8.1} ape {ape:>5.2}%");
    }
    Ok(())
}
