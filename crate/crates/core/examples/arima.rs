//! Difference-order heuristic, stepwise AICc search and a 12-month forecast.

use sectorcast::arima::{
    candidate_orders, fit_arima, forecast_arima, select_difference_order, select_model_with,
    SearchStrategy,
};
use sectorcast::io::parse_values;
use sectorcast::series::MonthStamp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let series = parse_values(
        include_str!("../data/consumer_durables.txt"),
        Some(MonthStamp::new(2010, 1)?),
    )?;
    let train = series.slice_window(series.start(), MonthStamp::new(2014, 12)?)?;

    let d = select_difference_order(train.values())?;
    println!("differencing order d = {d}");

    let stepwise = select_model_with(&train, SearchStrategy::Stepwise)?;
    println!("stepwise:   {}", stepwise.summary());

    // The full grid reaches high orders that the stepwise search never visits.
    let mut scored: Vec<_> = candidate_orders(train.values())?
        .into_iter()
        .filter_map(|o| fit_arima(&train, o).ok())
        .collect();
    scored.sort_by(|a, b| a.aicc.total_cmp(&b.aicc));
    for m in scored.iter().take(5) {
        println!("  {} drift={} AICc {:.2}", m.order, m.order.drift, m.aicc);
    }

    let forecast = forecast_arima(&stepwise, 12)?;
    println!(
        "forecast: {:?}",
        forecast.iter().map(|f| f.round()).collect::<Vec<_>>()
    );
    Ok(())
}
