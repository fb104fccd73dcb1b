//! Classical additive decomposition of the bundled consumer durables index.
//!
//! `cargo run --example decompose`

use sectorcast::decomposition::decompose_additive;
use sectorcast::io::parse_values;
use sectorcast::series::MonthStamp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = include_str!("../data/consumer_durables.txt");
    let series = parse_values(text, Some(MonthStamp::new(2010, 1)?))?;
    let d = decompose_additive(&series)?;

    println!("seasonal indices (Jan..Dec):");
    for (m, s) in d.seasonal_indices.iter().enumerate() {
        println!("  {:>2} {s:>9.2}", m + 1);
    }
    println!("sum {:.2e}", d.seasonal_indices.iter().sum::<f64>());

    println!("\nmonth      observed     trend   seasonal    random");
    for (t, (month, y)) in series.iter().enumerate().skip(6).take(12) {
        println!(
            "{month} {y:>10.0} {:>9.1} {:>10.1} {:>9.1}",
            d.trend[t].unwrap(),
            d.seasonal[t],
            d.random[t].unwrap()
        );
    }
    Ok(())
}
