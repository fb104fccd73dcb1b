//! Decompose two overlapping five-year windows and compare their
//! trend-plus-seasonal sums month by month.

use sectorcast::evaluation::structural_stability;
use sectorcast::io::parse_values;
use sectorcast::series::MonthStamp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = |y, mo| MonthStamp::new(y, mo);
    let series = parse_values(include_str!("../data/small_cap.txt"), Some(m(2010, 1)?))?;
    let rows = structural_stability(
        &series,
        (m(2010, 1)?, m(2014, 12)?),
        (m(2011, 1)?, m(2015, 12)?),
    )?;

    let worst = rows
        .iter()
        .max_by(|a, b| a.variation_pct.abs().total_cmp(&b.variation_pct.abs()))
        .unwrap();
    for r in &rows {
        println!(
            "{} {:>8.1} {:>8.1} {:>6.2}%",
            r.month, r.sum_a, r.sum_b, r.variation_pct
        );
    }
    println!(
        "largest shift {:.2}% in {}",
        worst.variation_pct, worst.month
    );
    Ok(())
}
