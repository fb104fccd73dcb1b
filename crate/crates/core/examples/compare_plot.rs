//! Seasonal and random amplitude of two indices, with SVG overlays written
//! to the system temp directory.

use sectorcast::decomposition::{component_percentage, decompose_additive};
use sectorcast::evaluation::compare_hypotheses;
use sectorcast::io::parse_values;
use sectorcast::plot::{overlay_chart, Line};
use sectorcast::series::MonthStamp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Some(MonthStamp::new(2010, 1)?);
    let a = parse_values(include_str!("../data/consumer_durables.txt"), start)?;
    let b = parse_values(include_str!("../data/small_cap.txt"), start)?;

    let report = compare_hypotheses(&a, &b)?;
    println!(
        "mean |seasonal %|: {:.3} vs {:.3}",
        report.seasonal_amplitude[0], report.seasonal_amplitude[1]
    );
    println!(
        "mean |random %|:   {:.3} vs {:.3}",
        report.random_amplitude[0], report.random_amplitude[1]
    );
    println!("first more seasonal: {}", report.seasonal_verdict);
    println!("second more random:  {}", report.random_verdict);

    let months: Vec<MonthStamp> = a.iter().map(|(m, _)| m).collect();
    let random_line = |label: &str, s| -> Result<Line, Box<dyn std::error::Error>> {
        let d = decompose_additive(s)?;
        Ok(Line {
            label: label.into(),
            values: component_percentage(s, &d.random)?,
        })
    };
    let svg = overlay_chart(
        "random component, % of index value",
        &months,
        vec![
            random_line("consumer durables", &a)?,
            random_line("small cap", &b)?,
        ],
    );
    let path = std::env::temp_dir().join("sectorcast-random.svg");
    std::fs::write(&path, svg)?;
    println!("wrote {}", path.display());
    Ok(())
}
