#![allow(dead_code)]

pub mod reference;

use std::path::PathBuf;

use sectorcast::series::{MonthStamp, MonthlyTimeSeries};

pub fn ms(year: i32, month: u32) -> MonthStamp {
    MonthStamp::new(year, month).unwrap()
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn load(name: &str) -> MonthlyTimeSeries {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    sectorcast::io::parse_values(&text, Some(ms(2010, 1))).unwrap()
}

pub fn consumer_durables() -> MonthlyTimeSeries {
    load("consumer_durables.txt")
}

pub fn small_cap() -> MonthlyTimeSeries {
    load("small_cap.txt")
}

pub fn series(values: Vec<f64>) -> MonthlyTimeSeries {
    MonthlyTimeSeries::new(ms(2010, 1), values).unwrap()
}

/// Run the command-line front end in-process; returns (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("sectorcast").chain(args.iter().copied());
    let code = sectorcast::cli::run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}
