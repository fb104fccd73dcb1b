//! Command-line front end behind the `sectorcast` binary.
//!
//! Exit codes: 0 success, 2 usage error, 3 data error, 4 computation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::decomposition::decompose_additive;
use crate::error::Error;
use crate::evaluation::{
    compare_hypotheses, run_fixed_origin, run_rolling, run_trend_seasonal, structural_stability,
    Engine, MethodId, MethodReport,
};
use crate::io::{load_series, InputError, InputFormat};
use crate::plot::{decomposition_chart, overlay_chart, Line};
use crate::report::{
    decomposition_table, hypothesis_table, method_table, series_table, stability_table,
    OutputFormat, Precision, Table,
};
use crate::series::{MonthStamp, MonthlyTimeSeries, PERIOD};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_COMPUTE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "sectorcast",
    version,
    about = "Decompose and forecast monthly index series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Read a series and print it as `month,value` rows.
    Ingest {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Split a series into trend, seasonal and random components.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Write a four-panel SVG chart.
        #[arg(long, value_name = "PATH")]
        plot: Option<PathBuf>,
    },
    /// Evaluate one forecasting method against held-out months.
    Forecast {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// I/II: Holt-Winters fixed/rolling, III: trend forecast plus seasonal,
        /// IV/V: ARIMA fixed/rolling.
        #[arg(long)]
        method: MethodId,
        /// Last training month [default: twelve months before the series end].
        #[arg(long, value_name = "YYYY-MM")]
        train_end: Option<MonthStamp>,
        /// Months to forecast or evaluate.
        #[arg(long, default_value_t = PERIOD)]
        horizon: usize,
        /// Write an SVG overlay of actual and forecast values.
        #[arg(long, value_name = "PATH")]
        plot: Option<PathBuf>,
    },
    /// Compare trend-plus-seasonal sums from two decomposition windows.
    Stability {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// First window [default: series start to twelve months before the end].
        #[arg(long, value_name = "YYYY-MM:YYYY-MM")]
        window_a: Option<Window>,
        /// Second window [default: twelve months after the start to the end].
        #[arg(long, value_name = "YYYY-MM:YYYY-MM")]
        window_b: Option<Window>,
    },
    /// Compare seasonal and random amplitudes of two series.
    Compare {
        /// Two input files, given as `--input A --input B`.
        #[arg(long = "input", required = true, value_name = "PATH")]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value = "values")]
        format: InputFormat,
        /// First month of unlabelled values files.
        #[arg(long, value_name = "YYYY-MM")]
        start: Option<MonthStamp>,
        #[command(flatten)]
        output: OutputArgs,
        /// Write `<stem>-seasonal.svg` and `<stem>-random.svg` overlays.
        #[arg(long, value_name = "PATH")]
        plot: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
    /// `values` (one number per line) or `daily_csv` (`date,value`).
    #[arg(long, default_value = "values")]
    pub format: InputFormat,
    /// First month of an unlabelled values file.
    #[arg(long, value_name = "YYYY-MM")]
    pub start: Option<MonthStamp>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the table here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// text, csv or markdown.
    #[arg(long, default_value = "text")]
    pub output_format: OutputFormat,
    /// `display` rounds like the printed tables, `full` keeps every digit.
    #[arg(long, default_value = "display")]
    pub precision: Precision,
}

/// An inclusive month range written `YYYY-MM:YYYY-MM`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window(pub MonthStamp, pub MonthStamp);

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(':')
            .or_else(|| s.split_once(".."))
            .ok_or_else(|| format!("expected YYYY-MM:YYYY-MM, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<MonthStamp>().map_err(|e| e.to_string());
        let (a, b) = (parse(a)?, parse(b)?);
        if a > b {
            return Err(format!("window {a}:{b} ends before it starts"));
        }
        Ok(Window(a, b))
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Compute(_) => EXIT_COMPUTE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Compute(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidHorizon | Error::InvalidOrder(_) | Error::InvalidParams { .. } => {
                CliError::Usage(msg)
            }
            Error::NoOverlap => CliError::Usage(msg),
            Error::NonConvergent | Error::SelectionFailed | Error::InsufficientData(_) => {
                CliError::Compute(msg)
            }
            _ => CliError::Data(msg),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        match e {
            InputError::MissingStart => CliError::Usage(e.to_string()),
            InputError::Series(inner) => inner.into(),
            other => CliError::Data(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn load(
    path: &Path,
    format: InputFormat,
    start: Option<MonthStamp>,
) -> CliResult<MonthlyTimeSeries> {
    load_series(path, format, start).map_err(|e| match e {
        InputError::Io(io) => CliError::Data(format!("{}: {io}", path.display())),
        InputError::Parse { line, message } => {
            CliError::Data(format!("{}:{line}: {message}", path.display()))
        }
        other => other.into(),
    })
}

fn write_file(path: &Path, content: &str) -> CliResult<()> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))
}

fn emit(table: Table, output: &OutputArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let text = table.render(output.output_format);
    match &output.out {
        Some(path) => write_file(path, &text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Data(format!("cannot write output: {e}"))),
    }
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn evaluate(
    series: &MonthlyTimeSeries,
    method: MethodId,
    train_end: MonthStamp,
    horizon: usize,
) -> CliResult<MethodReport> {
    let rolling_window = (
        train_end.add_months(1),
        train_end.add_months(horizon as i64),
    );
    let report = match method {
        MethodId::I => run_fixed_origin(series, Engine::HoltWinters, train_end, horizon),
        MethodId::IV => run_fixed_origin(series, Engine::Arima, train_end, horizon),
        MethodId::II => run_rolling(
            series,
            Engine::HoltWinters,
            rolling_window.0,
            rolling_window.1,
        ),
        MethodId::V => run_rolling(series, Engine::Arima, rolling_window.0, rolling_window.1),
        MethodId::III => run_trend_seasonal(series, train_end, horizon),
    };
    Ok(report?)
}

fn forecast_plot(series: &MonthlyTimeSeries, report: &MethodReport) -> String {
    let months: Vec<MonthStamp> = series.iter().map(|(m, _)| m).collect();
    let mut actual: Vec<Option<f64>> = series.values().iter().copied().map(Some).collect();
    let mut forecast = vec![None; months.len()];
    for row in &report.rows {
        if let Some(t) = series.index_of(row.month) {
            forecast[t] = Some(row.forecast);
            // Method III compares trend-plus-seasonal sums, not raw values.
            actual[t] = Some(row.actual);
        }
    }
    overlay_chart(
        &format!("Method {} forecast", report.method_id),
        &months,
        vec![
            Line {
                label: "actual".into(),
                values: actual,
            },
            Line {
                label: "forecast".into(),
                values: forecast,
            },
        ],
    )
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Ingest { input, output } => {
            let series = load(&input.input, input.format, input.start)?;
            emit(series_table(&series, output.precision), &output, stdout)
        }
        Command::Decompose {
            input,
            output,
            plot,
        } => {
            let series = load(&input.input, input.format, input.start)?;
            let d = decompose_additive(&series)?;
            if let Some(path) = plot {
                write_file(&path, &decomposition_chart(&d, &stem(&input.input)))?;
            }
            emit(decomposition_table(&d, output.precision), &output, stdout)
        }
        Command::Forecast {
            input,
            output,
            method,
            train_end,
            horizon,
            plot,
        } => {
            if horizon == 0 {
                return Err(CliError::Usage("--horizon must be at least 1".into()));
            }
            let series = load(&input.input, input.format, input.start)?;
            let train_end = train_end.unwrap_or_else(|| series.end().add_months(-(PERIOD as i64)));
            let report = evaluate(&series, method, train_end, horizon)?;
            if let Some(path) = plot {
                write_file(&path, &forecast_plot(&series, &report))?;
            }
            emit(method_table(&report, output.precision), &output, stdout)
        }
        Command::Stability {
            input,
            output,
            window_a,
            window_b,
        } => {
            let series = load(&input.input, input.format, input.start)?;
            let year = PERIOD as i64;
            let a = window_a.unwrap_or(Window(series.start(), series.end().add_months(-year)));
            let b = window_b.unwrap_or(Window(series.start().add_months(year), series.end()));
            let rows = structural_stability(&series, (a.0, a.1), (b.0, b.1))?;
            let mut table = stability_table(&rows, output.precision);
            table
                .notes
                .push(format!("window_a={}:{} window_b={}:{}", a.0, a.1, b.0, b.1));
            emit(table, &output, stdout)
        }
        Command::Compare {
            inputs,
            format,
            start,
            output,
            plot,
        } => {
            let [first, second] = inputs.as_slice() else {
                return Err(CliError::Usage(format!(
                    "compare needs exactly two --input files, got {}",
                    inputs.len()
                )));
            };
            let s1 = load(first, format, start)?;
            let s2 = load(second, format, start)?;
            let report = compare_hypotheses(&s1, &s2)?;
            let labels = [stem(first), stem(second)];
            if let Some(path) = plot {
                write_comparison_plots(&path, &s1, &s2, &labels)?;
            }
            let table = hypothesis_table(&report, [&labels[0], &labels[1]], output.precision);
            emit(table, &output, stdout)
        }
    }
}

fn write_comparison_plots(
    path: &Path,
    s1: &MonthlyTimeSeries,
    s2: &MonthlyTimeSeries,
    labels: &[String; 2],
) -> CliResult<()> {
    use crate::decomposition::component_percentage;

    let d1 = decompose_additive(s1)?;
    let d2 = decompose_additive(s2)?;
    // Align both series on the union of their months.
    let start = s1.start().min(s2.start());
    let end = s1.end().max(s2.end());
    let months: Vec<MonthStamp> = (0..=start.months_until(end))
        .map(|k| start.add_months(k))
        .collect();
    let align = |s: &MonthlyTimeSeries, pct: Vec<Option<f64>>| -> Vec<Option<f64>> {
        months
            .iter()
            .map(|&m| s.index_of(m).and_then(|t| pct[t]))
            .collect()
    };
    let seasonal = |d: &crate::decomposition::DecompositionResult| {
        let s: Vec<Option<f64>> = d.seasonal.iter().copied().map(Some).collect();
        component_percentage(&d.source, &s)
    };

    let stem_path = path.with_extension("");
    let stem_text = stem_path.display().to_string();
    let charts = [
        (
            "seasonal",
            align(s1, seasonal(&d1)?),
            align(s2, seasonal(&d2)?),
        ),
        (
            "random",
            align(s1, component_percentage(s1, &d1.random)?),
            align(s2, component_percentage(s2, &d2.random)?),
        ),
    ];
    for (name, a, b) in charts {
        let svg = overlay_chart(
            &format!("{name} component, % of index value"),
            &months,
            vec![
                Line {
                    label: labels[0].clone(),
                    values: a,
                },
                Line {
                    label: labels[1].clone(),
                    values: b,
                },
            ],
        );
        write_file(Path::new(&format!("{stem_text}-{name}.svg")), &svg)?;
    }
    Ok(())
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    run_with(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
