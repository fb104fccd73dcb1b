//! The optimizer behind the Holt-Winters and ARIMA fits, on Rosenbrock.

use sectorcast::optimize::{nelder_mead, NelderMeadOptions};

fn main() {
    let rosenbrock = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
    let min = nelder_mead(rosenbrock, &[-1.2, 1.0], NelderMeadOptions::default());
    println!("{min:?}");
}
