mod det;
mod eval;
mod rmt;
mod selftest;
mod sum;

use std::fmt;

use shiftfact::numkernel::{parse_complex, parse_rational, ExactRational};
use shiftfact::Error;

use crate::cli::{Command, Format};

pub use det::run as det;
pub use eval::run as eval;
pub use rmt::run as rmt;
pub use selftest::run as selftest;
pub use sum::run as sum;

/// Rendered output and whether every check in it held.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub violation: Option<String>,
}

impl Outcome {
    pub fn ok(output: String) -> Self {
        Outcome { output, violation: None }
    }
}

/// Reasons a command stops without output.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input: exit code 2.
    Usage(String),
    /// Evaluation error: exit code 1.
    Eval(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Eval(Error::Parse(_)) => 2,
            Failure::Eval(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Eval(e)
    }
}

pub type Result<T> = std::result::Result<T, Failure>;

pub fn complex_arg(name: &str, text: &str) -> Result<num_complex::Complex64> {
    parse_complex(text).map_err(|e| Failure::Usage(format!("--{name}: {e}")))
}

pub fn rational_arg(name: &str, text: &str) -> Result<ExactRational> {
    parse_rational(text).map_err(|e| Failure::Usage(format!("--{name}: {e}")))
}

pub fn complex_list(name: &str, text: &str) -> Result<Vec<num_complex::Complex64>> {
    text.split(',').map(|t| complex_arg(name, t)).collect()
}

/// Largest residual; NaN wins so that a failed evaluation is never hidden.
pub fn worst_residual(residuals: impl IntoIterator<Item = f64>) -> f64 {
    residuals.into_iter().fold(0.0, |acc, r| if acc.is_nan() || r.is_nan() { f64::NAN } else { acc.max(r) })
}

pub fn dispatch(command: &Command, format: Format) -> Result<Outcome> {
    match command {
        Command::Eval(a) => eval(a, format),
        Command::Det(a) => det(a, format),
        Command::Sum(a) => sum(a, format),
        Command::Rmt(a) => rmt(a, format),
        Command::Selftest(a) => selftest(a, format),
    }
}

#[cfg(test)]
mod tests {
    use super::worst_residual;

    #[test]
    fn nan_residual_is_kept() {
        assert_eq!(worst_residual([]), 0.0);
        assert_eq!(worst_residual([1e-16, 3e-12, 2e-15]), 3e-12);
        assert!(worst_residual([1e-16, f64::NAN, 2e-15]).is_nan());
        assert!(worst_residual([f64::NAN, 1.0]).is_nan());
    }
}
