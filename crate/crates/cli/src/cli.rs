use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "shiftfact", version, about = "s-shifted factorials, generalized Vandermonde determinants and determinant moments of unitary ensembles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the s-shifted factorial (z)_{s;index}.
    Eval(EvalArgs),
    /// Evaluate a determinant by its closed form and by pivoted LU.
    Det(DetArgs),
    /// Sum s-shifted factorials over an arithmetic progression.
    Sum(SumArgs),
    /// Mellin transforms and integer moments of the determinant for the unitary ensembles.
    Rmt(RmtArgs),
    /// Run the identity suites.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("index").required(true).args(["n", "q", "t"]))]
pub struct EvalArgs {
    /// Base point, e.g. `3`, `1+2i`, `5/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
    /// Shift.
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// Nonnegative integer index.
    #[arg(long)]
    pub n: Option<u32>,
    /// Integer index of either sign.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<i64>,
    /// Complex index.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Evaluate in exact rational arithmetic (integer indices only).
    #[arg(long, conflicts_with = "t")]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    /// JSON determinant document (`-` reads stdin).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["kind", "nodes"])]
    pub spec: Option<PathBuf>,
    /// Determinant kind, e.g. `SShifted`, `GammaShift`.
    #[arg(long, required_unless_present = "spec")]
    pub kind: Option<String>,
    /// Comma-separated nodes.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "spec")]
    pub nodes: Option<String>,
    /// Shift.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub s: String,
    /// Coefficient `a` of the affine map `a z + b`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Offset `b` of the affine map `a z + b`.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Complex index offset.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Comma-separated row offsets.
    #[arg(long, allow_hyphen_values = true)]
    pub offsets: Option<String>,
    /// Comma-separated second node set.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// Only evaluate the LU determinant.
    #[arg(long, conflicts_with = "closed_only")]
    pub oracle_only: bool,
    /// Only evaluate the closed form.
    #[arg(long)]
    pub closed_only: bool,
    /// Largest accepted relative residual.
    #[arg(long, default_value_t = 1e-8)]
    pub threshold: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMethod {
    Direct,
    Recurrence,
    Closed,
    /// Every applicable method, checked against the direct sum.
    All,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    /// First term of the progression.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Progression step.
    #[arg(long, allow_hyphen_values = true)]
    pub r: String,
    /// Shift.
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// Factorial order.
    #[arg(long)]
    pub p: u32,
    /// Number of terms.
    #[arg(long)]
    pub n: u32,
    /// Summation route.
    #[arg(long, value_enum, default_value_t = SumMethod::Direct)]
    pub method: SumMethod,
    /// Evaluate in exact rational arithmetic.
    #[arg(long)]
    pub exact: bool,
    /// Largest accepted relative residual for `--method all`.
    #[arg(long, default_value_t = 1e-10)]
    pub threshold: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnsembleName {
    Hermite,
    Laguerre,
    Gegenbauer,
    Jacobi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
    Both,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("variable").required(true).args(["s", "q"]))]
pub struct RmtArgs {
    /// Weight family.
    #[arg(long, value_enum)]
    pub ensemble: EnsembleName,
    /// Weight parameters: alpha (Laguerre), lambda (Gegenbauer) or `a,b` (Jacobi).
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub param: Vec<f64>,
    /// Dimensions: a list `1,2,3` or a range `1..4`.
    #[arg(long, default_value = "1")]
    pub n: String,
    /// Mellin variables (comma-separated complex literals).
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Moment orders: a list or a range.
    #[arg(long)]
    pub q: Option<String>,
    /// Parity for `--s`.
    #[arg(long, value_enum, default_value_t = ParityArg::Both)]
    pub parity: ParityArg,
    /// Skip the closed form and report only the quadrature oracle.
    #[arg(long)]
    pub oracle_only: bool,
    /// Largest accepted relative residual between closed form and oracle.
    #[arg(long, default_value_t = 1e-8)]
    pub threshold: f64,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// sfact, detform, apsum, rmtpdd or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Random trials per check.
    #[arg(long, default_value_t = shiftfact::selftest::DEFAULT_TRIALS)]
    pub trials: usize,
    /// Random seed; equal seeds give byte-identical reports.
    #[arg(long, env = "SHIFTFACT_SEED", default_value_t = shiftfact::selftest::DEFAULT_SEED)]
    pub seed: u64,
}
