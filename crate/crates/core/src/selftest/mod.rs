//! Randomized and exhaustive identity checks over every module.
//!
//! Each check evaluates both sides of an identity by independent routes and records the
//! worst relative residual. Runs are reproducible: every check draws from its own generator
//! seeded by the run seed and the check name.

mod report;
mod sample;
pub mod apsum;
pub mod detform;
pub mod rmtpdd;
pub mod sfact;

use std::fmt;
use std::str::FromStr;

pub use report::{Check, CheckResult, Report};
pub use sample::{clear_of_poles, clear_of_zero, Sampler, POLE_GUARD};

use crate::error::Error;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;
/// Random trials per check when none is given.
pub const DEFAULT_TRIALS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Sfact,
    Detform,
    Apsum,
    Rmtpdd,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Sfact => "sfact",
            Suite::Detform => "detform",
            Suite::Apsum => "apsum",
            Suite::Rmtpdd => "rmtpdd",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Sfact, Suite::Detform, Suite::Apsum, Suite::Rmtpdd],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "sfact" => Ok(Suite::Sfact),
            "detform" => Ok(Suite::Detform),
            "apsum" => Ok(Suite::Apsum),
            "rmtpdd" => Ok(Suite::Rmtpdd),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { suite: Suite::All, trials: DEFAULT_TRIALS, seed: DEFAULT_SEED }
    }
}

pub fn run(config: &SelftestConfig) -> Report {
    let members = config.suite.members();
    let mut checks = Vec::new();
    for suite in &members {
        match suite {
            Suite::Sfact => checks.extend(sfact::run(config.seed, config.trials)),
            Suite::Detform => checks.extend(detform::run(config.seed, config.trials)),
            Suite::Apsum => checks.extend(apsum::run(config.seed, config.trials)),
            Suite::Rmtpdd => checks.extend(rmtpdd::run(config.seed, config.trials)),
            Suite::All => unreachable!(),
        }
    }
    Report {
        seed: config.seed,
        trials: config.trials,
        suites: members.iter().map(|s| s.name().to_string()).collect(),
        checks,
    }
}
