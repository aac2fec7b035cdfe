use shiftfact::selftest::{run as run_suite, SelftestConfig, Suite};

use super::{Failure, Outcome, Result};
use crate::cli::{Format, SelftestArgs};

pub fn run(args: &SelftestArgs, format: Format) -> Result<Outcome> {
    let suite: Suite = args.suite.parse().map_err(|e: shiftfact::Error| Failure::Usage(e.to_string()))?;
    let report = run_suite(&SelftestConfig { suite, trials: args.trials, seed: args.seed });
    let output = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    let failed = report.failures().count();
    let violation = (failed > 0).then(|| format!("{failed} of {} checks failed", report.checks.len()));
    Ok(Outcome { output, violation })
}
