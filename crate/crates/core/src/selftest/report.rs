use std::fmt::Write;

use serde::Serialize;

use crate::numkernel::{relative_residual, Scalar};

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.trials > 0
    }
}

/// Accumulates residuals for one check.
#[derive(Debug, Clone)]
pub struct Check {
    result: CheckResult,
}

impl Check {
    pub fn new(suite: &str, name: &str, tolerance: f64) -> Self {
        Check {
            result: CheckResult {
                suite: suite.into(),
                name: name.into(),
                trials: 0,
                failures: 0,
                max_residual: 0.0,
                tolerance,
                exact: false,
                first_failure: None,
            },
        }
    }

    /// A check that must hold with zero residual.
    pub fn exact(suite: &str, name: &str) -> Self {
        let mut c = Check::new(suite, name, 0.0);
        c.result.exact = true;
        c
    }

    fn fail(&mut self, detail: String) {
        self.result.failures += 1;
        if self.result.first_failure.is_none() {
            self.result.first_failure = Some(detail);
        }
    }

    /// Records one trial; NaN counts as a failure.
    pub fn residual(&mut self, r: f64, detail: impl FnOnce() -> String) {
        self.result.trials += 1;
        if r.is_nan() || r > self.result.tolerance {
            self.result.max_residual = if r.is_nan() { f64::INFINITY } else { self.result.max_residual.max(r) };
            self.fail(detail());
        } else {
            self.result.max_residual = self.result.max_residual.max(r);
        }
    }

    /// Records `|a - b| / max(|a|, |b|)`.
    pub fn compare<T: Scalar>(&mut self, a: &T, b: &T, detail: impl FnOnce() -> String) {
        let r = relative_residual(a, b, 0.0);
        self.residual(r, detail);
    }

    /// Records an evaluation error as a failed trial.
    pub fn error(&mut self, detail: String) {
        self.result.trials += 1;
        self.result.max_residual = f64::INFINITY;
        self.fail(detail);
    }

    pub fn finish(self) -> CheckResult {
        self.result
    }
}

/// Full self-test report. Contains no timing information, so equal seeds give equal bytes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<String>,
    pub checks: Vec<CheckResult>,
}

fn sci(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else if x.is_infinite() {
        "inf".into()
    } else {
        format!("{x:.3e}")
    }
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let tol = if c.exact { "exact".into() } else { sci(c.tolerance) };
            let _ = writeln!(
                out,
                "{status}  {:<8} {:<width$}  trials={:<6} max_residual={:<10} tol={}",
                c.suite,
                c.name,
                c.trials,
                sci(c.max_residual),
                tol
            );
            if let Some(f) = &c.first_failure {
                let _ = writeln!(out, "      first failure: {f}");
            }
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} checks, {} failed (seed {}, trials {})",
            self.checks.len(),
            failed,
            self.seed,
            self.trials
        );
        out
    }

    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("plain data serializes");
        v["passed"] = serde_json::Value::Bool(self.passed());
        serde_json::to_string_pretty(&v).expect("plain data serializes") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,name,status,trials,failures,max_residual,tolerance\n");
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                c.suite,
                c.name,
                status,
                c.trials,
                c.failures,
                sci(c.max_residual),
                if c.exact { "exact".into() } else { sci(c.tolerance) }
            );
        }
        out
    }
}
