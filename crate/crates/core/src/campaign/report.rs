use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// Version of the JSON report layout; bumped on any incompatible change.
pub const SCHEMA_VERSION: u32 = 1;

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one property over one orientation.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub cases: usize,
    pub failures: usize,
    pub counterexamples: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            status: Status::Pass,
            cases: 0,
            failures: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
            data: None,
        }
    }

    /// Records one case; the counterexample is built only on failure.
    pub fn case(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.fail(counterexample());
        }
    }

    pub fn fail(&mut self, counterexample: Value) {
        self.failures += 1;
        self.status = Status::Fail;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(counterexample);
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrientationReport {
    pub orientation: String,
    pub checks: Vec<Check>,
}

/// A campaign result. Wall time is kept out of the JSON form so that reports
/// are reproducible byte for byte.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub orientations: Vec<OrientationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    pub failed_checks: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            config,
            orientations: Vec::new(),
            output: None,
            failed_checks: 0,
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, r: OrientationReport) {
        self.failed_checks += r.checks.iter().filter(|c| !c.passed()).count();
        self.orientations.push(r);
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.orientations.iter().flat_map(|o| o.checks.iter())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for o in &self.orientations {
            let _ = writeln!(s, "[{}]", o.orientation);
            for c in &o.checks {
                let tag = if c.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "  {tag} {:<28} {} cases, {} failures", c.name, c.cases, c.failures);
                for n in &c.notes {
                    let _ = writeln!(s, "       note: {n}");
                }
                for x in &c.counterexamples {
                    let _ = writeln!(s, "       counterexample: {x}");
                }
            }
        }
        if let Some(out) = &self.output {
            let _ = writeln!(s, "{}", serde_json::to_string_pretty(out).expect("serializable"));
        }
        let _ = writeln!(
            s,
            "{} checks, {} failed, {:.2?}",
            self.checks().count(),
            self.failed_checks,
            self.elapsed
        );
        s
    }

    /// Number of failed checks, capped for use as a process exit code.
    /// Number of failed checks, capped at 100.
    pub fn exit_code(&self) -> u8 {
        self.failed_checks.min(100) as u8
    }
}
