use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// A failing point in bit-string syntax.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub details: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Check {
    pub fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            counterexample: None,
            details: details.into(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(name: impl Into<String>, point: BitVector, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: false,
            counterexample: Some(point.to_bit_string()),
            details: details.into(),
            elapsed: Duration::ZERO,
        }
    }

    /// Pass when `failure` is `None`.
    pub fn from_failure(
        name: impl Into<String>,
        failure: Option<BitVector>,
        details: impl Into<String>,
    ) -> Self {
        match failure {
            None => Check::pass(name, details),
            Some(p) => Check::fail(name, p, details),
        }
    }

    /// Runs `body` and records how long it took.
    pub fn timed(body: impl FnOnce() -> Check) -> Check {
        let start = Instant::now();
        let mut c = body();
        c.elapsed = start.elapsed();
        c
    }
}

/// Outcome of a batch of checks on one subject.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.elapsed_ms += other.elapsed_ms;
    }

    /// Moves the checks of `other` in, with names prefixed by `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
        self.elapsed_ms += other.elapsed_ms;
    }

    /// Sorts checks by name and stamps the total time.
    pub fn finish(mut self, elapsed: Duration) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.elapsed_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table with a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "subject: {}", self.subject);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<width$}  {:<6}  {:<16}  details", "check", "result", "counterexample");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:<6}  {:<16}  {}",
                c.name,
                if c.pass { "PASS" } else { "FAIL" },
                c.counterexample.as_deref().unwrap_or("-"),
                c.details
            );
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "{}/{} passed", self.pass_count(), self.checks.len());
        }
        out
    }
}
