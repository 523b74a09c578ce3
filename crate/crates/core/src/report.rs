//! Structured pass/fail results.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub kind: String,
    pub parameters: BTreeMap<String, String>,
}

/// A named list of checks; the verdict is their conjunction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub configuration: Configuration,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
    pub verdict: bool,
}

impl VerificationReport {
    pub fn new(kind: impl Into<String>) -> Self {
        Self {
            configuration: Configuration {
                kind: kind.into(),
                parameters: BTreeMap::new(),
            },
            checks: Vec::new(),
            timing_ms: 0,
            verdict: false,
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.configuration
            .parameters
            .insert(key.into(), value.to_string());
        self
    }

    pub fn set_param(&mut self, key: impl Into<String>, value: impl ToString) {
        self.configuration
            .parameters
            .insert(key.into(), value.to_string());
    }

    pub fn check(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        witness: impl Into<String>,
    ) -> bool {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: witness.into(),
        });
        self.verdict = self.checks.iter().all(|c| c.passed);
        passed
    }

    /// Append the checks of another report, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for c in other.checks {
            self.check(format!("{prefix}.{}", c.name), c.passed, c.witness);
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn finish(mut self, start: Instant) -> Self {
        self.timing_ms = start.elapsed().as_millis() as u64;
        self.verdict = self.passed();
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.configuration.kind)?;
        for (k, v) in &self.configuration.parameters {
            write!(f, " {k}={v}")?;
        }
        writeln!(f)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.witness.is_empty() {
                writeln!(f, "  [{mark}] {}", c.name)?;
            } else {
                writeln!(f, "  [{mark}] {}: {}", c.name, c.witness)?;
            }
        }
        write!(
            f,
            "verdict: {} ({} ms)",
            if self.verdict { "pass" } else { "fail" },
            self.timing_ms
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_is_conjunction() {
        let mut r = VerificationReport::new("demo").param("n", 3);
        r.check("a", true, "");
        assert!(r.verdict);
        r.check("b", false, "bad");
        assert!(!r.verdict && !r.passed());
        let json = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn empty_report_does_not_pass() {
        assert!(!VerificationReport::new("x").passed());
    }
}
