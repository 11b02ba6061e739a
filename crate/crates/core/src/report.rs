//! Structured verification reports.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// One named comparison of an expected value against a computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
    /// A failed check that does not refute anything (for example a bounded
    /// search that did not finish) marks the report inconclusive, not failed.
    #[serde(skip_serializing_if = "is_true")]
    pub conclusive: bool,
}

fn is_true(b: &bool) -> bool {
    *b
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        ok: bool,
    ) -> Self {
        Check {
            name: name.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            actual: actual.into(),
            ok,
            conclusive: true,
        }
    }

    /// A check whose failure only means "not established".
    pub fn tentative(mut self) -> Self {
        self.conclusive = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub status: Status,
    pub checks: Vec<Check>,
    pub counterexample: Option<String>,
    pub version: String,
    pub seed: Option<u64>,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report {
            status: Status::Pass,
            checks: Vec::new(),
            counterexample: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.status = self.derive_status();
    }

    /// Records the first counterexample only.
    pub fn counterexample(&mut self, text: impl Into<String>) {
        if self.counterexample.is_none() {
            self.counterexample = Some(text.into());
        }
    }

    /// Appends all checks of `other`, keeping the first counterexample.
    pub fn merge(&mut self, other: Report) {
        if let Some(c) = other.counterexample {
            self.counterexample(c);
        }
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn derive_status(&self) -> Status {
        let failing: Vec<&Check> = self.checks.iter().filter(|c| !c.ok).collect();
        if failing.is_empty() {
            Status::Pass
        } else if failing.iter().all(|c| !c.conclusive) {
            Status::Inconclusive
        } else {
            Status::Fail
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_checks() {
        let mut r = Report::new();
        assert_eq!(r.status, Status::Pass);
        r.push(Check::new("a", "", "1", "1", true));
        assert_eq!(r.status, Status::Pass);
        r.push(Check::new("b", "", "1", "0", false).tentative());
        assert_eq!(r.status, Status::Inconclusive);
        r.push(Check::new("c", "", "1", "0", false));
        assert_eq!(r.status, Status::Fail);
    }
}
