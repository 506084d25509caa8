//! Pass/fail records for formula-versus-oracle comparisons.

use std::fmt::Display;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// One failed comparison; both values are kept so that a falsified
/// conjecture documents itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: String,
    pub expected: String,
    pub actual: String,
}

/// The outcome of a single comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub holds: bool,
}

impl CheckOutcome {
    pub fn compare<T: PartialEq + Display + ?Sized>(
        label: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> Self {
        Self {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            holds: expected == actual,
        }
    }

    /// A check that is a plain predicate, e.g. a divisibility or a bound.
    pub fn predicate(label: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            expected: "true".into(),
            actual: if holds {
                "true".into()
            } else {
                detail.into()
            },
            holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Wall-clock time; left out of the JSON so that output is reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, grid: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            grid: grid.into(),
            cases: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case made of several outcomes; every failing outcome
    /// becomes a failure tagged with `params`.
    pub fn record(&mut self, params: &str, outcomes: &[CheckOutcome]) {
        self.cases += 1;
        for o in outcomes.iter().filter(|o| !o.holds) {
            self.failures.push(Failure {
                params: format!("{params}: {}", o.label),
                expected: o.expected.clone(),
                actual: o.actual.clone(),
            });
        }
    }

    /// Records a case that could not be evaluated at all.
    pub fn record_error(&mut self, params: &str, err: &dyn Display) {
        self.cases += 1;
        self.failures.push(Failure {
            params: params.to_string(),
            expected: "evaluation succeeds".into(),
            actual: format!("error: {err}"),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_carry_both_values() {
        let mut r = VerificationReport::new("demo", "N<=1");
        r.record("N=1", &[CheckOutcome::compare("count", &8, &8)]);
        assert!(r.passed());
        r.record("N=2", &[CheckOutcome::compare("count", &8, &9)]);
        assert!(!r.passed());
        assert_eq!(r.cases, 2);
        assert_eq!(r.failures[0].expected, "8");
        assert_eq!(r.failures[0].actual, "9");
        assert_eq!(r.failures[0].params, "N=2: count");
    }

    #[test]
    fn json_round_trip_ignores_elapsed() {
        let mut r = VerificationReport::new("demo", "grid");
        r.record("p", &[CheckOutcome::predicate("divides", false, "remainder 3")]);
        r.elapsed = Duration::from_millis(1234);
        let json = r.to_json();
        assert!(!json.contains("elapsed"));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.failures, r.failures);
    }
}
