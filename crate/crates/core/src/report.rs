//! Structured outcome of a verification run.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::linalg::Matrix;
use crate::rings::Ring;

/// Witnesses kept per report; the total count is recorded separately.
pub const MAX_WITNESSES: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// A statement about non-injectivity was confirmed by a witness.
    ExpectedFailureObserved,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ExpectedFailureObserved => "expected-failure-observed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pass" => Some(Verdict::Pass),
            "fail" => Some(Verdict::Fail),
            "expected-failure-observed" => Some(Verdict::ExpectedFailureObserved),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What the check is supposed to find.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// The property holds on every case.
    Holds,
    /// At least one violating case exists.
    Violated,
}

/// Input data of one violating case (or of the expected one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub description: String,
    pub matrices: Vec<Matrix>,
}

impl Witness {
    pub fn new(description: impl Into<String>, matrices: Vec<Matrix>) -> Self {
        Witness { description: description.into(), matrices }
    }
}

/// Result of a verifier. `verdict` is `Pass` exactly when `failures` is
/// empty, except for `ExpectedFailureObserved`, which carries at least one
/// witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub ring: Ring,
    pub parameters: BTreeMap<String, i64>,
    pub cases_checked: u64,
    pub failures: Vec<Witness>,
    pub elapsed: Duration,
    pub verdict: Verdict,
}

impl CheckReport {
    /// Assembles a report and derives its verdict from the witnesses found.
    /// `found` are the cases violating the property under test.
    pub fn conclude(
        name: impl Into<String>,
        ring: Ring,
        parameters: BTreeMap<String, i64>,
        cases_checked: u64,
        found: Vec<Witness>,
        expectation: Expectation,
    ) -> Self {
        let mut report = CheckReport {
            name: name.into(),
            ring,
            parameters,
            cases_checked,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
            verdict: Verdict::Pass,
        };
        let total = found.len();
        if total > MAX_WITNESSES {
            report.parameters.insert("failures_total".into(), total as i64);
        }
        report.failures = found.into_iter().take(MAX_WITNESSES).collect();
        report.verdict = match (expectation, report.failures.is_empty()) {
            (Expectation::Holds, true) => Verdict::Pass,
            (Expectation::Holds, false) => Verdict::Fail,
            (Expectation::Violated, false) => Verdict::ExpectedFailureObserved,
            (Expectation::Violated, true) => {
                report
                    .failures
                    .push(Witness::new("expected violation was not observed", Vec::new()));
                Verdict::Fail
            }
        };
        report
    }

    /// Folds `other` into an aggregate report whose verdict is pass only
    /// if every part passed (or observed its expected failure).
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases_checked += other.cases_checked;
        self.elapsed += other.elapsed;
        if other.verdict == Verdict::Fail {
            for w in other.failures {
                if self.failures.len() < MAX_WITNESSES {
                    self.failures
                        .push(Witness::new(format!("{}: {}", other.name, w.description), w.matrices));
                }
            }
            self.verdict = Verdict::Fail;
        }
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    /// Pass or expected failure.
    pub fn is_success(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// One machine-readable line: `CHECK <name> key=value ...`.
    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "CHECK {} verdict={} ring={} cases={} failures={} elapsed_ms={:.3}{}{}",
            self.name,
            self.verdict,
            self.ring,
            self.cases_checked,
            self.failures.len(),
            self.elapsed.as_secs_f64() * 1e3,
            if params.is_empty() { "" } else { " " },
            params.join(" ")
        )
    }
}

/// Wall-clock timer; a no-op without the `std` feature.
pub(crate) struct Timer {
    #[cfg(feature = "std")]
    start: std::time::Instant,
}

impl Timer {
    pub(crate) fn start() -> Self {
        Timer {
            #[cfg(feature = "std")]
            start: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        #[cfg(feature = "std")]
        {
            self.start.elapsed()
        }
        #[cfg(not(feature = "std"))]
        {
            Duration::ZERO
        }
    }
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, i64); N]) -> BTreeMap<String, i64> {
    pairs.into_iter().map(|(k, v)| (String::from(k), v)).collect()
}
