use std::fmt;

use serde::Serialize;

/// Outcome of an exhaustive property check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined before stopping.
    pub checked: u64,
    /// First failing case, if any.
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, checked: u64) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            checked,
            counterexample: None,
        }
    }

    pub fn fail(name: impl Into<String>, checked: u64, counterexample: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            checked,
            counterexample: Some(counterexample.into()),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {} ({} cases)", self.name, self.checked)
        } else {
            write!(
                f,
                "FAIL {} after {} cases: {}",
                self.name,
                self.checked,
                self.counterexample.as_deref().unwrap_or("?")
            )
        }
    }
}
