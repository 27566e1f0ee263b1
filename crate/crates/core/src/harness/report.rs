use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    /// Permutation or graph in text form.
    pub subject: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one sweep. `passed <= checked`, and `counterexamples` is
/// nonempty exactly when `passed < checked`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub n_range: Vec<usize>,
    pub checked: u64,
    pub passed: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Sweep-specific tallies (e.g. how many subjects were skipped).
    #[serde(default)]
    pub details: BTreeMap<String, u64>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.passed == self.checked && self.counterexamples.is_empty()
    }

    pub fn is_consistent(&self) -> bool {
        self.passed <= self.checked && self.counterexamples.is_empty() == (self.passed == self.checked)
    }

    pub fn detail(&self, key: &str) -> u64 {
        self.details.get(key).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = if self.is_success() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{}: {status} ({}/{} passed, n in {:?}, {:.2?})",
            self.theorem_id, self.passed, self.checked, self.n_range, self.wall_time
        );
        for (k, v) in &self.details {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for c in self.counterexamples.iter().take(20) {
            let _ = writeln!(
                out,
                "  counterexample {}: expected {}; got {}",
                c.subject, c.expected, c.actual
            );
        }
        if self.counterexamples.len() > 20 {
            let _ = writeln!(out, "  ... {} more", self.counterexamples.len() - 20);
        }
        out
    }
}
