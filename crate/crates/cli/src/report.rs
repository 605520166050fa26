use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A failing trial, enough to replay it: `(seed, n, trial)` selects the
/// random stream of the property (see [`crate::rng`]).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub seed: u64,
    pub n: usize,
    pub trial: u64,
    pub data: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutant: Option<String>,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
    pub wall_time_ms: u128,
}

impl SuiteReport {
    pub fn failed(&self) -> impl Iterator<Item = &PropertyReport> {
        self.properties.iter().filter(|p| !p.passed)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }

    /// The report with wall time zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport { wall_time_ms: 0, ..self.clone() }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ns: Vec<String> = self.n.iter().map(|n| n.to_string()).collect();
        writeln!(
            f,
            "suite {}: {} (n = {}, {} trials, seed {}, {} ms)",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            ns.join(","),
            self.trials,
            self.seed,
            self.wall_time_ms
        )?;
        for p in &self.properties {
            write!(
                f,
                "  {} {} ({}/{} failed)",
                if p.passed { "ok  " } else { "FAIL" },
                p.name,
                p.failures,
                p.checked
            )?;
            if let Some(c) = &p.counterexample {
                write!(f, " first at n={} trial={}: {}", c.n, c.trial, c.data)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
