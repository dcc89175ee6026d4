//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Exploratory measurement with no expected value.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// The statement being checked.
    pub reference: String,
    pub status: Status,
    /// Hard checks decide the exit code; exploratory ones never do.
    pub hard: bool,
    /// Number of the acceptance criterion this record settles, if any.
    pub criterion: Option<u8>,
    pub witness: Value,
    /// Wall-clock time; the only field that varies between identical runs.
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub n: Option<u32>,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn hard_failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.hard && c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.hard_failures().next().is_none()
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report with timings zeroed, for byte comparisons between runs.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    /// One line per check: `PASS name (12 ms)`.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match (c.status, c.hard) {
                (Status::Pass, _) => "PASS",
                (Status::Fail, true) => "FAIL",
                (Status::Fail, false) => "fail (exploratory)",
                (Status::Info, _) => "info",
            };
            let crit = c.criterion.map(|k| format!(" [criterion {k}]")).unwrap_or_default();
            out.push_str(&format!("{tag:<5} {}{crit} ({} ms)\n", c.name, c.elapsed_ms));
        }
        out
    }
}
