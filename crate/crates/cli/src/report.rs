//! Verification reports: one row per check, deterministic ordering.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub id: String,
    pub status: Status,
    pub measured: String,
    pub expected: String,
    pub tolerance: String,
    pub provenance: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub target: String,
    pub checks: Vec<CheckRow>,
}

impl VerificationReport {
    pub fn new(target: &str) -> Self {
        VerificationReport {
            target: target.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        id: &str,
        ok: bool,
        measured: impl ToString,
        expected: impl ToString,
        tolerance: &str,
        provenance: &str,
    ) {
        self.checks.push(CheckRow {
            id: id.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            measured: measured.to_string(),
            expected: expected.to_string(),
            tolerance: tolerance.to_string(),
            provenance: provenance.to_string(),
        });
    }

    pub fn push_unknown(&mut self, id: &str, measured: impl ToString, provenance: &str) {
        self.checks.push(CheckRow {
            id: id.to_string(),
            status: Status::Unknown,
            measured: measured.to_string(),
            expected: String::new(),
            tolerance: String::new(),
            provenance: provenance.to_string(),
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// Exit status: 0 iff no FAIL row.
    pub fn exit_status(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("target: {}\n", self.target));
        for c in &self.checks {
            out.push_str(&format!(
                "{:7} {:44} measured={} expected={}{} ({})\n",
                c.status.to_string(),
                c.id,
                c.measured,
                c.expected,
                if c.tolerance.is_empty() {
                    String::new()
                } else {
                    format!(" tol={}", c.tolerance)
                },
                c.provenance
            ));
        }
        let fails = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), fails));
        out
    }
}
