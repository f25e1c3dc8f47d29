//! Machine-readable verification reports.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// The status of a group containing both: any failure wins over
    /// inconclusive, which wins over pass.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Verbatim quote identifying the verified statement.
    pub anchor: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(anchor: &str, check: impl Into<String>, ok: bool, witness: Option<String>) -> Self {
        Check {
            anchor: anchor.to_string(),
            check: check.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn pass(anchor: &str, check: impl Into<String>) -> Self {
        Self::new(anchor, check, true, None)
    }

    pub fn inconclusive(anchor: &str, check: impl Into<String>, why: impl Into<String>) -> Self {
        Check { anchor: anchor.to_string(), check: check.into(), status: Status::Inconclusive, witness: Some(why.into()) }
    }

    /// A check carrying data rather than a verdict failure.
    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseInfo {
    pub n: usize,
    pub blocks: String,
    pub depth: usize,
    pub mode: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub case: CaseInfo,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn status(&self) -> Status {
        self.checks.iter().fold(Status::Pass, |acc, c| acc.combine(c.status))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
