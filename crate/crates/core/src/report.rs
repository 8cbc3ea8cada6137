//! Machine-readable check records.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Flagged,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub const SCHEMA: &str = "k3pencil/1";

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub paper_ref: String,
    pub status: Status,
    pub details: serde_json::Value,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(checks: Vec<CheckRecord>) -> Self {
        Report { schema: SCHEMA, checks }
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}
