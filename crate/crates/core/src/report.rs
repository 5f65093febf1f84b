//! Machine-readable verification reports.

use serde::Serialize;
use serde_json::{json, Value};

/// Outcome of one check. Failures always carry a witness in `witnesses`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reason")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn as_str(&self) -> String {
        match self {
            Status::Pass => "PASS".into(),
            Status::Fail => "FAIL".into(),
            Status::Skipped(r) => format!("SKIPPED({r})"),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: Value,
    pub status: Status,
    pub witnesses: Value,
    pub seed: u64,
    /// Not serialized: reports must be byte-identical across runs with the
    /// same parameters and seed.
    #[serde(skip)]
    pub timing_ms: u128,
}

impl VerificationReport {
    pub fn pass(check_id: &str, params: Value, witnesses: Value, seed: u64) -> Self {
        VerificationReport {
            check_id: check_id.into(),
            params,
            status: Status::Pass,
            witnesses,
            seed,
            timing_ms: 0,
        }
    }

    pub fn fail(check_id: &str, params: Value, witnesses: Value, seed: u64) -> Self {
        VerificationReport {
            check_id: check_id.into(),
            params,
            status: Status::Fail,
            witnesses,
            seed,
            timing_ms: 0,
        }
    }

    pub fn from_bool(check_id: &str, ok: bool, params: Value, witnesses: Value, seed: u64) -> Self {
        if ok {
            Self::pass(check_id, params, witnesses, seed)
        } else {
            Self::fail(check_id, params, witnesses, seed)
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check_id": self.check_id,
            "params": self.params,
            "status": self.status.as_str(),
            "witnesses": self.witnesses,
            "seed": self.seed,
        })
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        format!(
            "{:<40} {:>6}  params={} ({} ms)",
            self.check_id,
            self.status.as_str(),
            serde_json::to_string(&self.params).unwrap_or_default(),
            self.timing_ms
        )
    }
}

/// Wrap a list of reports in the versioned schema envelope.
pub fn envelope(reports: &[VerificationReport]) -> Value {
    json!({
        "schema": crate::SCHEMA,
        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    })
}
