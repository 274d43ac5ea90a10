//! Verification report and witness serialization.
//!
//! Reports carry no timings so that two runs with the same seed and fixture
//! file are byte-identical.

use crate::chaincat::GradedMap;
use crate::linalg::{q_to_string, Matrix};
use crate::repcore::RepMap;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub check: String,
    pub criterion: u8,
    pub status: Status,
    /// Path of the serialized witness file, when a witness directory was given.
    pub witness: Option<String>,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub fixture_hash: String,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn new(seed: u64, fixture_hash: String, checks: Vec<CheckEntry>) -> Report {
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        let failed = checks.len() - passed;
        Report { seed, fixture_hash, checks, summary: Summary { passed, failed } }
    }

    pub fn failures(&self) -> usize {
        self.summary.failed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(|x| Value::String(q_to_string(x))).collect())).collect())
}

pub fn rep_map_json(f: &RepMap) -> Value {
    Value::Array(f.maps.iter().map(matrix_json).collect())
}

/// `{"degree": d, "comps": {"k": [vertex matrices]}}`, keyed by source degree.
pub fn graded_map_json(g: &GradedMap) -> Value {
    let comps: serde_json::Map<String, Value> = g.comps.iter().map(|(k, m)| (k.to_string(), rep_map_json(m))).collect();
    json!({"degree": g.degree, "comps": comps})
}
