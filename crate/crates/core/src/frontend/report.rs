use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::{Check, RunConfig};
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// JSON Schema that every report validates against.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
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

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub check: Check,
    pub status: Status,
    pub summary: Value,
    pub witness: Value,
    pub witness_sha256: String,
}

impl CheckEntry {
    pub fn new(check: Check, ok: bool, summary: Value, witness: Value) -> Self {
        let witness_sha256 = sha256_hex(witness.to_string().as_bytes());
        CheckEntry { check, status: Status::from_bool(ok), summary, witness, witness_sha256 }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub config: RunConfig,
    pub checks: Vec<CheckEntry>,
    pub passed: bool,
    /// Wall-clock milliseconds per check; the only nondeterministic part.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(config: RunConfig) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: "aoq".to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            checks: Vec::new(),
            passed: true,
            timings: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, entry: CheckEntry, millis: f64) {
        self.passed &= entry.status == Status::Pass;
        self.timings.insert(entry.check.name().to_string(), millis);
        self.checks.push(entry);
    }

    pub fn entry(&self, check: Check) -> Option<&CheckEntry> {
        self.checks.iter().find(|e| e.check == check)
    }

    /// Object keys sorted, two-space indentation, trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let value = serde_json::to_value(self)?;
        Ok(serde_json::to_string_pretty(&value)? + "\n")
    }

    /// The report with the timing block emptied, for determinism checks.
    pub fn to_json_without_timings(&self) -> Result<String> {
        let mut copy = self.clone();
        copy.timings.clear();
        copy.to_json()
    }
}
