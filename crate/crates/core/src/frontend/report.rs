//! Machine-readable command reports. The JSON layout is versioned via
//! the `schema` field and is deterministic for a fixed command line,
//! inputs, and seed: the input digest covers the command, flags, and
//! raw file contents, while wall-clock timing is excluded from it.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub kind: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deg: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub status: Status,
    pub seed: u64,
    pub bounds: Bounds,
    pub inputs_digest: String,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            schema: 1,
            command: command.to_string(),
            status: Status::Pass,
            seed,
            bounds: Bounds {
                order: None,
                max_deg: None,
            },
            inputs_digest: String::new(),
            findings: Vec::new(),
        }
    }

    /// Digest of everything that determines the result: the command,
    /// its flags, and the contents of every input file, in order.
    pub fn set_digest(&mut self, flags: &[(&str, String)], inputs: &[(String, String)]) {
        let mut hasher = Sha256::new();
        hasher.update(self.command.as_bytes());
        hasher.update([0]);
        for (k, v) in flags {
            hasher.update(k.as_bytes());
            hasher.update([b'=']);
            hasher.update(v.as_bytes());
            hasher.update([0]);
        }
        for (path, contents) in inputs {
            hasher.update(path.as_bytes());
            hasher.update([0]);
            hasher.update(contents.as_bytes());
            hasher.update([0]);
        }
        self.inputs_digest = format!("{:x}", hasher.finalize());
    }

    pub fn finding(&mut self, kind: &str, detail: impl Into<String>) {
        self.findings.push(Finding {
            kind: kind.to_string(),
            detail: detail.into(),
        });
    }

    pub fn fail(&mut self, kind: &str, detail: impl Into<String>) {
        self.status = Status::Fail;
        self.finding(kind, detail);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
