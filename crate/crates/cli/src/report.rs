use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use rejectia::Config;

pub const OK: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const INPUT: u8 = 2;
pub const CAP: u8 = 3;

/// One top-level object per command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub field: Option<u64>,
    pub config: Config,
    /// SHA-256 of the input files, in argument order.
    pub inputs: Vec<String>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub result: Value,
    /// SHA-256 of the serialized result.
    pub certificate: String,
    #[serde(skip)]
    pub code: u8,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn new(command: &str, config: Config) -> Self {
        Report {
            command: command.to_string(),
            field: None,
            config,
            inputs: Vec::new(),
            verdict: String::new(),
            error: None,
            result: Value::Null,
            certificate: String::new(),
            code: OK,
        }
    }

    pub fn finish(&mut self, verdict: &str, code: u8, result: Value) {
        self.certificate = sha256_hex(result.to_string().as_bytes());
        self.verdict = verdict.to_string();
        self.code = code;
        self.result = result;
    }

    pub fn fail(&mut self, code: u8, message: String) {
        self.finish("error", code, Value::Null);
        self.error = Some(message);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.verdict);
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        flatten("", &self.result, &mut out);
        out.push_str(&format!("certificate: {}", self.certificate));
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Null => {}
        _ => out.push_str(&format!("{prefix}: {v}\n")),
    }
}
