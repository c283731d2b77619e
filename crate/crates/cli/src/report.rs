use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

/// Envelope shared by every command: what ran, on which inputs, the result
/// and how long it took.
pub struct Report {
    command: String,
    args: Map<String, Value>,
    inputs: Map<String, Value>,
    started: Instant,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            args: Map::new(),
            inputs: Map::new(),
            started: Instant::now(),
        }
    }

    pub fn arg(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.args.insert(key.to_string(), value.into());
        self
    }

    pub fn input(&mut self, key: &str, path: &str, bytes: &[u8]) -> &mut Self {
        self.inputs.insert(
            key.to_string(),
            json!({ "path": path, "sha256": sha256_hex(bytes) }),
        );
        self
    }

    pub fn finish(self, result: Value) -> Value {
        json!({
            "command": self.command,
            "args": self.args,
            "inputs": self.inputs,
            "result": result,
            "elapsed_ms": self.started.elapsed().as_secs_f64() * 1e3,
        })
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                flatten(&key(k), item, rows);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), item, rows);
            }
        }
        _ => rows.push((prefix.to_string(), scalar(v))),
    }
}

/// Two-column table of every leaf in the report.
pub fn human(report: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", report, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}
