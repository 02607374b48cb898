use std::fmt::{self, Write};

use indexmap::IndexMap;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Outcome of one command: ordered results plus free-form notes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub results: IndexMap<String, String>,
    pub diagnostics: Vec<String>,
}

/// `sha256:<hex>` of the raw input.
pub fn digest(input: &[u8]) -> String {
    let hash = Sha256::digest(input);
    let mut out = String::from("sha256:");
    for byte in hash {
        write!(out, "{byte:02x}").unwrap();
    }
    out
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            command: command.to_string(),
            input_digest: digest(input.as_bytes()),
            results: IndexMap::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.results.insert(key.into(), value.to_string());
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.diagnostics.push(msg.into());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.results.get(key).map(String::as_str)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "input: {}", self.input_digest).unwrap();
        let width = self.results.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.results {
            writeln!(out, "  {k:<width$}  {v}").unwrap();
        }
        for d in &self.diagnostics {
            writeln!(out, "note: {d}").unwrap();
        }
        out
    }

    /// Pretty-printed JSON, newline terminated.
    pub fn to_structured(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}
