//! Canonical report emission.
//!
//! json mode: stable key order (serde_json maps are sorted), compact,
//! newline-terminated, and free of wall-clock data, so equal mathematical
//! results serialize to identical bytes. text mode: human-readable lines
//! with the elapsed time appended.

use serde_json::{json, Map, Value};

use frobsplit::groebner::Ideal;
use frobsplit::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub struct Report {
    pub command: String,
    pub config: Value,
    pub input: Value,
    pub result: Value,
    /// text-mode lines, one per row, already formatted
    pub text_lines: Vec<String>,
}

impl Report {
    pub fn emit(&self, format: Format, elapsed_ms: u128) -> String {
        match format {
            Format::Json => {
                let mut top = Map::new();
                top.insert("command".into(), Value::String(self.command.clone()));
                top.insert("config".into(), self.config.clone());
                top.insert("input".into(), self.input.clone());
                top.insert("result".into(), self.result.clone());
                let mut out = serde_json::to_string(&Value::Object(top)).expect("serializable");
                out.push('\n');
                out
            }
            Format::Text => {
                let mut out = String::new();
                out.push_str(&format!("command: {}\n", self.command));
                out.push_str(&format!("config: {}\n", compact(&self.config)));
                out.push_str(&format!("input: {}\n", compact(&self.input)));
                for line in &self.text_lines {
                    out.push_str(line);
                    out.push('\n');
                }
                out.push_str(&format!("time_ms: {elapsed_ms}\n"));
                out
            }
        }
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Canonical generator list of an ideal, largest leading monomial first.
pub fn ideal_json(i: &Ideal) -> Result<Value> {
    Ok(json!(i.canonical_strings()?))
}

/// Pretty parenthesized form: (x, y), (0) for the zero ideal, (1) for the
/// unit ideal.
pub fn ideal_text(i: &Ideal) -> Result<String> {
    let gens = i.canonical_strings()?;
    if gens.is_empty() {
        Ok("(0)".to_string())
    } else {
        Ok(format!("({})", gens.join(", ")))
    }
}

pub fn ideal_list_json(ideals: &[Ideal]) -> Result<Value> {
    Ok(Value::Array(
        ideals.iter().map(ideal_json).collect::<Result<_>>()?,
    ))
}

pub fn ideal_list_text(ideals: &[Ideal]) -> Result<String> {
    let parts: Vec<String> = ideals.iter().map(ideal_text).collect::<Result<_>>()?;
    Ok(parts.join(", "))
}
