use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

/// The single document printed per invocation.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub diagnostics: Vec<String>,
}

impl Envelope {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            results: Value::Null,
            diagnostics: Vec::new(),
        }
    }
}

/// What a command produced, in all three renderings.
pub struct Outcome {
    pub envelope: Envelope,
    pub table: String,
    pub verdict: String,
    pub exit_code: u8,
}

pub fn render(outcome: &Outcome, table: bool, quiet: bool) -> String {
    if quiet {
        outcome.verdict.clone()
    } else if table {
        let mut text = outcome.table.trim_end().to_string();
        for d in &outcome.envelope.diagnostics {
            text.push_str("\nnote: ");
            text.push_str(d);
        }
        text.push('\n');
        text.push_str(&outcome.verdict);
        text
    } else {
        serde_json::to_string_pretty(&outcome.envelope).expect("envelope serializes")
    }
}

/// Left-aligned columns separated by two spaces.
pub fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
