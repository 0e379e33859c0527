use serde_json::{json, Value};

use crate::commands::Report;
use crate::config::Format;

/// Canonical JSON: keys sorted (serde_json's default map), two-space
/// indent, trailing newline. Parsing and re-rendering gives the same bytes.
pub fn to_json(report: &Report) -> String {
    let v: Value = json!({
        "command": report.command,
        "params": report.params,
        "results": report.results,
        "pass": report.pass,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn render(report: &Report, format: Format) -> String {
    let lines = match format {
        Format::Json => return to_json(report),
        Format::Csv => report
            .csv
            .as_ref()
            .expect("csv is validated to sequence commands"),
        Format::Text => &report.text,
    };
    let mut s = lines.join("\n");
    s.push('\n');
    s
}
