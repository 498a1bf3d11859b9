//! Plain-text lifetime data files.
//!
//! Values are separated by whitespace, commas or newlines. Everything after a
//! `#` on a line is a comment. A single non-numeric line before the first
//! value is treated as a column header, so one-column CSV exports load as-is.

use std::fmt::Write as _;
use std::path::Path;

use cregf_core::Sample;

use crate::error::CliError;

/// Parses data file contents into raw values, without validating them as lifetimes.
pub fn parse_values(text: &str) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    let mut header_allowed = true;
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = tokens.iter().map(|t| t.parse::<f64>()).collect();
        match parsed {
            Ok(v) => values.extend(v),
            Err(_) if header_allowed && tokens.iter().all(|t| t.parse::<f64>().is_err()) => {}
            Err(_) => {
                let bad = tokens.iter().find(|t| t.parse::<f64>().is_err()).unwrap();
                return Err(CliError::Usage(format!(
                    "line {}: cannot parse {bad:?} as a number",
                    lineno + 1
                )));
            }
        }
        header_allowed = false;
    }
    if values.is_empty() {
        return Err(CliError::Usage("data file contains no values".into()));
    }
    Ok(values)
}

/// Reads and validates a lifetime sample.
pub fn read_sample(path: &Path) -> Result<Sample, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(Sample::new(parse_values(&text)?)?)
}

/// Renders values one per line in shortest round-trip form.
pub fn render_values(values: &[f64]) -> String {
    let mut out = String::with_capacity(values.len() * 8);
    for v in values {
        let _ = writeln!(out, "{v}");
    }
    out
}
