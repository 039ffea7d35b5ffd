//! CSV and JSON renderings of sweep reports.

use std::io::Write;

use serde_json::{json, Value};

use super::ExtremalReport;
use crate::error::Result;

/// Significant digits of every printed value.
pub const VALUE_DIGITS: usize = 12;

/// `x` with [`VALUE_DIGITS`] significant digits, trailing zeros trimmed.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        return format!("{:.*e}", VALUE_DIGITS - 1, x);
    }
    let decimals = (VALUE_DIGITS as i32 - 1 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `x` rounded to [`VALUE_DIGITS`] significant digits.
pub fn round_value(x: f64) -> f64 {
    format_value(x).parse().unwrap_or(x)
}

/// Header `n,r,objective,graph6,value,is_maximizer`.
///
/// With recorded rows every admitted graph is listed; otherwise one row per
/// maximizer class.
pub fn write_csv<W: Write>(report: &ExtremalReport, mut out: W) -> Result<()> {
    let c = &report.config;
    let label = c.objective.label();
    writeln!(out, "n,r,objective,graph6,value,is_maximizer")?;
    if report.rows.is_empty() {
        for m in &report.maximizers {
            writeln!(out, "{},{},{},{},{},true", c.n, c.r, label, m.graph6, format_value(m.value))?;
        }
    } else {
        for row in &report.rows {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                c.n,
                c.r,
                label,
                row.graph6,
                format_value(row.value),
                report.is_maximal(row.value)
            )?;
        }
    }
    Ok(())
}

/// `v` with every float rounded to [`VALUE_DIGITS`] significant digits.
pub fn round_json(v: Value) -> Value {
    match v {
        Value::Number(num) if num.is_f64() => json!(round_value(num.as_f64().unwrap_or(0.0))),
        Value::Array(items) => Value::Array(items.into_iter().map(round_json).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

/// The report as a JSON value with every float rounded to
/// [`VALUE_DIGITS`] significant digits.
pub fn report_json(report: &ExtremalReport) -> Value {
    round_json(serde_json::to_value(report).expect("report serializes"))
}

/// Pretty-printed [`report_json`] followed by a newline.
pub fn write_json<W: Write>(report: &ExtremalReport, mut out: W) -> Result<()> {
    let text = serde_json::to_string_pretty(&report_json(report)).expect("report serializes");
    writeln!(out, "{text}")?;
    Ok(())
}
