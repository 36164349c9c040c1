//! Certification reports.
//!
//! The text form is a sequence of `key: value` lines with a fixed field
//! order: a header block, then one `[row N]` block per row.
//!
//! ```text
//! tool_version: 0.1.0
//! command: verify-tables --dim 5
//! overall_pass: true
//! row_count: 1
//!
//! [row 1]
//! label: e >= 137
//! inputs: d=5; e0=137
//! exact_bound: 137/120
//! decimal: 1.1416
//! target: 17/15
//! pass: true
//! notes: bound is e0/d!
//! ```
//!
//! `target` is `none` for rows that only report a value. Notes are joined
//! with ` | `. The CSV export has one line per row with the same fields.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub label: String,
    pub inputs: Vec<(String, String)>,
    pub exact_bound: Rational,
    pub decimal: String,
    pub target: Option<Rational>,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl ReportRow {
    /// Pass iff `bound >= target`; rows without a target always pass.
    pub fn new(
        label: impl Into<String>,
        inputs: Vec<(String, String)>,
        exact_bound: Rational,
        target: Option<Rational>,
        digits: usize,
    ) -> Self {
        let pass = target.as_ref().is_none_or(|t| exact_bound >= *t);
        ReportRow {
            label: label.into(),
            inputs,
            decimal: exact_bound.to_decimal(digits),
            exact_bound,
            target,
            pass,
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn inputs_field(&self) -> String {
        self.inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join("; ")
    }

    fn target_field(&self) -> String {
        self.target.as_ref().map_or_else(|| "none".to_string(), Rational::to_string)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationReport {
    pub tool_version: String,
    pub command: String,
    pub rows: Vec<ReportRow>,
    pub overall_pass: bool,
}

pub fn input(key: &str, value: impl ToString) -> (String, String) {
    (key.to_string(), value.to_string())
}

fn clean(field: &str) -> String {
    field.replace(['\n', '\r'], " ")
}

impl CertificationReport {
    pub fn new(command: impl Into<String>, rows: Vec<ReportRow>) -> Self {
        let overall_pass = rows.iter().all(|r| r.pass);
        CertificationReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            rows,
            overall_pass,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "tool_version: {}", self.tool_version);
        let _ = writeln!(out, "command: {}", clean(&self.command));
        let _ = writeln!(out, "overall_pass: {}", self.overall_pass);
        let _ = writeln!(out, "row_count: {}", self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let _ = writeln!(out);
            let _ = writeln!(out, "[row {}]", i + 1);
            let _ = writeln!(out, "label: {}", clean(&row.label));
            let _ = writeln!(out, "inputs: {}", clean(&row.inputs_field()));
            let _ = writeln!(out, "exact_bound: {}", row.exact_bound);
            let _ = writeln!(out, "decimal: {}", row.decimal);
            let _ = writeln!(out, "target: {}", row.target_field());
            let _ = writeln!(out, "pass: {}", row.pass);
            let _ = writeln!(out, "notes: {}", clean(&row.notes.join(" | ")));
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::invalid(format!("csv: {e}"));
        w.write_record(["row", "label", "inputs", "exact_bound", "decimal", "target", "pass", "notes"])
            .map_err(io)?;
        for (i, row) in self.rows.iter().enumerate() {
            w.write_record([
                (i + 1).to_string(),
                row.label.clone(),
                row.inputs_field(),
                row.exact_bound.to_string(),
                row.decimal.clone(),
                row.target_field(),
                row.pass.to_string(),
                row.notes.join(" | "),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::invalid(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::invalid(format!("csv: {e}")))
    }

    /// Reads back the text form produced by [`CertificationReport::to_text`].
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().peekable();
        let mut header = |key: &'static str| -> Result<String> {
            let line = lines.next().ok_or_else(|| Error::parse(text, "a certification report"))?;
            field(line, key)
        };
        let tool_version = header("tool_version")?;
        let command = header("command")?;
        let overall_pass = parse_bool(&header("overall_pass")?)?;
        let row_count: usize = header("row_count")?
            .parse()
            .map_err(|_| Error::parse(text, "a row count"))?;

        let mut rows = Vec::with_capacity(row_count);
        let mut block: Vec<&str> = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            if line.starts_with("[row ") {
                if !block.is_empty() {
                    rows.push(parse_row(&block)?);
                    block.clear();
                }
                continue;
            }
            block.push(line);
        }
        if !block.is_empty() {
            rows.push(parse_row(&block)?);
        }
        if rows.len() != row_count {
            return Err(Error::invalid(format!("report declares {row_count} rows, found {}", rows.len())));
        }
        Ok(CertificationReport { tool_version, command, rows, overall_pass })
    }
}

fn field(line: &str, key: &str) -> Result<String> {
    line.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(": ").or_else(|| rest.strip_prefix(':')))
        .map(str::to_string)
        .ok_or_else(|| Error::parse(line, "a report field"))
}

fn parse_bool(s: &str) -> Result<bool> {
    match s {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(Error::parse(s, "true or false")),
    }
}

fn parse_row(block: &[&str]) -> Result<ReportRow> {
    const KEYS: [&str; 7] = ["label", "inputs", "exact_bound", "decimal", "target", "pass", "notes"];
    if block.len() != KEYS.len() {
        return Err(Error::invalid(format!("row has {} fields, expected {}", block.len(), KEYS.len())));
    }
    let values: Vec<String> = block
        .iter()
        .zip(KEYS)
        .map(|(line, key)| field(line, key))
        .collect::<Result<_>>()?;
    let inputs = if values[1].is_empty() {
        Vec::new()
    } else {
        values[1]
            .split("; ")
            .map(|kv| {
                kv.split_once('=')
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .ok_or_else(|| Error::parse(kv, "key=value"))
            })
            .collect::<Result<_>>()?
    };
    let target = match values[4].as_str() {
        "none" => None,
        t => Some(t.parse()?),
    };
    let notes = if values[6].is_empty() {
        Vec::new()
    } else {
        values[6].split(" | ").map(str::to_string).collect()
    };
    Ok(ReportRow {
        label: values[0].clone(),
        inputs,
        exact_bound: values[2].parse()?,
        decimal: values[3].clone(),
        target,
        pass: parse_bool(&values[5])?,
        notes,
    })
}
