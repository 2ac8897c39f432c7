//! Command reports and their table and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Warn,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Warn => "WARN",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub detail: String,
}

impl CheckRow {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: None,
            detail: detail.into(),
        }
    }

    pub fn with_status(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            status,
            residual: None,
            detail: detail.into(),
        }
    }

    pub fn residual(mut self, r: f64) -> Self {
        self.residual = Some(r);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub model: String,
    pub results: Map<String, Value>,
    pub checks: Vec<CheckRow>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &'static str, model: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command,
            model: model.into(),
            results: Map::new(),
            checks: Vec::new(),
            passed: true,
            elapsed_ms: 0,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, row: CheckRow) {
        self.checks.push(row);
    }

    pub fn finish(&mut self, elapsed_ms: u64) {
        self.passed = self.checks.iter().all(|c| c.status != Status::Fail);
        self.elapsed_ms = elapsed_ms;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "hgauge {} · {}", self.command, self.model).unwrap();
        for (k, v) in &self.results {
            render_value(&mut out, k, v, 1);
        }
        if !self.checks.is_empty() {
            out.push('\n');
            let rows: Vec<Vec<String>> = self
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.status.label().to_string(),
                        c.name.clone(),
                        c.residual.map_or(String::new(), |r| format!("{r:.1e}")),
                        c.detail.clone(),
                    ]
                })
                .collect();
            render_rows(&mut out, &["", "check", "residual", "detail"], &rows, 1);
        }
        writeln!(
            out,
            "\n{} ({} ms)",
            if self.passed {
                "all checks passed"
            } else {
                "some checks FAILED"
            },
            self.elapsed_ms
        )
        .unwrap();
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.iter().any(Value::is_array) => a
            .iter()
            .map(|x| format!("({})", scalar(x)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(", "),
        Value::Object(o) => o
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(o) => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (k, x) in o {
                render_value(out, k, x, depth + 1);
            }
        }
        Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object) => {
            writeln!(out, "{pad}{key}:").unwrap();
            let header: Vec<String> = a[0].as_object().expect("object").keys().cloned().collect();
            let rows: Vec<Vec<String>> = a
                .iter()
                .map(|row| {
                    let o = row.as_object().expect("object");
                    header
                        .iter()
                        .map(|h| o.get(h).map_or(String::new(), scalar))
                        .collect()
                })
                .collect();
            let names: Vec<&str> = header.iter().map(String::as_str).collect();
            render_rows(out, &names, &rows, depth + 1);
        }
        other => writeln!(out, "{pad}{key}: {}", scalar(other)).unwrap(),
    }
}

fn render_rows(out: &mut String, header: &[&str], rows: &[Vec<String>], depth: usize) {
    let pad = "  ".repeat(depth);
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let mut s = pad.clone();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(w - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string()
    };
    let head: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    if head.iter().any(|h| !h.is_empty()) {
        writeln!(out, "{}", line(&head)).unwrap();
    }
    for r in rows {
        writeln!(out, "{}", line(r)).unwrap();
    }
}
