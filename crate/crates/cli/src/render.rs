//! Turning a command result into JSON, CSV or plain text.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rows for CSV output. Commands without one fall back to `key,value` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub value: Value,
    pub table: Option<Table>,
}

impl Output {
    pub fn new(value: impl serde::Serialize) -> Self {
        Output {
            value: serde_json::to_value(value).expect("output types serialize"),
            table: None,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.value).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => match &self.table {
                Some(t) => write_csv(&t.header, &t.rows),
                None => {
                    let mut rows = Vec::new();
                    flatten("", &self.value, &mut rows);
                    write_csv(&["key", "value"], &rows)
                }
            },
            Format::Text => {
                let mut out = String::new();
                text(&self.value, 0, &mut out);
                out
            }
        }
    }
}

/// Coefficient list as `degree,<name>` rows.
pub fn coefficient_table(name: &'static str, coeffs: &[String]) -> Table {
    Table {
        header: vec!["degree", name],
        rows: coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| vec![i.to_string(), c.clone()])
            .collect(),
    }
}

fn write_csv<S: AsRef<str>>(header: &[S], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header.iter().map(|h| h.as_ref()))
        .expect("in-memory csv");
    for row in rows {
        w.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::Array(_) | Value::Object(_) => None,
                other => scalar(other),
            })
            .collect::<Option<Vec<_>>>()
            .map(|v| v.join(" ")),
        Value::Object(_) => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<Vec<String>>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, rows);
            }
        }
        Value::Array(items) if scalar(v).is_none() => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, rows);
            }
        }
        other => rows.push(vec![prefix.to_string(), scalar(other).unwrap_or_default()]),
    }
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let Value::Object(map) = v else {
        out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default()));
        return;
    };
    for (k, x) in map {
        match x {
            Value::Null => out.push_str(&format!("{pad}{k}: none\n")),
            Value::Object(_) => {
                out.push_str(&format!("{pad}{k}:\n"));
                text(x, indent + 1, out);
            }
            Value::Array(items) if scalar(x).is_none() => {
                out.push_str(&format!("{pad}{k}:\n"));
                for item in items {
                    let line = match item {
                        Value::Object(row) => row
                            .iter()
                            .map(|(rk, rv)| format!("{rk}={}", scalar(rv).unwrap_or_default()))
                            .collect::<Vec<_>>()
                            .join(" "),
                        other => scalar(other).unwrap_or_default(),
                    };
                    out.push_str(&format!("{pad}  {line}\n"));
                }
            }
            other => out.push_str(&format!(
                "{pad}{k}: {}\n",
                scalar(other).unwrap_or_default()
            )),
        }
    }
}
