use std::fmt::Display;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// A command's result: a JSON document plus a flat table for csv/pretty.
#[derive(Debug, Default)]
pub struct Output {
    pub json: Map<String, Value>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Summary lines shown above the table in pretty mode.
    pub notes: Vec<String>,
    /// False when a verification inside the command failed.
    pub failed: bool,
}

impl Output {
    pub fn new(command: &str) -> Self {
        let mut json = Map::new();
        json.insert("schema".into(), Value::from(1));
        json.insert("command".into(), Value::from(command));
        Output { json, ..Default::default() }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.json.insert(key.into(), v.into());
    }

    pub fn header(&mut self, cols: &[&str]) {
        self.header = cols.iter().map(|s| s.to_string()).collect();
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&Value::Object(self.json.clone())).unwrap();
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
                if !self.header.is_empty() {
                    w.write_record(&self.header).unwrap();
                }
                for r in &self.rows {
                    w.write_record(r).unwrap();
                }
                String::from_utf8(w.into_inner().unwrap()).unwrap()
            }
            Format::Pretty => {
                let mut out = String::new();
                for n in &self.notes {
                    out.push_str(n);
                    out.push('\n');
                }
                if self.header.is_empty() {
                    return out;
                }
                if !self.notes.is_empty() {
                    out.push('\n');
                }
                let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
                for r in &self.rows {
                    for (i, c) in r.iter().enumerate() {
                        width[i] = width[i].max(c.chars().count());
                    }
                }
                let line = |cells: &[String]| -> String {
                    let padded: Vec<String> =
                        cells.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = width[i])).collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                out.push_str(&line(&self.header));
                let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
                out.push_str(&line(&rule));
                for r in &self.rows {
                    out.push_str(&line(r));
                }
                out
            }
        }
    }
}

/// Integers as JSON numbers when they fit, strings otherwise.
pub fn num<T: Display>(v: &T) -> Value {
    let s = v.to_string();
    match s.parse::<i64>() {
        Ok(i) => Value::from(i),
        Err(_) => Value::from(s),
    }
}

pub fn strs<T: Display>(v: impl IntoIterator<Item = T>) -> Value {
    Value::Array(v.into_iter().map(|x| Value::from(x.to_string())).collect())
}

pub fn pass(ok: bool) -> String {
    if ok { "pass" } else { "FAIL" }.to_string()
}
