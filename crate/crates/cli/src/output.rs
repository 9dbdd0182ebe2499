//! Row tables rendered as CSV, line-delimited JSON or aligned text.
//!
//! Every format is produced from the same rows, so CSV and JSON always carry
//! identical data. Rationals are spread over `<name>_num`, `<name>_den` and
//! `<name>_decimal` columns.

use std::io::{self, Write};
use std::str::FromStr;

use serde_json::{Map, Value};
use tindex_core::report::decimal;
use tindex_core::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Graph6,
    Human,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" | "jsonl" => Ok(Format::Json),
            "graph6" | "g6" => Ok(Format::Graph6),
            "human" | "text" => Ok(Format::Human),
            other => Err(format!(
                "unknown format `{other}` (csv, json, graph6, human)"
            )),
        }
    }
}

#[derive(Debug, Default, Clone)]
pub struct Row(Map<String, Value>);

impl Row {
    pub fn new() -> Row {
        Row::default()
    }

    pub fn set(mut self, key: &str, value: impl Into<Value>) -> Row {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn big(self, key: &str, value: &impl ToString) -> Row {
        let text = value.to_string();
        let v = text
            .parse::<i64>()
            .map(Value::from)
            .unwrap_or(Value::String(text));
        self.set(key, v)
    }

    pub fn rational(self, key: &str, r: &Rational) -> Row {
        self.big(&format!("{key}_num"), r.numer())
            .big(&format!("{key}_den"), r.denom())
            .set(&format!("{key}_decimal"), decimal(r))
    }

    pub fn blank_rational(self, key: &str) -> Row {
        self.set(&format!("{key}_num"), "")
            .set(&format!("{key}_den"), "")
            .set(&format!("{key}_decimal"), "")
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Rows sharing the first row's columns. The columns given to [`Table::new`]
/// only head an empty table.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Table {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Row) {
        if self.rows.is_empty() {
            self.columns = row.0.keys().cloned().collect();
        }
        self.rows.push(row);
    }

    fn values(&self, row: &Row) -> Vec<String> {
        self.columns
            .iter()
            .map(|c| row.0.get(c).map(cell).unwrap_or_default())
            .collect()
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv | Format::Graph6 => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(self.values(row))?;
                }
                w.flush()
            }
            Format::Json => {
                for row in &self.rows {
                    let mut m = Map::new();
                    for c in &self.columns {
                        m.insert(c.clone(), row.0.get(c).cloned().unwrap_or(Value::Null));
                    }
                    writeln!(out, "{}", Value::Object(m))?;
                }
                Ok(())
            }
            Format::Human => {
                let body: Vec<Vec<String>> = self.rows.iter().map(|r| self.values(r)).collect();
                let widths: Vec<usize> = self
                    .columns
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        body.iter()
                            .map(|r| r[i].len())
                            .chain([c.len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(out, "{}", line(&self.columns))?;
                for r in &body {
                    writeln!(out, "{}", line(r))?;
                }
                Ok(())
            }
        }
    }
}
