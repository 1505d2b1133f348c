//! Tabular output shared by every subcommand.
//!
//! A command produces a [`Document`]; rendering is either RFC-4180 CSV with a
//! header row and `\n` line endings, or a single JSON object
//! `{schema_version, command, params, rows}`.

use std::io::Write;

use emw_core::arith::{log10_abs_int, log10_abs_rat, rat_to_f64};
use emw_core::{Int, Rat};
use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Small integer, a JSON number.
    Int(i64),
    /// Exact value as a decimal integer or `p/q` string.
    Exact(String),
    /// Rounded to the document's digit count; `None` renders empty / null.
    Float(Option<f64>),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn exact_int(v: &Int) -> Self {
        Self::Exact(v.to_string())
    }

    pub fn exact_rat(v: &Rat) -> Self {
        Self::Exact(v.to_string())
    }

    pub fn float(v: f64) -> Self {
        Self::Float(Some(v))
    }

    pub fn approx_rat(v: &Rat) -> Self {
        Self::Float(Some(rat_to_f64(v)))
    }

    pub fn log10_int(v: &Int) -> Self {
        Self::Float(log10_abs_int(v))
    }

    pub fn log10_rat(v: &Rat) -> Self {
        Self::Float(log10_abs_rat(v))
    }

    pub fn text(s: impl Into<String>) -> Self {
        Self::Text(s.into())
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        i64::try_from(v).map(Cell::Int).unwrap_or_else(|_| Cell::Exact(v.to_string()))
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::from(v as u64)
    }
}

#[derive(Debug, Clone)]
pub struct Document {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Document {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Self { command, params: Map::new(), columns, rows: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn fmt_float(v: f64, digits: usize) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{v:.digits$}");
    // Avoid "-0.000000".
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn csv_field(cell: &Cell, digits: usize) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Exact(s) | Cell::Text(s) => s.clone(),
        Cell::Float(Some(v)) => fmt_float(*v, digits),
        Cell::Float(None) => String::new(),
        Cell::Bool(b) => b.to_string(),
    }
}

fn json_value(cell: &Cell, digits: usize) -> Value {
    match cell {
        Cell::Int(v) => Value::from(*v),
        Cell::Exact(s) | Cell::Text(s) => Value::String(s.clone()),
        Cell::Float(Some(v)) => fmt_float(*v, digits)
            .parse::<f64>()
            .ok()
            .and_then(Number::from_f64)
            .map(Value::Number)
            .unwrap_or(Value::Null),
        Cell::Float(None) => Value::Null,
        Cell::Bool(b) => Value::Bool(*b),
    }
}

pub fn render(doc: &Document, format: Format, digits: usize, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            w.write_record(&doc.columns)?;
            for row in &doc.rows {
                w.write_record(row.iter().map(|c| csv_field(c, digits)))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<Value> = doc
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = doc
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.to_string(), json_value(v, digits)))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let mut top = Map::new();
            top.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
            top.insert("command".into(), Value::from(doc.command));
            top.insert("params".into(), Value::Object(doc.params.clone()));
            top.insert("rows".into(), Value::Array(rows));
            serde_json::to_writer(&mut *out, &Value::Object(top))?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc() -> Document {
        let mut d = Document::new("demo", vec!["k", "value", "r"]).param("k", 3);
        d.push(vec![Cell::Int(3), Cell::Exact("-25/6".into()), Cell::float(1.0 / 3.0)]);
        d.push(vec![Cell::Int(4), Cell::Exact("7".into()), Cell::Float(None)]);
        d
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        render(&doc(), Format::Csv, 4, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "k,value,r\n3,-25/6,0.3333\n4,7,\n");
    }

    #[test]
    fn json_layout() {
        let mut buf = Vec::new();
        render(&doc(), Format::Json, 4, &mut buf).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["command"], "demo");
        assert_eq!(v["params"]["k"], 3);
        assert_eq!(v["rows"][0]["value"], "-25/6");
        assert_eq!(v["rows"][0]["r"], 0.3333);
        assert!(v["rows"][1]["r"].is_null());
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(fmt_float(-1e-12, 3), "0.000");
        assert_eq!(fmt_float(-0.5, 1), "-0.5");
    }
}
