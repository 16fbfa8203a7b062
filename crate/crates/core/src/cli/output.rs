use std::io::Write;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Missing,
}

impl Cell {
    /// Text form; floats carry 17 significant digits.
    pub fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) if x.is_finite() => format!("{x:.16e}"),
            Cell::Float(x) => x.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Float(x) if x.is_finite() => {
                Value::Number(Number::from_str(&self.render()).expect("formatted float is valid JSON"))
            }
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Float(_) | Cell::Missing => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        i64::try_from(n).map(Cell::Int).unwrap_or(Cell::Float(n as f64))
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::from(n as u64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Missing, Into::into)
    }
}

/// A result table plus the metadata needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputTable {
    pub command: String,
    pub version: String,
    /// Resolved configuration, in echo order.
    pub config: Vec<(String, String)>,
    pub warnings: Vec<String>,
    /// Derived quantities such as fits, as `key = value`.
    pub notes: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputTable {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl ToString) {
        self.notes.push((key.into(), value.to_string()));
    }

    /// Sorted, de-duplicated warnings.
    fn warnings(&self) -> Vec<&str> {
        let mut w: Vec<&str> = self.warnings.iter().map(String::as_str).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# dephasim {}", self.version)?;
        writeln!(out, "# command = {}", self.command)?;
        for (k, v) in &self.config {
            writeln!(out, "# {k} = {v}")?;
        }
        for (k, v) in &self.notes {
            writeln!(out, "# note: {k} = {v}")?;
        }
        for w in self.warnings() {
            writeln!(out, "# warning: {w}")?;
        }
        let mut csv = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        csv.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            csv.write_record(row.iter().map(Cell::render)).map_err(io)?;
        }
        csv.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let pairs = |xs: &[(String, String)]| {
            Value::Object(xs.iter().map(|(k, v)| (k.clone(), Value::from(v.as_str()))).collect::<Map<_, _>>())
        };
        let meta = serde_json::json!({
            "tool": "dephasim",
            "version": self.version,
            "command": self.command,
            "config": pairs(&self.config),
            "notes": pairs(&self.notes),
            "warnings": self.warnings(),
            "columns": self.columns,
        });
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, cell)| (c.clone(), cell.json()))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "meta": meta, "rows": rows })
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json()).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(out)?;
        Ok(())
    }
}
