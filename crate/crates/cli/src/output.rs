//! Tabular output: aligned text on stdout, CSV or JSON files with a manifest.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

use ionchain::constants::CONSTANTS_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// `%g`-style formatting with `digits` significant digits.
pub fn format_number(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // Decide on the rounded scientific form, so that a carry into the next
    // decade is accounted for.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, e) = sci.split_once('e').expect("scientific format");
    let e: i32 = e.parse().expect("exponent");
    if e < -4 || e >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), e)
    } else {
        let decimals = (digits as i32 - 1 - e).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn text(&self, cell: &Cell, digits: usize) -> String {
        match cell {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => format_number(*v, digits),
            Cell::Text(t) => t.clone(),
        }
    }

    /// Right-aligned columns separated by two spaces.
    pub fn render(&self, digits: usize) -> String {
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(|c| self.text(c, digits)).collect()).collect();
        let mut width: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |items: &[String]| -> String {
            let parts: Vec<String> = items.iter().zip(&width).map(|(s, w)| format!("{s:>w$}")).collect();
            parts.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.columns) + "\n";
        for row in &cells {
            out += &line(row);
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = self.columns.join(",") + "\n";
        for row in &self.rows {
            let items: Vec<String> = row
                .iter()
                .map(|c| {
                    let t = self.text(c, digits);
                    if t.contains(',') || t.contains('"') {
                        format!("\"{}\"", t.replace('"', "\"\""))
                    } else {
                        t
                    }
                })
                .collect();
            out += &items.join(",");
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, digits: usize) -> Result<String> {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (k, c) in self.columns.iter().zip(row) {
                    let v = match c {
                        Cell::Int(v) => Value::from(*v),
                        Cell::Num(v) => {
                            let rounded: f64 = format_number(*v, digits).parse().unwrap_or(*v);
                            serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
                        }
                        Cell::Text(t) => Value::from(t.clone()),
                    };
                    obj.insert(k.clone(), v);
                }
                Value::Object(obj)
            })
            .collect();
        Ok(serde_json::to_string_pretty(&records)? + "\n")
    }
}

#[derive(Debug, Serialize)]
struct RunManifest<'a> {
    command: &'a str,
    parameters: &'a Value,
    constants: &'static str,
    tool_version: &'static str,
    output: String,
    format: Format,
    precision: usize,
    wall_time_s: f64,
}

/// Where and how a command writes its files.
pub struct Sink {
    pub dir: Option<PathBuf>,
    pub format: Format,
    pub precision: usize,
    pub command: String,
    pub parameters: Value,
    started: Instant,
}

impl Sink {
    pub fn new(dir: Option<PathBuf>, format: Format, precision: usize, command: &str, parameters: Value) -> Self {
        Self { dir, format, precision, command: command.into(), parameters, started: Instant::now() }
    }

    /// Prints `table` and, when an output directory is set, writes it to a
    /// file named after the table plus a `.manifest.json` companion.
    pub fn emit(&self, table: &Table) -> Result<()> {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        writeln!(lock, "# {}", table.name)?;
        write!(lock, "{}", table.render(self.precision))?;
        writeln!(lock)?;
        if let Some(dir) = &self.dir {
            self.write_file(dir, table)?;
        }
        Ok(())
    }

    fn write_file(&self, dir: &Path, table: &Table) -> Result<()> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let file = dir.join(format!("{}.{}", table.name, self.format.extension()));
        let body = match self.format {
            Format::Csv => table.to_csv(self.precision),
            Format::Json => table.to_json(self.precision)?,
        };
        fs::write(&file, body).with_context(|| format!("writing {}", file.display()))?;
        let manifest = RunManifest {
            command: &self.command,
            parameters: &self.parameters,
            constants: CONSTANTS_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            output: file.file_name().unwrap().to_string_lossy().into_owned(),
            format: self.format,
            precision: self.precision,
            wall_time_s: self.started.elapsed().as_secs_f64(),
        };
        let mpath = dir.join(format!("{}.manifest.json", table.name));
        fs::write(&mpath, serde_json::to_string_pretty(&manifest)? + "\n")
            .with_context(|| format!("writing {}", mpath.display()))?;
        Ok(())
    }
}
