//! Tabular output in CSV or JSON.
//!
//! Numbers are written with Rust's shortest round-trip formatting, so every
//! value parses back to the identical `f64`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Explicit format wins; otherwise `.json` selects JSON and anything
    /// else CSV.
    pub fn resolve(explicit: Option<Format>, path: Option<&Path>) -> Format {
        explicit.unwrap_or_else(|| match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(&'static str),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    /// Extra `#fit`-style trailer lines in CSV; a sidecar object in JSON.
    trailer: Option<(&'static str, Vec<(&'static str, f64)>)>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
            trailer: None,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn set_trailer(&mut self, tag: &'static str, fields: Vec<(&'static str, f64)>) {
        self.trailer = Some((tag, fields));
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Num(v) => v.to_string(),
                    Cell::Text(s) => (*s).to_string(),
                    Cell::Empty => String::new(),
                })
                .collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        if let Some((tag, fields)) = &self.trailer {
            for (name, value) in fields {
                out.push_str(&format!("{tag},{name},{value}\n"));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(&k, c)| {
                        let v = match c {
                            Cell::Num(v) => number(*v),
                            Cell::Text(s) => Value::from(*s),
                            Cell::Empty => Value::Null,
                        };
                        (k.to_string(), v)
                    })
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("plain values always serialize");
        s.push('\n');
        s
    }

    fn sidecar_json(&self) -> Option<String> {
        self.trailer.as_ref().map(|(_, fields)| {
            let obj: Map<String, Value> = fields.iter().map(|&(k, v)| (k.to_string(), number(v))).collect();
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("plain values always serialize");
            s.push('\n');
            s
        })
    }

    /// Writes the table to `path` (standard output when `None`). For JSON
    /// with a trailer, the trailer goes to `<stem>.fit.json` next to `path`.
    pub fn write(&self, path: Option<&Path>, format: Format) -> io::Result<()> {
        let body = match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        };
        match path {
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
                if format == Format::Json {
                    if let Some(side) = self.sidecar_json() {
                        eprint!("{side}");
                    }
                }
                stdout.flush()
            }
            Some(path) => {
                if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                    fs::create_dir_all(parent)?;
                }
                fs::write(path, body)?;
                if format == Format::Json {
                    if let Some(side) = self.sidecar_json() {
                        fs::write(sidecar_path(path), side)?;
                    }
                }
                Ok(())
            }
        }
    }
}

pub fn sidecar_path(path: &Path) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.fit.json"))
}

fn number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["t", "position", "kind"]);
        t.push(vec![0.0.into(), Some(2.0 / 3.0).into(), Cell::Text("analytic")]);
        t.push(vec![0.1.into(), None.into(), Cell::Text("analytic")]);
        t
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            sample().to_csv(),
            "t,position,kind\n0,0.6666666666666666,analytic\n0.1,,analytic\n"
        );
    }

    #[test]
    fn csv_numbers_round_trip() {
        for v in [1.0 / 3.0, std::f64::consts::PI, 1e-300, 14.804406601634037] {
            let mut t = Table::new(vec!["v"]);
            t.push(vec![v.into()]);
            let csv = t.to_csv();
            let back: f64 = csv.lines().nth(1).unwrap().parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits());
        }
    }

    #[test]
    fn json_uses_same_fields_and_null_for_absent() {
        let v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0]["position"].as_f64().unwrap(), 2.0 / 3.0);
        assert!(rows[1]["position"].is_null());
        assert_eq!(rows[1]["kind"], "analytic");
        let keys: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["t", "position", "kind"]);
    }

    #[test]
    fn trailer_rows() {
        let mut t = Table::new(vec!["A", "amplitude"]);
        t.push(vec![0.5.into(), 0.25.into()]);
        t.set_trailer("#fit", vec![("coefficient", 0.5), ("exponent", 1.0)]);
        assert!(t.to_csv().ends_with("#fit,coefficient,0.5\n#fit,exponent,1\n"));
        assert!(t.sidecar_json().unwrap().contains("\"exponent\": 1.0"));
    }

    #[test]
    fn format_inference() {
        assert_eq!(Format::resolve(None, Some(Path::new("a/b.json"))), Format::Json);
        assert_eq!(Format::resolve(None, Some(Path::new("a/b.csv"))), Format::Csv);
        assert_eq!(Format::resolve(None, None), Format::Csv);
        assert_eq!(
            Format::resolve(Some(Format::Json), Some(Path::new("x.csv"))),
            Format::Json
        );
        assert_eq!(
            sidecar_path(Path::new("out/sweep.json")),
            Path::new("out/sweep.fit.json")
        );
    }
}
