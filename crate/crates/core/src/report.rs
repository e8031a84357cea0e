//! Tabular output records shared by the command-line tool and the browser
//! demo, rendered as an aligned table, CSV, or JSON.
//!
//! Rationals are always written exactly as `p/q` (or `p` for integers).
//! In JSON every rational and big integer is a string; only the index
//! columns (`n`, `d`) are JSON numbers.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::checks::{self, CheckOutcome};
use crate::error::Result;
use crate::picard_fuchs::{solve_basis, yukawa};
use crate::series::{PowerSeries, Rational};
use crate::Pipeline;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format `{other}` (expected table, csv or json)"
            )),
        }
    }
}

/// Which holomorphic series `series` prints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// Holomorphic part of `I2`.
    F,
    /// Holomorphic part of `I3`.
    G,
    /// All three basis elements side by side.
    Basis,
}

impl FromStr for SeriesKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "f" => Ok(SeriesKind::F),
            "g" => Ok(SeriesKind::G),
            "basis" => Ok(SeriesKind::Basis),
            other => Err(format!("unknown series `{other}` (expected f, g or basis)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Index(usize),
    Rational(Rational),
    Integer(BigInt),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Index(i) => i.to_string(),
            Cell::Rational(r) => r.to_string(),
            Cell::Integer(i) => i.to_string(),
            Cell::Text(t) => t.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Index(i) => json!(i),
            other => Value::String(other.text()),
        }
    }

    fn is_numeric(&self) -> bool {
        !matches!(self, Cell::Text(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub command: String,
    pub order: usize,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Printed above the table; omitted from CSV and JSON.
    pub notes: Vec<String>,
}

impl OutputRecord {
    fn new(command: &str, order: usize, columns: &[&str]) -> Self {
        OutputRecord {
            command: command.to_string(),
            order,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::text).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain(std::iter::once(self.columns[j].chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for note in &self.notes {
            let _ = writeln!(out, "# {note}");
        }
        let header: Vec<String> = self
            .columns
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(j, (c, w))| {
                let numeric = self.rows.first().is_none_or(|r| r[j].is_numeric());
                if numeric {
                    format!("{c:>w$}")
                } else {
                    format!("{c:<w$}")
                }
            })
            .collect();
        let _ = writeln!(out, "{}", header.join("  ").trim_end());
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        let _ = writeln!(out, "{}", rule.join("  "));
        for (row, texts) in self.rows.iter().zip(&cells) {
            let line: Vec<String> = row
                .iter()
                .zip(texts)
                .zip(&widths)
                .map(|((cell, t), w)| {
                    if cell.is_numeric() {
                        format!("{t:>w$}")
                    } else {
                        format!("{t:<w$}")
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|c| csv_field(&c.text())).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
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
                    .cloned()
                    .zip(row.iter().map(Cell::json))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "command": self.command, "order": self.order, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn rational_cells(s: &PowerSeries, n: usize) -> Cell {
    Cell::Rational(s.coeff(n).clone())
}

/// Holomorphic parts of the Frobenius basis through `z^order`.
pub fn series_record(order: usize, which: SeriesKind) -> Result<OutputRecord> {
    let basis = solve_basis(order)?;
    let rec = match which {
        SeriesKind::F | SeriesKind::G => {
            let (name, s) = match which {
                SeriesKind::F => ("f", basis.f()),
                _ => ("g", basis.g()),
            };
            let mut rec = OutputRecord::new("series", order, &["n", name]);
            rec.rows = (1..=order)
                .map(|n| vec![Cell::Index(n), rational_cells(s, n)])
                .collect();
            rec
        }
        SeriesKind::Basis => {
            let mut rec = OutputRecord::new("series", order, &["n", "I1", "f", "g"]);
            rec.notes
                .push("I2 = log z + f, I3 = (log z)^2/2 + f log z + g".to_string());
            rec.rows = (0..=order)
                .map(|n| {
                    vec![
                        Cell::Index(n),
                        rational_cells(basis.i1.part(0), n),
                        rational_cells(basis.f(), n),
                        rational_cells(basis.g(), n),
                    ]
                })
                .collect();
            rec
        }
    };
    Ok(rec)
}

/// `c_1..c_order` of `I3` in the mirror coordinate.
pub fn mirror_record(order: usize) -> Result<OutputRecord> {
    let basis = solve_basis(order)?;
    let map = crate::mirror::build_map(&basis)?;
    let q = crate::mirror::q_expand_i3(&basis, &map)?;
    let mut rec = OutputRecord::new("mirror", order, &["d", "c_d"]);
    rec.notes
        .push("I3 = (log(-q))^2/2 + sum_d c_d q^d  (head term implied)".to_string());
    rec.notes
        .extend(q.anomalies.iter().map(|a| format!("warning: {a}")));
    rec.rows = q
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| vec![Cell::Index(i + 1), Cell::Rational(c.clone())])
        .collect();
    Ok(rec)
}

/// The invariant table, together with any high-degree anomalies found.
pub fn invariants_record(order: usize) -> Result<OutputRecord> {
    let p = Pipeline::run(order)?;
    let mut rec = OutputRecord::new(
        "invariants",
        order,
        &["d", "c_d", "m_d", "n_d", "K_d", "R_d"],
    );
    rec.notes
        .extend(p.q.anomalies.iter().map(|a| format!("warning: {a}")));
    rec.notes
        .extend(p.table.anomalies.iter().map(|a| format!("warning: {a}")));
    rec.rows = p
        .table
        .rows
        .iter()
        .map(|r| {
            vec![
                Cell::Index(r.degree),
                Cell::Rational(r.c.clone()),
                Cell::Integer(r.m.clone()),
                Cell::Integer(r.n.clone()),
                Cell::Rational(r.k.clone()),
                Cell::Rational(r.r.clone()),
            ]
        })
        .collect();
    Ok(rec)
}

/// The Yukawa coupling `K` next to `(1 − 27z) K`.
pub fn yukawa_record(order: usize) -> Result<OutputRecord> {
    let k = yukawa(&solve_basis(order)?)?;
    let product = k.mul(&PowerSeries::from_ints(&[1, -27], order));
    let mut rec = OutputRecord::new("yukawa", order, &["n", "K", "(1-27z)K"]);
    rec.rows = (0..=order)
        .map(|n| {
            vec![
                Cell::Index(n),
                rational_cells(&k, n),
                rational_cells(&product, n),
            ]
        })
        .collect();
    Ok(rec)
}

/// Outcome of the self-check suite; the second value is true iff every check passed.
pub fn check_record(order: usize) -> Result<(OutputRecord, bool)> {
    let outcomes = checks::run_checks(order)?;
    let passed = checks::all_passed(&outcomes);
    let mut rec = OutputRecord::new("check", order, &["check", "status", "detail"]);
    rec.rows = outcomes
        .iter()
        .map(
            |CheckOutcome {
                 name,
                 passed,
                 detail,
             }| {
                vec![
                    Cell::Text(name.to_string()),
                    Cell::Text(if *passed { "pass" } else { "fail" }.to_string()),
                    Cell::Text(detail.clone()),
                ]
            },
        )
        .collect();
    Ok((rec, passed))
}
