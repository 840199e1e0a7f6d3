//! A small table model shared by every subcommand, rendered as aligned
//! text, CSV, or versioned JSON.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use symtrap_core::{Parity, Partition};

pub const SCHEMA: &str = "symtrap/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Text(String),
    /// A partition, as its part list.
    Parts(Vec<usize>),
    /// An irrep `[p]^π`.
    Irrep {
        parts: Vec<usize>,
        parity: String,
    },
}

impl Cell {
    pub fn int(v: impl TryInto<i64>) -> Cell {
        Cell::Int(v.try_into().unwrap_or(i64::MAX))
    }

    /// Integers beyond 64 bits are kept exact as decimal text.
    pub fn big(v: &BigInt) -> Cell {
        v.to_i64().map_or_else(|| Cell::Text(v.to_string()), Cell::Int)
    }

    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn partition(p: &Partition) -> Cell {
        Cell::Parts(p.parts().to_vec())
    }

    pub fn irrep(p: &Partition, pi: Parity) -> Cell {
        Cell::Irrep { parts: p.parts().to_vec(), parity: pi.symbol().to_string() }
    }

    fn notation(parts: &[usize]) -> String {
        Partition::new(parts.to_vec()).map(|p| p.notation()).unwrap_or_else(|_| format!("{parts:?}"))
    }

    /// Human-readable form, e.g. `[21^2]+`.
    pub fn render_text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Parts(p) => format!("[{}]", Cell::notation(p)),
            Cell::Irrep { parts, parity } => format!("[{}]{parity}", Cell::notation(parts)),
        }
    }

    /// CSV form: bracket-free partition notation.
    pub fn render_csv(&self) -> String {
        match self {
            Cell::Parts(p) => Cell::notation(p),
            Cell::Irrep { parts, parity } => format!("{}{parity}", Cell::notation(parts)),
            other => other.render_text(),
        }
    }

    fn is_numeric(&self) -> bool {
        matches!(self, Cell::Int(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub n: usize,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl Report {
    pub fn new(command: &str, n: usize, title: impl Into<String>, columns: Vec<String>) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            n,
            title: title.into(),
            columns,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_text(&self) -> String {
        let body: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::render_text).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let numeric: Vec<bool> =
            (0..self.columns.len()).map(|j| self.rows.iter().all(|r| r.get(j).is_some_and(Cell::is_numeric))).collect();
        let line = |cells: &[String]| {
            let parts: Vec<String> = cells
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let pad = widths[j] - c.chars().count();
                    if numeric[j] {
                        format!("{}{c}", " ".repeat(pad))
                    } else {
                        format!("{c}{}", " ".repeat(pad))
                    }
                })
                .collect();
            parts.join("  ").trim_end().to_string()
        };
        let mut out = format!("{}\n", self.title);
        out.push_str(&line(&self.columns));
        out.push('\n');
        for row in &body {
            out.push_str(&line(row));
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render_csv)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}
