//! Output rendering: CSV (comma delimiter, LF line endings, header row),
//! JSON (schema-versioned, alphabetically ordered keys), and aligned pretty
//! tables. All rendering is deterministic: identical inputs produce
//! byte-identical bytes.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

/// A rectangular report body shared by the csv and pretty renderers.
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Self {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            debug_assert!(row.iter().all(|cell| !cell.contains(',')));
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        let fmt_row = |cells: Vec<&str>, widths: &[usize]| -> String {
            let mut line = cells
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
                .collect::<Vec<_>>()
                .join("  ");
            while line.ends_with(' ') {
                line.pop();
            }
            line
        };
        out.push_str(&fmt_row(self.headers.to_vec(), &widths));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&fmt_row(row.iter().map(String::as_str).collect(), &widths));
            out.push('\n');
        }
        out
    }
}

/// Write to the given path, or stdout when none.
pub fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .context("writing to stdout")?,
    }
    Ok(())
}

pub fn json_string(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}
