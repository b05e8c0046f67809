//! Report envelope and the three output formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub params: BTreeMap<String, String>,
}

/// `{"meta": ..., "data": ...}`; everything run-specific lives under `meta`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report<T> {
    pub meta: Meta,
    pub data: T,
}

/// A rendered command result: JSON data plus optional CSV and text forms.
pub struct Rendered {
    pub meta: Meta,
    pub json: serde_json::Value,
    pub csv: Option<String>,
    pub text: String,
}

impl Rendered {
    pub fn new<T: Serialize>(meta: Meta, data: &T, text: String) -> Self {
        let json = serde_json::to_value(data).expect("report data serializes");
        Rendered { meta, json, csv: None, text }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                let report = Report { meta: self.meta.clone(), data: self.json.clone() };
                let mut s = serde_json::to_string_pretty(&report).expect("json value serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| format!("`{}` has no CSV form; use --format json or text", self.meta.command)),
            Format::Text => Ok(self.text.clone()),
        }
    }
}

pub fn write_output(content: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())?;
            lock.flush()
        }
    }
}

/// Two-column CSV with a header row.
pub fn csv_table<K: ToString, V: ToString>(header: (&str, &str), rows: impl IntoIterator<Item = (K, V)>) -> String {
    let mut s = format!("{},{}\n", header.0, header.1);
    for (k, v) in rows {
        let _ = writeln!(s, "{},{}", k.to_string(), v.to_string());
    }
    s
}
