//! Machine-readable output records.
//!
//! Every emitted file carries the complete parameter echo needed to
//! reproduce its numeric payload bit for bit: rerunning the command with
//! the echoed parameters yields byte-identical columns.
//!
//! CSV files start with `# key = value` echo lines, then an RFC-4180
//! header row and data rows with numbers at 17 significant digits (which
//! round-trips every f64 exactly). JSON files are a single record object;
//! serde emits shortest-round-trip floats.

use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct Column {
    pub name: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    /// Fully resolved inputs, including defaulted ones, seeds and cutoffs.
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<Column>,
}

impl OutputRecord {
    pub fn new(command: &str, parameters: BTreeMap<String, String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            columns: Vec::new(),
        }
    }

    pub fn push_column(&mut self, name: &str, values: Vec<f64>) {
        self.columns.push(Column {
            name: name.to_string(),
            values,
        });
    }

    pub fn write_json(&self, mut out: impl Write) -> std::io::Result<()> {
        serde_json::to_writer(&mut out, self)?;
        writeln!(out)
    }

    pub fn write_csv(&self, mut out: impl Write) -> std::io::Result<()> {
        writeln!(out, "# schema_version = {}", self.schema_version)?;
        writeln!(out, "# command = {}", self.command)?;
        for (key, value) in &self.parameters {
            writeln!(out, "# {key} = {value}")?;
        }
        let mut writer = csv::Writer::from_writer(out);
        writer
            .write_record(self.columns.iter().map(|c| c.name.as_str()))
            .map_err(unwrap_csv_io)?;
        let rows = self.columns.first().map(|c| c.values.len()).unwrap_or(0);
        for row in 0..rows {
            let record: Vec<String> = self
                .columns
                .iter()
                .map(|c| format!("{:.16e}", c.values[row]))
                .collect();
            writer.write_record(&record).map_err(unwrap_csv_io)?;
        }
        writer.flush()?;
        Ok(())
    }
}

/// Surface the underlying io error (a closed pipe in particular) instead
/// of the csv wrapper around it.
fn unwrap_csv_io(e: csv::Error) -> std::io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => io,
        other => std::io::Error::other(format!("csv: {other:?}")),
    }
}
