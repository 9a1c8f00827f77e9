use std::io::Write;
use std::path::Path;

use serde_json::Value;

use crate::Format;

/// A finished command: both renderings plus an optional failure that turns
/// into exit code 2 after the report has been written.
pub struct Report {
    pub json: Value,
    pub csv: String,
    pub failure: Option<String>,
}

impl Report {
    pub fn new(json: Value, csv: String) -> Self {
        Report { json, csv, failure: None }
    }

    pub fn fail_unless(mut self, ok: bool, msg: impl Into<String>) -> Self {
        if !ok {
            self.failure = Some(msg.into());
        }
        self
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> std::io::Result<()> {
        let mut text = match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialise"),
            Format::Csv => self.csv.clone(),
        };
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match out {
            Some(path) => std::fs::write(path, text),
            None => std::io::stdout().lock().write_all(text.as_bytes()),
        }
    }
}

/// Joins CSV cells; none of the emitted fields contain commas or quotes
/// except tableau/move lists, which are quoted here.
pub fn csv_line<I: IntoIterator<Item = String>>(cells: I) -> String {
    let cells: Vec<String> = cells
        .into_iter()
        .map(|c| if c.contains(',') { format!("\"{c}\"") } else { c })
        .collect();
    cells.join(",") + "\n"
}
