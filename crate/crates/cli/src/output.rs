//! Rendering of reports as human text, JSON or CSV.

use serde::Serialize;

use crate::{CliResult, Format};

/// Rendered report and exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

/// A header and rows of cells.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub trait Report: Serialize {
    fn human(&self) -> String;
    fn table(&self) -> Table;
    fn code(&self) -> u8 {
        crate::exit::OK
    }
}

pub fn csv_text(table: &Table) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 cells is utf-8"))
}

pub fn render<R: Report>(report: &R, format: Format) -> CliResult<Outcome> {
    let text = match format {
        Format::Human => {
            let mut t = report.human();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Csv => csv_text(&report.table())?,
    };
    Ok(Outcome {
        text,
        code: report.code(),
    })
}
