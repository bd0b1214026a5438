use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::record::ScanRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Tty,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "tty" => Ok(Self::Tty),
            other => Err(format!("unknown output format `{other}` (expected csv, json or tty)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Tty => "tty",
        })
    }
}

pub fn write_csv<W: Write>(out: W, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> anyhow::Result<()> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: Serialize + ?Sized>(mut out: W, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Left-aligned columns padded to the widest cell.
pub fn write_aligned<W: Write>(mut out: W, header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

pub fn write_records<W: Write>(out: W, format: OutputFormat, records: &[ScanRecord]) -> anyhow::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(out, &ScanRecord::CSV_HEADER, records.iter().map(|r| r.csv_row().to_vec())),
        OutputFormat::Json => write_json(out, records),
        OutputFormat::Tty => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let mut row = r.csv_row().to_vec();
                    row[4] = abbreviate(&row[4]);
                    row
                })
                .collect();
            write_aligned(out, &ScanRecord::CSV_HEADER, &rows)
        }
    }
}

/// Long integers shortened for the terminal, keeping the digit count.
fn abbreviate(digits: &str) -> String {
    let body = digits.trim_start_matches('-');
    if body.len() <= 24 {
        return digits.to_string();
    }
    let sign = if digits.starts_with('-') { "-" } else { "" };
    format!("{sign}{}...{} ({} digits)", &body[..10], &body[body.len() - 6..], body.len())
}
