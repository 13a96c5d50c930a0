//! Matrix serialization for spectrograms and chromagrams: CSV with a header
//! row, JSON, and plain (P2) PGM heatmaps.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Pgm,
}

/// How matrix values map to PGM grey levels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Shading {
    /// `20·log10(v / max)`, floored at the given dB, mapped to 0..=255.
    Decibels { floor_db: f64 },
    /// `v / max` mapped to 0..=255.
    Linear,
}

pub const PGM_MAX: u32 = 255;

/// Rows are frames in time order; columns are bins or pitch classes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    pub columns: Vec<String>,
    pub frame_times: Vec<f64>,
    pub values: Vec<Vec<f64>>,
}

impl Matrix {
    pub fn write(&self, format: OutputFormat, shading: Shading, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => {
                serde_json::to_writer(&mut *out, self).map_err(|e| CliError::Data(e.to_string()))?;
                writeln!(out)?;
                Ok(())
            }
            OutputFormat::Pgm => self.write_pgm(shading, out),
        }
    }

    /// Header `time_s,<columns>`; values printed in shortest round-trip form.
    pub fn write_csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        let header = std::iter::once("time_s".to_string()).chain(self.columns.iter().cloned());
        w.write_record(header).map_err(csv_err)?;
        for (t, row) in self.frame_times.iter().zip(&self.values) {
            let record = std::iter::once(t.to_string()).chain(row.iter().map(|v| v.to_string()));
            w.write_record(record).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv(input: &[u8]) -> Result<Self, CliError> {
        let mut r = csv::Reader::from_reader(input);
        let headers = r.headers().map_err(csv_err)?.clone();
        let columns = headers.iter().skip(1).map(str::to_string).collect();
        let mut frame_times = Vec::new();
        let mut values = Vec::new();
        for record in r.records() {
            let record = record.map_err(csv_err)?;
            let mut fields = record.iter().map(|f| {
                f.parse::<f64>()
                    .map_err(|e| CliError::Data(format!("bad number {f:?}: {e}")))
            });
            frame_times.push(fields.next().ok_or_else(|| CliError::Data("empty row".into()))??);
            values.push(fields.collect::<Result<Vec<_>, _>>()?);
        }
        Ok(Self {
            columns,
            frame_times,
            values,
        })
    }

    /// Width is the frame count and height the column count, with the last
    /// column (highest bin or class) on the top row.
    pub fn write_pgm(&self, shading: Shading, out: &mut dyn Write) -> Result<(), CliError> {
        let width = self.values.len();
        let height = self.columns.len();
        let max = self.values.iter().flatten().fold(0.0f64, |m, &v| m.max(v));
        let level = |v: f64| -> u32 {
            if max <= 0.0 {
                return 0;
            }
            let unit = match shading {
                Shading::Linear => v / max,
                Shading::Decibels { floor_db } => {
                    let db = if v > 0.0 { 20.0 * (v / max).log10() } else { floor_db };
                    (db.max(floor_db) - floor_db) / -floor_db
                }
            };
            (unit.clamp(0.0, 1.0) * PGM_MAX as f64).round() as u32
        };
        writeln!(out, "P2")?;
        writeln!(out, "{width} {height}")?;
        writeln!(out, "{PGM_MAX}")?;
        for col in (0..height).rev() {
            let line: Vec<String> = self.values.iter().map(|row| level(row[col]).to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Data(format!("csv: {e}"))
}
