use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    /// Comma-separated values with a header row.
    Csv,
    /// The value column joined by commas on one line.
    Oeis,
}

/// A row of command output. `value` is the column printed by `--format oeis`.
pub trait Row: Serialize {
    fn value(&self) -> Option<String>;
}

pub fn open(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

/// Write `rows` in `format`. Fails with `InvalidInput` if the rows have no
/// value column and `format` is `oeis`.
pub fn emit<R: Row>(rows: &[R], format: Format, w: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut *w);
            for r in rows {
                c.serialize(r)?;
            }
            c.flush()?;
        }
        Format::Oeis => {
            let values: Option<Vec<String>> = rows.iter().map(Row::value).collect();
            let Some(values) = values else {
                return Err(io::Error::new(io::ErrorKind::InvalidInput, "this command has no sequence to print"));
            };
            writeln!(w, "{}", values.join(","))?;
        }
    }
    w.flush()
}
