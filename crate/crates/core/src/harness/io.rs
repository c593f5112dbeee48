//! CSV and JSON persistence of result records.

use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use super::record::{ResultRecord, CSV_HEADER};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    /// From the file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse {
                what: "output format",
                reason: format!("{s:?} is neither csv nor json"),
            }),
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> Error + '_ {
    move |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// CSV with the fixed header (written even for no records), or a JSON array of flat objects.
pub fn write_records(records: &[ResultRecord], path: &Path, format: Format) -> Result<()> {
    let file = File::create(path).map_err(io_err(path))?;
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(BufWriter::new(file));
            w.write_record(CSV_HEADER).map_err(csv_err(path))?;
            for r in records {
                w.serialize(r).map_err(csv_err(path))?;
            }
            w.flush().map_err(io_err(path))?;
        }
        Format::Json => {
            let mut w = BufWriter::new(file);
            serde_json::to_writer_pretty(&mut w, records).map_err(|source| Error::Json {
                path: path.to_path_buf(),
                source,
            })?;
            w.write_all(b"\n").map_err(io_err(path))?;
            w.flush().map_err(io_err(path))?;
        }
    }
    Ok(())
}

/// Reads what [`write_records`] wrote; CSV headers must match exactly.
pub fn read_records(path: &Path, format: Format) -> Result<Vec<ResultRecord>> {
    let file = File::open(path).map_err(io_err(path))?;
    match format {
        Format::Csv => {
            let mut r = csv::Reader::from_reader(BufReader::new(file));
            let header = r.headers().map_err(csv_err(path))?.clone();
            if header.iter().ne(CSV_HEADER.iter().copied()) {
                return Err(Error::Parse {
                    what: "result CSV",
                    reason: format!("{}: unexpected header", path.display()),
                });
            }
            r.deserialize().collect::<std::result::Result<_, _>>().map_err(csv_err(path))
        }
        Format::Json => serde_json::from_reader(BufReader::new(file)).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        }),
    }
}
