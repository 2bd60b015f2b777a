//! Delay-vs-field measurements from CSV.
//!
//! ```text
//! # Hofmann et al., nonadiabatic calibration
//! field_au,delay_as,err_minus_as,err_plus_as,source
//! 0.06,27.0,3.0,4.5,hofmann
//! ```
//!
//! `field_au` and `delay_as` are required, the rest default to `0` / empty.
//! Lines starting with `#` are comments. The sweep CSV written by this crate
//! is also accepted: `tau_as` stands in for `delay_as` and rows whose
//! `status` is not `ok`/`saturated` are skipped.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Measurement {
    /// Peak field in au.
    pub field: f64,
    pub tau_as: f64,
    pub err_minus: f64,
    pub err_plus: f64,
    pub source: String,
}

impl Measurement {
    pub fn new(field: f64, tau_as: f64, err_minus: f64, err_plus: f64) -> Self {
        Measurement {
            field,
            tau_as,
            err_minus,
            err_plus,
            source: String::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DatasetFormat {
    #[default]
    Csv,
}

pub fn load_dataset(path: impl AsRef<Path>, format: DatasetFormat) -> Result<Vec<Measurement>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    match format {
        DatasetFormat::Csv => read_dataset(file, path),
    }
}

struct Columns {
    field: usize,
    delay: usize,
    err_minus: Option<usize>,
    err_plus: Option<usize>,
    source: Option<usize>,
    status: Option<usize>,
}

/// Parses CSV from any reader. `origin` only labels error messages.
pub fn read_dataset<R: Read>(reader: R, origin: &Path) -> Result<Vec<Measurement>> {
    let parse_err = |line: u64, message: String| Error::Parse {
        path: origin.to_path_buf(),
        line,
        message,
    };
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let headers = rdr
        .headers()
        .map_err(|e| parse_err(csv_line(&e).unwrap_or(1), e.to_string()))?
        .clone();
    let header_line = headers.position().map(|p| p.line()).unwrap_or(1);
    let find = |name: &str| headers.iter().position(|h| h == name);
    let columns = Columns {
        field: find("field_au")
            .ok_or_else(|| parse_err(header_line, "missing column `field_au`".into()))?,
        delay: find("delay_as")
            .or_else(|| find("tau_as"))
            .ok_or_else(|| parse_err(header_line, "missing column `delay_as`".into()))?,
        err_minus: find("err_minus_as"),
        err_plus: find("err_plus_as"),
        source: find("source"),
        status: find("status"),
    };

    let mut out = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| parse_err(csv_line(&e).unwrap_or(0), e.to_string()))?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if let Some(i) = columns.status {
            match record.get(i).unwrap_or("") {
                "ok" | "saturated" => {}
                _ => continue,
            }
        }
        let number = |idx: Option<usize>, name: &str, required: bool| -> Result<f64> {
            match idx.and_then(|i| record.get(i)).filter(|s| !s.is_empty()) {
                Some(s) => s.parse::<f64>().map_err(|_| {
                    parse_err(line, format!("`{s}` in column `{name}` is not a number"))
                }),
                None if required => Err(parse_err(line, format!("missing value for `{name}`"))),
                None => Ok(0.0),
            }
        };
        let m = Measurement {
            field: number(Some(columns.field), "field_au", true)?,
            tau_as: number(Some(columns.delay), "delay_as", true)?,
            err_minus: number(columns.err_minus, "err_minus_as", false)?,
            err_plus: number(columns.err_plus, "err_plus_as", false)?,
            source: columns
                .source
                .and_then(|i| record.get(i))
                .unwrap_or("")
                .to_string(),
        };
        validate(&m).map_err(|message| Error::Validation {
            path: origin.to_path_buf(),
            line,
            message,
        })?;
        out.push(m);
    }
    Ok(out)
}

fn validate(m: &Measurement) -> std::result::Result<(), String> {
    if !(m.field > 0.0 && m.field.is_finite()) {
        return Err(format!("field must be positive, got {}", m.field));
    }
    if !m.tau_as.is_finite() {
        return Err(format!("delay must be finite, got {}", m.tau_as));
    }
    if !(m.err_minus >= 0.0 && m.err_minus.is_finite())
        || !(m.err_plus >= 0.0 && m.err_plus.is_finite())
    {
        return Err(format!(
            "error bars must be non-negative, got -{} / +{}",
            m.err_minus, m.err_plus
        ));
    }
    Ok(())
}

fn csv_line(e: &csv::Error) -> Option<u64> {
    e.position().map(|p| p.line())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Vec<Measurement>> {
        read_dataset(s.as_bytes(), Path::new("mem.csv"))
    }

    #[test]
    fn minimal_file() {
        let m = parse("field_au,delay_as\n0.06,27.0\n").unwrap();
        assert_eq!(m, vec![Measurement::new(0.06, 27.0, 0.0, 0.0)]);
    }

    #[test]
    fn empty_data_section() {
        assert!(parse("field_au,delay_as,err_minus_as,err_plus_as,source\n")
            .unwrap()
            .is_empty());
    }

    #[test]
    fn bad_number_reports_line() {
        match parse("field_au,delay_as\n0.06,abc\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_keep_line_numbers() {
        let text = "# comment\nfield_au,delay_as\n# another\n0.05,30\n0.06,x\n";
        match parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn negative_error_bar_is_rejected() {
        let text = "field_au,delay_as,err_minus_as,err_plus_as\n0.06,27,-1,2\n";
        assert!(matches!(
            parse(text),
            Err(Error::Validation { line: 2, .. })
        ));
    }

    #[test]
    fn missing_header_is_an_error() {
        assert!(matches!(parse("0.06,27.0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn full_rows_and_column_order() {
        let text = "source,delay_as,field_au,err_plus_as,err_minus_as\nexp,27.5,0.06,2,1\n";
        let m = parse(text).unwrap();
        assert_eq!(m[0].field, 0.06);
        assert_eq!(m[0].err_minus, 1.0);
        assert_eq!(m[0].err_plus, 2.0);
        assert_eq!(m[0].source, "exp");
    }

    #[test]
    fn reads_sweep_output() {
        let text =
            "field_au,tau_au,tau_as,delta_z_au,n_f,gamma_k,x_m_au,x_e_plus_au,x_E_au,status\n\
                    0.06,1.1,26.98,0.64,10,1.3,5.3,12.8,7.5,ok\n\
                    0.13,,,,,0.6,3.6,,3.4,bsi\n";
        let m = parse(text).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].tau_as, 26.98);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            load_dataset("/nonexistent/data.csv", DatasetFormat::Csv),
            Err(Error::Io { .. })
        ));
    }
}
