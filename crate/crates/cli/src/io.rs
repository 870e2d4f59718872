//! Input files: the `a,b` CSV and dense matrix text files.

use std::fs;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use ratiosel_core::decimal::{normalize, parse_decimal, NormalizedInstance};
use ratiosel_core::FloatInstance;

use crate::error::CliError;

/// One CSV data row with its 1-based file line.
struct Row {
    line: u64,
    a: String,
    b: String,
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn parse_error(path: &Path, line: u64, message: impl Into<String>) -> CliError {
    CliError::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

fn read_rows(path: &Path) -> Result<Vec<Row>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| io_error(path, e))?;
    let headers = reader
        .headers()
        .map_err(|e| parse_error(path, 1, e.to_string()))?;
    if headers.iter().collect::<Vec<_>>() != ["a", "b"] {
        return Err(parse_error(path, 1, "expected header `a,b`"));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_error(path, line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 2 {
            return Err(parse_error(
                path,
                line,
                format!("expected 2 fields, got {}", record.len()),
            ));
        }
        rows.push(Row {
            line,
            a: record[0].to_string(),
            b: record[1].to_string(),
        });
    }
    Ok(rows)
}

/// Loads an instance for the exact path; decimals share one power-of-ten scale.
pub fn load_instance(path: &Path) -> Result<NormalizedInstance, CliError> {
    let rows = read_rows(path)?;
    let mut a = Vec::with_capacity(rows.len());
    let mut b = Vec::with_capacity(rows.len());
    for row in &rows {
        for (text, out) in [(&row.a, &mut a), (&row.b, &mut b)] {
            let value = parse_decimal(text)
                .map_err(|_| parse_error(path, row.line, format!("invalid decimal {text:?}")))?;
            out.push(value);
        }
    }
    Ok(normalize(&a, &b)?)
}

/// Loads an instance for the binary64 path.
pub fn load_float_instance(path: &Path) -> Result<FloatInstance, CliError> {
    let rows = read_rows(path)?;
    let mut a = Vec::with_capacity(rows.len());
    let mut b = Vec::with_capacity(rows.len());
    for row in &rows {
        for (text, out) in [(&row.a, &mut a), (&row.b, &mut b)] {
            let value: f64 = text
                .parse()
                .map_err(|_| parse_error(path, row.line, format!("invalid number {text:?}")))?;
            out.push(value);
        }
    }
    Ok(FloatInstance::new(a, b)?)
}

/// Reads a dense row-major matrix; entries separated by commas and/or whitespace.
pub fn load_matrix(path: &Path) -> Result<DMatrix<f64>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i as u64 + 1;
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if fields.is_empty() {
            continue;
        }
        let row = fields
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| parse_error(path, line_no, format!("invalid number {f:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_error(
                    path,
                    line_no,
                    format!("expected {} columns, got {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_error(path, 1, "matrix file is empty"));
    }
    let cols = rows[0].len();
    Ok(DMatrix::from_row_iterator(
        rows.len(),
        cols,
        rows.into_iter().flatten(),
    ))
}

/// Reads `u` as a single column; a single row is accepted as well.
pub fn load_vector(path: &Path) -> Result<DVector<f64>, CliError> {
    let m = load_matrix(path)?;
    if m.ncols() == 1 {
        Ok(m.column(0).into_owned())
    } else if m.nrows() == 1 {
        Ok(m.row(0).transpose())
    } else {
        Err(parse_error(
            path,
            1,
            format!(
                "expected a single column, got a {}x{} matrix",
                m.nrows(),
                m.ncols()
            ),
        ))
    }
}
