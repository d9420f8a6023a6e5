//! CSV ingestion for time series. One row per time point, the first data row
//! is the base point, the column count sets the dimension. An optional
//! header row is skipped when it is not numeric.

use anyhow::{anyhow, bail, Result};

use qsig_core::{Rat, Scalar, TimeSeries};

/// Parses one cell. Under `--exact` cells are integers or `p/q` rationals;
/// otherwise they are decimal floats. The other syntax is rejected so the
/// two kinds cannot mix.
fn parse_cell(cell: &str, exact: bool, line: usize, column: usize) -> Result<Scalar> {
    let cell = cell.trim();
    if exact {
        if cell.contains('.') {
            bail!(
                "row {line}, column {column}: decimal {cell:?} not allowed with --exact; use p/q"
            );
        }
        cell.parse::<Rat>()
            .map(Scalar::Exact)
            .map_err(|_| anyhow!("row {line}, column {column}: {cell:?} is not an exact rational"))
    } else {
        if cell.contains('/') {
            bail!(
                "row {line}, column {column}: rational syntax {cell:?} requires --exact"
            );
        }
        let value: f64 = cell
            .parse()
            .map_err(|_| anyhow!("row {line}, column {column}: {cell:?} is not a number"))?;
        if !value.is_finite() {
            bail!("row {line}, column {column}: {cell:?} is not finite");
        }
        Ok(Scalar::Float(value))
    }
}

fn looks_numeric(cell: &str) -> bool {
    let cell = cell.trim();
    cell.parse::<f64>().is_ok() || cell.parse::<Rat>().is_ok()
}

/// Reads a time series from CSV text.
pub fn parse_series(text: &str, exact: bool) -> Result<TimeSeries> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut expected_columns = None;
    for (index, line) in text.lines().enumerate() {
        let line_number = index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let cells: Vec<&str> = trimmed.split(',').collect();
        if rows.is_empty() && cells.iter().any(|c| !looks_numeric(c)) {
            // header row
            continue;
        }
        match expected_columns {
            None => expected_columns = Some(cells.len()),
            Some(expected) if expected != cells.len() => {
                bail!(
                    "row {line_number}: expected {expected} columns, found {}",
                    cells.len()
                );
            }
            Some(_) => {}
        }
        let row = cells
            .iter()
            .enumerate()
            .map(|(c, cell)| parse_cell(cell, exact, line_number, c + 1))
            .collect::<Result<Vec<Scalar>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("no data rows in input");
    }
    Ok(TimeSeries::from_rows(rows)?)
}

/// Reads a time series from a CSV file.
pub fn read_series(path: &std::path::Path, exact: bool) -> Result<TimeSeries> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow!("cannot read {}: {e}", path.display()))?;
    parse_series(&text, exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsig_core::rat;

    #[test]
    fn parses_plain_series() {
        let x = parse_series("0\n1\n3\n", true).unwrap();
        assert_eq!(x.dim(), 1);
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn skips_header_rows() {
        let x = parse_series("time,price\n0,1\n2,3\n", false).unwrap();
        assert_eq!(x.dim(), 2);
        assert_eq!(x.len(), 1);
    }

    #[test]
    fn rationals_only_under_exact() {
        let x = parse_series("1/2\n-3/4\n", true).unwrap();
        assert_eq!(x.base()[0], Scalar::Exact(rat(1, 2)));
        let err = parse_series("1/2\n", false).unwrap_err().to_string();
        assert!(err.contains("requires --exact"), "{err}");
        let err = parse_series("0.5\n", true).unwrap_err().to_string();
        assert!(err.contains("not allowed with --exact"), "{err}");
    }

    #[test]
    fn diagnostics_carry_row_and_column() {
        let err = parse_series("0,0\n1,x\n", false).unwrap_err().to_string();
        assert!(err.contains("row 2, column 2"), "{err}");
        let err = parse_series("0,0\n1\n", false).unwrap_err().to_string();
        assert!(err.contains("row 2: expected 2 columns, found 1"), "{err}");
    }

    #[test]
    fn base_row_alone_gives_an_empty_series() {
        let x = parse_series("5,1\n", false).unwrap();
        assert_eq!(x.len(), 0);
    }
}
