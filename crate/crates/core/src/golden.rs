//! Reference-table fixture: parsing and cell-by-cell verification.
//!
//! The fixture is UTF-8 CSV with the header `year,orthodox,catholic,astronomical`
//! and ISO `YYYY-MM-DD` Gregorian dates, one row per year in ascending order.

use std::fmt;

use thiserror::Error;

use crate::calendar::CalendarDate;
use crate::computus::easter_result;
use crate::report::CSV_HEADER;

/// The 1950–2050 comparison table shipped with the crate.
pub const REFERENCE_FIXTURE: &str = include_str!("../fixtures/reference_1950_2050.csv");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("fixture is empty")]
    Empty,
    #[error("unexpected header {found:?}, expected {CSV_HEADER:?}")]
    Header { found: String },
    #[error("line {line}: {message}")]
    Row { line: usize, message: String },
    #[error("line {line}: year {year} is not after the previous row")]
    Order { line: usize, year: i32 },
    #[error("fixture has a header but no rows")]
    NoRows,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenRow {
    pub year: i32,
    pub orthodox: CalendarDate,
    pub catholic: CalendarDate,
    pub astronomical: CalendarDate,
}

fn parse_date(field: &str, year: i32, line: usize) -> Result<CalendarDate, FixtureError> {
    let row_err = |message: String| FixtureError::Row { line, message };
    let parts: Vec<&str> = field.split('-').collect();
    let [y, m, d] = parts.as_slice() else {
        return Err(row_err(format!("date {field:?} is not YYYY-MM-DD")));
    };
    let num = |s: &str| {
        s.parse::<u32>()
            .map_err(|_| row_err(format!("date {field:?} is not YYYY-MM-DD")))
    };
    let (y, m, d) = (num(y)? as i32, num(m)?, num(d)?);
    if y != year {
        return Err(row_err(format!("date {field} is not in year {year}")));
    }
    CalendarDate::gregorian(y, m, d).map_err(|e| row_err(e.to_string()))
}

pub fn parse_fixture(text: &str) -> Result<Vec<GoldenRow>, FixtureError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    let (_, header) = lines.next().ok_or(FixtureError::Empty)?;
    if header.trim() != CSV_HEADER {
        return Err(FixtureError::Header {
            found: header.to_string(),
        });
    }

    let mut rows: Vec<GoldenRow> = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        let [year, orthodox, catholic, astronomical] = fields.as_slice() else {
            return Err(FixtureError::Row {
                line,
                message: format!("expected 4 fields, found {}", fields.len()),
            });
        };
        let year: i32 = year.parse().map_err(|_| FixtureError::Row {
            line,
            message: format!("bad year {year:?}"),
        })?;
        if rows.last().is_some_and(|prev| prev.year >= year) {
            return Err(FixtureError::Order { line, year });
        }
        rows.push(GoldenRow {
            year,
            orthodox: parse_date(orthodox, year, line)?,
            catholic: parse_date(catholic, year, line)?,
            astronomical: parse_date(astronomical, year, line)?,
        });
    }
    if rows.is_empty() {
        return Err(FixtureError::NoRows);
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Orthodox,
    Catholic,
    Astronomical,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Orthodox => "orthodox",
            Method::Catholic => "catholic",
            Method::Astronomical => "astronomical",
        })
    }
}

/// A fixture cell that differs from the recomputed date. `actual` is `None`
/// when the year could not be computed at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMismatch {
    pub year: i32,
    pub method: Method,
    pub expected: CalendarDate,
    pub actual: Option<CalendarDate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub cells_total: usize,
    pub cells_matched: usize,
    pub mismatches: Vec<CellMismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn mismatched_years(&self) -> Vec<i32> {
        let mut years: Vec<i32> = self.mismatches.iter().map(|m| m.year).collect();
        years.dedup();
        years
    }

    pub fn summary(&self) -> String {
        format!("{}/{} dates match", self.cells_matched, self.cells_total)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.mismatches {
            match m.actual {
                Some(actual) => writeln!(
                    f,
                    "{} {}: expected {}, computed {}",
                    m.year, m.method, m.expected, actual
                )?,
                None => writeln!(
                    f,
                    "{} {}: expected {}, not computable",
                    m.year, m.method, m.expected
                )?,
            }
        }
        writeln!(f, "{}", self.summary())
    }
}

pub fn verify_rows(rows: &[GoldenRow]) -> VerifyReport {
    let mut report = VerifyReport::default();
    for row in rows {
        let computed = easter_result(row.year).ok();
        let cells = [
            (Method::Orthodox, row.orthodox, computed.map(|r| r.orthodox)),
            (Method::Catholic, row.catholic, computed.map(|r| r.catholic)),
            (
                Method::Astronomical,
                row.astronomical,
                computed.map(|r| r.astronomical),
            ),
        ];
        for (method, expected, actual) in cells {
            report.cells_total += 1;
            if actual == Some(expected) {
                report.cells_matched += 1;
            } else {
                report.mismatches.push(CellMismatch {
                    year: row.year,
                    method,
                    expected,
                    actual,
                });
            }
        }
    }
    report
}
