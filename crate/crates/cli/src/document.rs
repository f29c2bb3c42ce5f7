//! Matrix input and output formats.
//!
//! A matrix is written either as JSON, `{"rows": 2, "cols": 2, "data": [1, 2, 3, 4]}`
//! with row-major data, or inline as rows separated by `;` with
//! whitespace-separated entries, `1 2; 3 4`.

use std::fmt;

use dkstp::Matrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl From<&Matrix> for MatrixDocument {
    fn from(m: &Matrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.as_slice().to_vec(),
        }
    }
}

/// A malformed matrix, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(pos: Pos, message: impl Into<String>) -> Self {
        Self {
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    const START: Pos = Pos { line: 1, column: 1 };
}

pub fn parse_matrix(input: &str) -> Result<Matrix, ParseError> {
    match first_significant(input) {
        None => Err(ParseError::at(Pos::START, "empty input")),
        Some((pos, '{')) => parse_json(input, pos),
        Some(_) => parse_inline(input),
    }
}

pub fn serialize_matrix(m: &Matrix) -> String {
    serde_json::to_string(&MatrixDocument::from(m)).expect("matrix documents always serialize")
}

fn first_significant(input: &str) -> Option<(Pos, char)> {
    let mut pos = Pos::START;
    for c in input.chars() {
        if !c.is_whitespace() {
            return Some((pos, c));
        }
        advance(&mut pos, c);
    }
    None
}

fn advance(pos: &mut Pos, c: char) {
    if c == '\n' {
        pos.line += 1;
        pos.column = 1;
    } else {
        pos.column += 1;
    }
}

fn parse_json(input: &str, start: Pos) -> Result<Matrix, ParseError> {
    let doc: MatrixDocument = serde_json::from_str(input).map_err(|e| ParseError {
        line: e.line().max(1),
        column: e.column().max(1),
        message: e.to_string(),
    })?;
    if doc.rows == 0 || doc.cols == 0 {
        return Err(ParseError::at(start, "rows and cols must be positive"));
    }
    if doc.data.len() != doc.rows * doc.cols {
        return Err(ParseError::at(
            start,
            format!("{}x{} matrix needs {} entries, found {}", doc.rows, doc.cols, doc.rows * doc.cols, doc.data.len()),
        ));
    }
    Matrix::new(doc.rows, doc.cols, doc.data).map_err(|e| ParseError::at(start, e.to_string()))
}

fn parse_inline(input: &str) -> Result<Matrix, ParseError> {
    let mut rows: Vec<(Pos, Vec<f64>)> = Vec::new();
    let mut current: Option<(Pos, Vec<f64>)> = None;
    let mut token = String::new();
    let mut token_start = Pos::START;
    let mut pos = Pos::START;

    let flush = |token: &mut String, start: Pos, current: &mut Option<(Pos, Vec<f64>)>| {
        if token.is_empty() {
            return Ok(());
        }
        let value: f64 = token
            .parse()
            .map_err(|_| ParseError::at(start, format!("not a number: {token:?}")))?;
        if !value.is_finite() {
            return Err(ParseError::at(start, format!("non-finite entry {token:?}")));
        }
        current.get_or_insert_with(|| (start, Vec::new())).1.push(value);
        token.clear();
        Ok(())
    };

    for c in input.chars() {
        if c == ';' || c.is_whitespace() {
            flush(&mut token, token_start, &mut current)?;
            if c == ';' {
                match current.take() {
                    Some(row) => rows.push(row),
                    None => return Err(ParseError::at(pos, "empty row")),
                }
            }
        } else {
            if token.is_empty() {
                token_start = pos;
            }
            token.push(c);
        }
        advance(&mut pos, c);
    }
    flush(&mut token, token_start, &mut current)?;
    if let Some(row) = current.take() {
        rows.push(row);
    }

    let Some((_, first)) = rows.first() else {
        return Err(ParseError::at(Pos::START, "empty input"));
    };
    let cols = first.len();
    for (i, (start, row)) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(ParseError::at(
                *start,
                format!("row {} has {} entries, expected {cols}", i + 1, row.len()),
            ));
        }
    }
    let n = rows.len();
    let data = rows.into_iter().flat_map(|(_, r)| r).collect();
    Matrix::new(n, cols, data).map_err(|e| ParseError::at(Pos::START, e.to_string()))
}
