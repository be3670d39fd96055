//! Matrix and row arguments: rows separated by `;`, entries by `,`, each entry
//! an expression. `1,2;0,0` is the 2×2 matrix with first row `(1, 2)`.

use std::sync::Arc;

use skewring::{LocalRing, Matrix, RingContext, SeriesRing};

use crate::expr::{eval_poly, eval_series, parse_expression, ParseError};

/// Why an argument could not be turned into ring elements.
#[derive(Debug)]
pub enum InputError {
    Parse(ParseError),
    Shape(String),
    NotConstant { column: usize, entry: String },
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Parse(e) => e.fmt(f),
            InputError::Shape(msg) => f.write_str(msg),
            InputError::NotConstant { column, entry } => write!(
                f,
                "entry {entry:?} at column {column} is not a ring constant (pass --prec to work over S/G_N)"
            ),
        }
    }
}

/// A base whose elements can be written as expressions.
pub trait ExprBase: LocalRing {
    fn eval_entry(&self, text: &str) -> Result<Self::Elem, InputError>;
}

impl ExprBase for Arc<RingContext> {
    fn eval_entry(&self, text: &str) -> Result<Self::Elem, InputError> {
        let f = eval_poly(&parse_expression(text, self).map_err(InputError::Parse)?, self);
        match f.coeffs() {
            [] => Ok(RingContext::zero(self)),
            [c] => Ok(*c),
            _ => Err(InputError::NotConstant {
                column: 1,
                entry: text.trim().to_string(),
            }),
        }
    }
}

impl ExprBase for SeriesRing {
    fn eval_entry(&self, text: &str) -> Result<Self::Elem, InputError> {
        let e = parse_expression(text, self.ctx()).map_err(InputError::Parse)?;
        Ok(eval_series(&e, self))
    }
}

/// Splits `text` on `sep`, keeping each piece's 0-based character offset.
fn split_with_offsets(text: &str, offset: usize, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start_byte = 0;
    let mut start_char = offset;
    let mut chars_seen = offset;
    for (byte, c) in text.char_indices() {
        if c == sep {
            out.push((start_char, &text[start_byte..byte]));
            start_byte = byte + c.len_utf8();
            start_char = chars_seen + 1;
        }
        chars_seen += 1;
    }
    out.push((start_char, &text[start_byte..]));
    out
}

fn eval_at<B: ExprBase>(base: &B, offset: usize, text: &str) -> Result<B::Elem, InputError> {
    base.eval_entry(text).map_err(|e| match e {
        InputError::Parse(p) => InputError::Parse(p.shifted(offset)),
        InputError::NotConstant { entry, .. } => InputError::NotConstant {
            column: offset + 1 + (text.len() - text.trim_start().len()),
            entry,
        },
        other => other,
    })
}

pub fn parse_row<B: ExprBase>(base: &B, text: &str) -> Result<Vec<B::Elem>, InputError> {
    split_with_offsets(text, 0, ',')
        .into_iter()
        .map(|(off, entry)| eval_at(base, off, entry))
        .collect()
}

pub fn parse_matrix<B: ExprBase>(base: &B, text: &str) -> Result<Matrix<B>, InputError> {
    let mut rows = Vec::new();
    for (row_off, row_text) in split_with_offsets(text, 0, ';') {
        let row = split_with_offsets(row_text, row_off, ',')
            .into_iter()
            .map(|(off, entry)| eval_at(base, off, entry))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(InputError::Shape("matrix rows have different lengths".into()));
    }
    if rows.len() != width {
        return Err(InputError::Shape(format!(
            "matrix must be square, got {}x{width}",
            rows.len()
        )));
    }
    Matrix::from_rows(base.clone(), rows).map_err(|e| InputError::Shape(e.to_string()))
}
