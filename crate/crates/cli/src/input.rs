//! Input-document parsing: a JSON object format and a PALP-style integer
//! matrix format. Both carry a vertex list; the JSON format may also carry a
//! divisor coefficient vector (in canonical facet order).

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: expected {expected} matrix entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: vertex {row} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("too few vertices: got {found}, a full-dimensional polytope in dimension {dim} needs at least {}", dim + 1)]
    TooFewVertices { dim: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    Json,
    Matrix,
}

/// Parsed input: dimension, vertex candidates and an optional divisor.
#[derive(Debug, Clone)]
pub struct InputDocument {
    pub format: SourceFormat,
    pub dim: usize,
    pub vertices: Vec<Vec<BigInt>>,
    pub divisor: Option<Vec<i64>>,
}

/// Dispatch on the leading non-whitespace byte: `{` means JSON, anything
/// else is read as a matrix document.
pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_matrix(text)
    }
}

/// JSON format: {"dim": n, "vertices": [[..], ..], "divisor": [..]?}.
pub fn parse_json(text: &str) -> Result<InputDocument, InputError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| InputError::Parse(format!("invalid JSON at line {}: {}", e.line(), e)))?;
    let object = value
        .as_object()
        .ok_or_else(|| InputError::Parse("top level must be a JSON object".into()))?;

    let dim = object
        .get("dim")
        .ok_or_else(|| InputError::Parse("missing field \"dim\"".into()))?
        .as_u64()
        .ok_or_else(|| InputError::Parse("field \"dim\" must be a positive integer".into()))?
        as usize;

    let rows = object
        .get("vertices")
        .ok_or_else(|| InputError::Parse("missing field \"vertices\"".into()))?
        .as_array()
        .ok_or_else(|| InputError::Parse("field \"vertices\" must be an array".into()))?;

    let mut vertices = Vec::with_capacity(rows.len());
    for (row, entry) in rows.iter().enumerate() {
        let coords = entry.as_array().ok_or_else(|| {
            InputError::Parse(format!("vertex {row} must be an array of integers"))
        })?;
        if coords.len() != dim {
            return Err(InputError::DimensionMismatch {
                row,
                expected: dim,
                found: coords.len(),
            });
        }
        let mut vertex = Vec::with_capacity(dim);
        for (col, coord) in coords.iter().enumerate() {
            let value = coord.as_i64().ok_or_else(|| {
                InputError::Parse(format!("vertex {row} entry {col} is not an integer"))
            })?;
            vertex.push(BigInt::from(value));
        }
        vertices.push(vertex);
    }

    let divisor = match object.get("divisor") {
        None => None,
        Some(entry) => {
            let coeffs = entry
                .as_array()
                .ok_or_else(|| InputError::Parse("field \"divisor\" must be an array".into()))?;
            let mut out = Vec::with_capacity(coeffs.len());
            for (i, coeff) in coeffs.iter().enumerate() {
                out.push(coeff.as_i64().ok_or_else(|| {
                    InputError::Parse(format!("divisor entry {i} is not an integer"))
                })?);
            }
            Some(out)
        }
    };

    check_vertex_count(dim, vertices.len())?;
    Ok(InputDocument {
        format: SourceFormat::Json,
        dim,
        vertices,
        divisor,
    })
}

/// Matrix format: a header line `d k`, then a d-by-k integer matrix whose
/// columns are the points. When the header has d > k the matrix is read
/// transposed (points are rows), matching the common interchange convention.
pub fn parse_matrix(text: &str) -> Result<InputDocument, InputError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| InputError::Parse("empty document".into()))?;
    let header_numbers: Vec<usize> = header
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| InputError::Parse(format!("bad header entry {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    let [first, second] = header_numbers[..] else {
        return Err(InputError::Parse(format!(
            "header must hold exactly two integers, found {}",
            header_numbers.len()
        )));
    };
    if first == 0 || second == 0 {
        return Err(InputError::Parse("header entries must be positive".into()));
    }

    let mut entries: Vec<i64> = Vec::with_capacity(first * second);
    for line in lines {
        for tok in line.split_whitespace() {
            entries.push(
                tok.parse::<i64>()
                    .map_err(|_| InputError::Parse(format!("bad matrix entry {tok:?}")))?,
            );
        }
    }
    if entries.len() != first * second {
        return Err(InputError::ShapeMismatch {
            expected: first * second,
            found: entries.len(),
        });
    }

    let transposed = first > second;
    let (dim, count) = if transposed { (second, first) } else { (first, second) };
    let mut vertices = vec![vec![BigInt::from(0); dim]; count];
    for (index, value) in entries.iter().enumerate() {
        let (r, c) = (index / second, index % second);
        // rows of the body are coordinates (points are columns) unless
        // the document is transposed
        let (point, coord) = if transposed { (r, c) } else { (c, r) };
        vertices[point][coord] = BigInt::from(*value);
    }

    check_vertex_count(dim, count)?;
    Ok(InputDocument {
        format: SourceFormat::Matrix,
        dim,
        vertices,
        divisor: None,
    })
}

fn check_vertex_count(dim: usize, found: usize) -> Result<(), InputError> {
    if found < dim + 1 {
        Err(InputError::TooFewVertices { dim, found })
    } else {
        Ok(())
    }
}

/// Comma-separated integer list, as given to --divisor.
pub fn parse_divisor_list(text: &str) -> Result<Vec<i64>, InputError> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| InputError::Parse(format!("bad divisor coefficient {tok:?}")))
        })
        .collect()
}
