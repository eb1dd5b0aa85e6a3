//! Plain-text matrix documents.
//!
//! ```text
//! hermitian <dense|coordinate> <n> [complex]
//! ```
//!
//! A dense body is `n` rows of `n` whitespace-separated entries. A coordinate
//! body lists `row col value` for the lower triangle (`row >= col`), 1-based;
//! absent entries are zero. Complex entries are written `a+bi` or `a-bi`.
//! Blank lines and lines starting with `#` or `%` are ignored.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use super::decimal::{format_complex, format_real, parse_complex};
use crate::eigensolve::HermitianMatrix;
use crate::error::{Error, Result};

/// Relative Hermitian defect accepted (and symmetrized away) when parsing.
pub const HERMITIAN_RTOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    RealSymmetric,
    ComplexHermitian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    Dense,
    Coordinate,
}

impl FromStr for Layout {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Layout::Dense),
            "coordinate" => Ok(Layout::Coordinate),
            _ => Err(Error::InvalidArgument(format!("unknown layout '{s}'"))),
        }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layout::Dense => "dense",
            Layout::Coordinate => "coordinate",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixDocument {
    pub kind: MatrixKind,
    pub matrix: HermitianMatrix<f64>,
    /// Where the document came from: a path, a generator spec, or "-".
    pub source: String,
}

impl MatrixDocument {
    pub fn from_matrix(matrix: HermitianMatrix<f64>, source: impl Into<String>) -> Self {
        let kind = if matrix.is_real() { MatrixKind::RealSymmetric } else { MatrixKind::ComplexHermitian };
        Self { kind, matrix, source: source.into() }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..k]));
            }
        } else if start.is_none() {
            start = Some(k);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_document(text: &[u8], source: impl Into<String>) -> Result<MatrixDocument> {
    let text = std::str::from_utf8(text).map_err(|e| {
        let before = &text[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        parse_err(line, column, "input is not valid UTF-8")
    })?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !(t.is_empty() || t.starts_with('#') || t.starts_with('%'))
        });

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, 1, "missing header line"))?;
    let head = tokens(header);
    if head.first().map(|t| t.1) != Some("hermitian") {
        return Err(parse_err(hline, head.first().map_or(1, |t| t.0), "header must start with 'hermitian'"));
    }
    let (lcol, ltok) = *head.get(1).ok_or_else(|| parse_err(hline, header.len() + 1, "missing layout"))?;
    let layout: Layout = ltok
        .parse()
        .map_err(|_| parse_err(hline, lcol, format!("layout must be 'dense' or 'coordinate', got '{ltok}'")))?;
    let (ncol, ntok) = *head.get(2).ok_or_else(|| parse_err(hline, header.len() + 1, "missing dimension"))?;
    let n: usize = ntok
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_err(hline, ncol, format!("dimension must be a positive integer, got '{ntok}'")))?;
    let kind = match head.get(3) {
        None => MatrixKind::RealSymmetric,
        Some((_, "complex")) => MatrixKind::ComplexHermitian,
        Some(&(c, t)) => return Err(parse_err(hline, c, format!("unexpected header token '{t}'"))),
    };
    if let Some(&(c, t)) = head.get(4) {
        return Err(parse_err(hline, c, format!("unexpected header token '{t}'")));
    }

    let entry = |line: usize, col: usize, tok: &str| -> Result<Complex<f64>> {
        let z = parse_complex(tok).ok_or_else(|| parse_err(line, col, format!("invalid number '{tok}'")))?;
        if kind == MatrixKind::RealSymmetric && tok.ends_with('i') {
            return Err(parse_err(line, col, "complex entry in a real document (add 'complex' to the header)"));
        }
        Ok(z)
    };

    let mut full = vec![Complex::<f64>::zero(); n * n];
    match layout {
        Layout::Dense => {
            for r in 0..n {
                let (lno, line) = lines.next().ok_or_else(|| {
                    Error::DimensionMismatch(format!("expected {n} rows, found {r}"))
                })?;
                let toks = tokens(line);
                if toks.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "line {lno}: expected {n} entries, found {}",
                        toks.len()
                    )));
                }
                for (c, (col, tok)) in toks.into_iter().enumerate() {
                    full[r * n + c] = entry(lno, col, tok)?;
                }
            }
            if let Some((lno, _)) = lines.next() {
                return Err(Error::DimensionMismatch(format!("line {lno}: more than {n} rows")));
            }
        }
        Layout::Coordinate => {
            let mut seen = vec![false; n * n];
            for (lno, line) in lines {
                let toks = tokens(line);
                if toks.len() != 3 {
                    let col = toks.get(3).map_or(line.len() + 1, |t| t.0);
                    return Err(parse_err(lno, col, "expected 'row col value'"));
                }
                let index = |(col, tok): (usize, &str)| -> Result<usize> {
                    let k: usize = tok
                        .parse()
                        .map_err(|_| parse_err(lno, col, format!("invalid index '{tok}'")))?;
                    if k == 0 || k > n {
                        return Err(Error::DimensionMismatch(format!(
                            "line {lno}, column {col}: index {k} outside 1..={n}"
                        )));
                    }
                    Ok(k - 1)
                };
                let r = index(toks[0])?;
                let c = index(toks[1])?;
                if c > r {
                    return Err(parse_err(lno, toks[1].0, "coordinate entries must be in the lower triangle"));
                }
                if std::mem::replace(&mut seen[r * n + c], true) {
                    return Err(parse_err(lno, toks[0].0, format!("duplicate entry ({}, {})", r + 1, c + 1)));
                }
                let z = entry(lno, toks[2].0, toks[2].1)?;
                full[r * n + c] = z;
                if r != c {
                    full[c * n + r] = z.conj();
                }
            }
        }
    }
    let matrix = HermitianMatrix::from_entries_symmetrized(n, full, HERMITIAN_RTOL)?;
    Ok(MatrixDocument { kind, matrix, source: source.into() })
}

pub fn parse_matrix(text: &[u8]) -> Result<HermitianMatrix<f64>> {
    parse_document(text, "-").map(|d| d.matrix)
}

pub fn serialize_document(doc: &MatrixDocument, layout: Layout) -> String {
    let a = &doc.matrix;
    let n = a.n();
    let complex = doc.kind == MatrixKind::ComplexHermitian;
    let fmt = |z: Complex<f64>| if complex { format_complex(z) } else { format_real(z.re) };
    let mut out = format!("hermitian {layout} {n}{}\n", if complex { " complex" } else { "" });
    match layout {
        Layout::Dense => {
            for i in 0..n {
                let row: Vec<String> = a.row(i).iter().map(|&z| fmt(z)).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        Layout::Coordinate => {
            for i in 0..n {
                for j in 0..=i {
                    let z = a.get(i, j);
                    if z.re.to_bits() != 0 || z.im.to_bits() != 0 {
                        out.push_str(&format!("{} {} {}\n", i + 1, j + 1, fmt(z)));
                    }
                }
            }
        }
    }
    out
}

pub fn serialize_matrix(a: &HermitianMatrix<f64>, layout: Layout) -> String {
    serialize_document(&MatrixDocument::from_matrix(a.clone(), ""), layout)
}
