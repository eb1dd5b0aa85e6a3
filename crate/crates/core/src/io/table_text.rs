use std::str::FromStr;

use serde::Serialize;

use super::decimal::{format_real, parse_real};
use crate::error::{Error, Result};
use crate::identity::{EigenClustering, MagnitudeTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::InvalidArgument(format!("unknown table format '{s}'"))),
        }
    }
}

#[derive(Serialize)]
struct ClusterJson {
    /// 1-based eigenvalue rows sharing the cluster's weight evenly.
    rows: Vec<usize>,
    representative: f64,
}

#[derive(Serialize)]
struct TableJson<'a> {
    eigenvalues: &'a [f64],
    weights: Vec<&'a [f64]>,
    clusters: Vec<ClusterJson>,
}

#[derive(Serialize)]
struct ColumnJson<'a> {
    coordinate: usize,
    eigenvalues: &'a [f64],
    weights: &'a [f64],
    clusters: Vec<ClusterJson>,
}

fn clusters_json(clustering: Option<&EigenClustering<f64>>) -> Vec<ClusterJson> {
    clustering
        .map(|c| {
            c.degenerate()
                .map(|(r, rep)| ClusterJson { rows: r.clone().map(|i| i + 1).collect(), representative: rep })
                .collect()
        })
        .unwrap_or_default()
}

fn csv_line(lambda: f64, weights: &[f64]) -> String {
    let mut line = format_real(lambda);
    for &w in weights {
        line.push(',');
        line.push_str(&format_real(w));
    }
    line.push('\n');
    line
}

/// CSV: header `lambda,coord_1,…,coord_n`, then one row per eigenvalue.
/// JSON: `{"eigenvalues", "weights", "clusters"}`, where `clusters` lists the
/// degenerate groups from `clustering` (empty when none is given).
pub fn write_table(table: &MagnitudeTable<f64>, format: TableFormat, clustering: Option<&EigenClustering<f64>>) -> String {
    let n = table.n();
    let lambdas = table.eigenvalues.values();
    match format {
        TableFormat::Csv => {
            let mut out = String::from("lambda");
            for j in 1..=n {
                out.push_str(&format!(",coord_{j}"));
            }
            out.push('\n');
            for i in 0..n {
                out.push_str(&csv_line(lambdas[i], table.row(i)));
            }
            out
        }
        TableFormat::Json => {
            let doc = TableJson {
                eigenvalues: lambdas,
                weights: (0..n).map(|i| table.row(i)).collect(),
                clusters: clusters_json(clustering),
            };
            let mut s = serde_json::to_string(&doc).expect("finite values serialize");
            s.push('\n');
            s
        }
    }
}

/// One coordinate's column; `coordinate` is 1-based.
pub fn write_column(
    eigenvalues: &[f64],
    weights: &[f64],
    coordinate: usize,
    format: TableFormat,
    clustering: Option<&EigenClustering<f64>>,
) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = format!("lambda,coord_{coordinate}\n");
            for (&l, &w) in eigenvalues.iter().zip(weights) {
                out.push_str(&csv_line(l, &[w]));
            }
            out
        }
        TableFormat::Json => {
            let doc = ColumnJson { coordinate, eigenvalues, weights, clusters: clusters_json(clustering) };
            let mut s = serde_json::to_string(&doc).expect("finite values serialize");
            s.push('\n');
            s
        }
    }
}

/// Reads back CSV produced by [`write_table`] or [`write_column`]:
/// `(eigenvalues, rows of weights)`.
pub fn read_table_csv(text: &str) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Parse { line: 1, column: 1, message: "empty table".into() })?;
    let width = header.split(',').count();
    if !header.starts_with("lambda") {
        return Err(Error::Parse { line: 1, column: 1, message: "header must start with 'lambda'".into() });
    }
    let mut lambdas = Vec::new();
    let mut rows = Vec::new();
    for (k, line) in lines {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != width {
            return Err(Error::DimensionMismatch(format!("line {}: expected {width} cells", k + 1)));
        }
        let mut values = Vec::with_capacity(width);
        let mut column = 1;
        for cell in cells {
            values.push(parse_real(cell).ok_or_else(|| Error::Parse {
                line: k + 1,
                column,
                message: format!("invalid number '{cell}'"),
            })?);
            column += cell.len() + 1;
        }
        lambdas.push(values[0]);
        rows.push(values[1..].to_vec());
    }
    Ok((lambdas, rows))
}
