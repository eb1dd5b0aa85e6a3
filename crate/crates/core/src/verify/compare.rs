use serde::Serialize;

use super::oracle::oracle_magnitudes_with;
use crate::eigensolve::HermitianMatrix;
use crate::error::{Error, Result};
use crate::identity::{check_interlacing, magnitude_table_run, MagnitudeTable};
use crate::scalar::Scalar;

/// Interlacing slack allowed per unit of ‖A‖₂.
pub const INTERLACING_RTOL: f64 = 1e-10;

/// Identity-versus-oracle statistics for one matrix. Cell indices are 1-based.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub provenance: String,
    pub n: usize,
    pub tol: f64,
    pub pass: bool,
    pub max_abs_error: f64,
    pub mean_abs_error: f64,
    pub worst_cell: (usize, usize),
    pub row_sum_error: f64,
    pub col_sum_error: f64,
    pub interlacing_pass: bool,
    pub worst_interlacing_slack: f64,
    /// Smallest eigenvalue gap divided by ‖A‖₂ (zero for the zero matrix).
    pub min_normalized_gap: f64,
    pub degenerate_clusters: usize,
}

/// Detailed outcome: the report plus both tables it was computed from.
#[derive(Clone, Debug)]
pub struct Comparison<T> {
    pub report: ComparisonReport,
    pub identity: MagnitudeTable<T>,
    pub oracle: MagnitudeTable<T>,
}

pub fn compare<T: Scalar>(a: &HermitianMatrix<T>, tol: f64) -> Result<ComparisonReport> {
    compare_detailed(a, tol, None, "-").map(|c| c.report)
}

pub fn compare_detailed<T: Scalar>(
    a: &HermitianMatrix<T>,
    tol: f64,
    cluster_tol: Option<T>,
    provenance: &str,
) -> Result<Comparison<T>> {
    let n = a.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n });
    }
    let run = magnitude_table_run(a, cluster_tol)?;
    let identity = run.table;
    let oracle = oracle_magnitudes_with(a, &identity.clustering)?;

    let mut max_abs_error = 0.0f64;
    let mut sum = 0.0f64;
    let mut worst_cell = (1, 1);
    for i in 0..n {
        for j in 0..n {
            let e = (identity.get(i, j) - oracle.get(i, j)).abs().as_f64();
            sum += e;
            if e > max_abs_error {
                max_abs_error = e;
                worst_cell = (i + 1, j + 1);
            }
        }
    }

    let norm = identity.eigenvalues.norm();
    let itol = T::lit(INTERLACING_RTOL) * norm;
    let mut interlacing_pass = true;
    let mut worst_slack = f64::INFINITY;
    for spec_m in &run.minor_spectra {
        let r = check_interlacing(&identity.eigenvalues, spec_m, itol)?;
        interlacing_pass &= r.pass;
        if let Some(s) = r.worst_slack {
            worst_slack = worst_slack.min(s.as_f64());
        }
    }
    let min_normalized_gap = if norm > T::zero() {
        (identity.eigenvalues.min_gap() / norm).as_f64()
    } else {
        0.0
    };

    let report = ComparisonReport {
        provenance: provenance.to_string(),
        n,
        tol,
        pass: max_abs_error <= tol && interlacing_pass,
        max_abs_error,
        mean_abs_error: sum / (n * n) as f64,
        worst_cell,
        row_sum_error: identity.row_sum_error().as_f64(),
        col_sum_error: identity.column_sum_error().as_f64(),
        interlacing_pass,
        worst_interlacing_slack: worst_slack,
        min_normalized_gap,
        degenerate_clusters: identity.clustering.degenerate().count(),
    };
    Ok(Comparison { report, identity, oracle })
}
