use rayon::prelude::*;

use super::cluster::{cluster_spectrum, EigenClustering};
use super::weights::{cluster_weight, magnitude_squared};
use crate::eigensolve::{eigenvalues, HermitianMatrix, Spectrum};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `A` with row and column `j` deleted. Entries are copied bit for bit.
pub fn principal_minor<T: Scalar>(a: &HermitianMatrix<T>, j: usize) -> Result<HermitianMatrix<T>> {
    let n = a.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    let skip = |k: usize| if k < j { k } else { k + 1 };
    HermitianMatrix::from_lower_fn(n - 1, |r, c| a.get(skip(r), skip(c)))
}

/// Squared eigenvector components, `weights[i][j] = |v_{i,j}|²`, with rows in
/// ascending eigenvalue order and columns indexed by coordinate.
///
/// Inside a degenerate cluster only the row total is determined; it is split
/// evenly across the cluster's rows and the clustering is kept alongside.
#[derive(Clone, Debug, PartialEq)]
pub struct MagnitudeTable<T> {
    pub eigenvalues: Spectrum<T>,
    pub clustering: EigenClustering<T>,
    weights: Vec<T>,
}

impl<T: Scalar> MagnitudeTable<T> {
    /// Assembles a table from row-major weights.
    pub fn new(eigenvalues: Spectrum<T>, clustering: EigenClustering<T>, weights: Vec<T>) -> Result<Self> {
        let n = eigenvalues.len();
        if weights.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} weights for n = {n}", weights.len())));
        }
        Ok(Self { eigenvalues, clustering, weights })
    }

    pub(crate) fn from_columns(eigenvalues: Spectrum<T>, clustering: EigenClustering<T>, columns: &[Vec<T>]) -> Self {
        let n = eigenvalues.len();
        let mut weights = vec![T::zero(); n * n];
        for (j, col) in columns.iter().enumerate() {
            for (i, &w) in col.iter().enumerate() {
                weights[i * n + j] = w;
            }
        }
        Self { eigenvalues, clustering, weights }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.weights[i * self.n() + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        let n = self.n();
        &self.weights[i * n..(i + 1) * n]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n()).map(|i| self.get(i, j)).collect()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.n()).map(|i| self.row(i).iter().copied().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<T> {
        (0..self.n()).map(|j| (0..self.n()).map(|i| self.get(i, j)).sum()).collect()
    }

    /// `max |row sum − 1|`.
    pub fn row_sum_error(&self) -> T {
        self.row_sums().into_iter().fold(T::zero(), |m, s| m.max((s - T::one()).abs()))
    }

    /// `max |column sum − 1|`.
    pub fn column_sum_error(&self) -> T {
        self.column_sums().into_iter().fold(T::zero(), |m, s| m.max((s - T::one()).abs()))
    }

    /// Sum of each cluster's rows, coordinate by coordinate: `result[c][j]`.
    pub fn cluster_totals(&self, clustering: &EigenClustering<T>) -> Vec<Vec<T>> {
        clustering
            .clusters
            .iter()
            .map(|r| (0..self.n()).map(|j| r.clone().map(|i| self.get(i, j)).sum()).collect())
            .collect()
    }
}

/// Column `j` of the table from the spectra alone.
pub(crate) fn column_from_spectra<T: Scalar>(
    spec_a: &Spectrum<T>,
    clustering: &EigenClustering<T>,
    spec_m: &Spectrum<T>,
) -> Result<Vec<T>> {
    let tol = clustering.tol;
    let mut col = vec![T::zero(); spec_a.len()];
    for range in &clustering.clusters {
        if range.len() == 1 {
            col[range.start] = magnitude_squared(spec_a, spec_m, range.start, tol)?;
        } else {
            let total = cluster_weight(spec_a, spec_m, range.clone(), tol)?;
            let share = total / T::from_usize(range.len()).expect("small count");
            for i in range.clone() {
                col[i] = share;
            }
        }
    }
    Ok(col)
}

/// Output of a full table evaluation, keeping the minor spectra for reuse.
#[derive(Clone, Debug)]
pub struct TableRun<T> {
    pub table: MagnitudeTable<T>,
    /// Spectrum of the minor with coordinate `j` removed, per `j`.
    pub minor_spectra: Vec<Spectrum<T>>,
}

/// Magnitude table at the default cluster tolerance.
pub fn magnitude_table<T: Scalar>(a: &HermitianMatrix<T>) -> Result<MagnitudeTable<T>> {
    magnitude_table_with_tol(a, None)
}

pub fn magnitude_table_with_tol<T: Scalar>(a: &HermitianMatrix<T>, tol: Option<T>) -> Result<MagnitudeTable<T>> {
    Ok(magnitude_table_run(a, tol)?.table)
}

/// Evaluates every column independently (in parallel); assembly is in
/// column order regardless of completion order.
pub fn magnitude_table_run<T: Scalar>(a: &HermitianMatrix<T>, tol: Option<T>) -> Result<TableRun<T>> {
    let n = a.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n });
    }
    let spec_a = eigenvalues(a)?;
    let tol = tol.unwrap_or_else(|| spec_a.default_cluster_tol());
    if !(tol >= T::zero()) {
        return Err(Error::InvalidArgument("cluster tolerance must be nonnegative".into()));
    }
    let clustering = cluster_spectrum(&spec_a, tol);
    let results: Vec<Result<(Vec<T>, Spectrum<T>)>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let spec_m = eigenvalues(&principal_minor(a, j)?)?;
            let col = column_from_spectra(&spec_a, &clustering, &spec_m)?;
            Ok((col, spec_m))
        })
        .collect();
    let mut columns = Vec::with_capacity(n);
    let mut minor_spectra = Vec::with_capacity(n);
    for r in results {
        let (c, s) = r?;
        columns.push(c);
        minor_spectra.push(s);
    }
    Ok(TableRun { table: MagnitudeTable::from_columns(spec_a, clustering, &columns), minor_spectra })
}

/// A single column `j`, with the eigenvalues of `a` it is indexed by.
pub fn magnitude_column<T: Scalar>(a: &HermitianMatrix<T>, j: usize, tol: Option<T>) -> Result<(Spectrum<T>, Vec<T>)> {
    let spec_a = eigenvalues(a)?;
    let minor = principal_minor(a, j)?;
    let tol = tol.unwrap_or_else(|| spec_a.default_cluster_tol());
    let clustering = cluster_spectrum(&spec_a, tol);
    let col = column_from_spectra(&spec_a, &clustering, &eigenvalues(&minor)?)?;
    Ok((spec_a, col))
}
