use crate::eigensolve::{spectral_decomposition, HermitianMatrix};
use crate::error::{Error, Result};
use crate::identity::{cluster_spectrum, EigenClustering, MagnitudeTable};
use crate::scalar::Scalar;

/// `|V[i][j]|²` from a full eigendecomposition, clustered at the default
/// tolerance.
pub fn oracle_magnitudes<T: Scalar>(a: &HermitianMatrix<T>) -> Result<MagnitudeTable<T>> {
    let dec = spectral_decomposition(a)?;
    let clustering = cluster_spectrum(&dec.spectrum, dec.spectrum.default_cluster_tol());
    build(dec, clustering)
}

/// As [`oracle_magnitudes`], but with rows grouped by a clustering supplied
/// by the caller (normally the one the identity path used).
pub fn oracle_magnitudes_with<T: Scalar>(a: &HermitianMatrix<T>, clustering: &EigenClustering<T>) -> Result<MagnitudeTable<T>> {
    let dec = spectral_decomposition(a)?;
    let covered = clustering.clusters.last().map_or(0, |r| r.end);
    if covered != a.n() {
        return Err(Error::DimensionMismatch(format!("clustering covers {covered} of {} rows", a.n())));
    }
    build(dec, clustering.clone())
}

fn build<T: Scalar>(dec: crate::eigensolve::SpectralDecomposition<T>, clustering: EigenClustering<T>) -> Result<MagnitudeTable<T>> {
    let n = dec.spectrum.len();
    let mut weights: Vec<T> = (0..n * n).map(|k| dec.vectors.get(k / n, k % n).norm_sqr()).collect();
    for (range, _) in clustering.degenerate() {
        let share = T::one() / T::from_usize(range.len()).expect("small count");
        for j in 0..n {
            let total: T = range.clone().map(|i| weights[i * n + j]).sum();
            for i in range.clone() {
                weights[i * n + j] = total * share;
            }
        }
    }
    MagnitudeTable::new(dec.spectrum, clustering, weights)
}
