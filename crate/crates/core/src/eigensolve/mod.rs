//! Dense Hermitian eigensolver: Householder reduction followed by
//! implicit-shift QL on the real tridiagonal.

mod householder;
mod matrix;
mod ql;
mod spectrum;

pub use householder::tridiagonalize;
pub use matrix::{DenseMatrix, HermitianMatrix};
pub use ql::SWEEP_BUDGET;
pub use spectrum::{Spectrum, Tridiagonal};

use num_complex::Complex;
use num_traits::Zero;

use crate::error::Result;
use crate::scalar::Scalar;

/// Eigenvalues of `a`, ascending.
pub fn eigenvalues<T: Scalar>(a: &HermitianMatrix<T>) -> Result<Spectrum<T>> {
    let (tri, _) = tridiagonalize(a, false);
    let values = ql::ql_implicit(&tri, None)?;
    Spectrum::from_unsorted(values)
}

/// Eigenvalues of a real symmetric tridiagonal matrix, ascending.
pub fn tridiagonal_eigenvalues<T: Scalar>(tri: &Tridiagonal<T>) -> Result<Spectrum<T>> {
    Spectrum::from_unsorted(ql::ql_implicit(tri, None)?)
}

/// Eigenvalues together with an orthonormal eigenbasis.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition<T> {
    pub spectrum: Spectrum<T>,
    /// Row `i` holds the components of the unit eigenvector for `spectrum[i]`.
    pub vectors: DenseMatrix<T>,
}

impl<T: Scalar> SpectralDecomposition<T> {
    /// `Σᵢ λᵢ vᵢ vᵢᴴ`.
    pub fn reconstruct(&self) -> DenseMatrix<T> {
        let n = self.vectors.n();
        let lambda = self.spectrum.values();
        DenseMatrix::from_fn(n, |r, c| {
            (0..n)
                .map(|i| self.vectors.get(i, r) * self.vectors.get(i, c).conj() * lambda[i])
                .sum()
        })
    }

    /// Frobenius distance of `V Vᴴ` from the identity.
    pub fn unitarity_error(&self) -> T {
        let v = &self.vectors;
        v.matmul(&v.conj_transpose()).distance(&DenseMatrix::identity(v.n()))
    }

    /// `maxᵢ ‖A vᵢ − λᵢ vᵢ‖₂`.
    pub fn max_residual(&self, a: &HermitianMatrix<T>) -> T {
        let lambda = self.spectrum.values();
        (0..a.n())
            .map(|i| {
                let v = self.vectors.row(i);
                let av = a.mul_vec(v);
                av.iter()
                    .zip(v)
                    .map(|(x, y)| (x - y * lambda[i]).norm_sqr())
                    .sum::<T>()
                    .sqrt()
            })
            .fold(T::zero(), |m, r| m.max(r))
    }
}

pub fn spectral_decomposition<T: Scalar>(a: &HermitianMatrix<T>) -> Result<SpectralDecomposition<T>> {
    let n = a.n();
    let (tri, u) = tridiagonalize(a, true);
    let u = u.expect("transform was requested");
    let mut z: Vec<Complex<T>> = (0..n * n).map(|k| u.get(k / n, k % n)).collect();
    let values = ql::ql_implicit(&tri, Some(&mut z))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| values[x].partial_cmp(&values[y]).expect("finite eigenvalues"));
    let sorted: Vec<T> = order.iter().map(|&k| values[k]).collect();
    let mut vectors = DenseMatrix::zeros(n);
    for (row, &col) in order.iter().enumerate() {
        for k in 0..n {
            vectors.set(row, k, z[k * n + col]);
        }
    }
    debug_assert!(vectors.row(0).iter().any(|c| !c.is_zero()));
    Ok(SpectralDecomposition { spectrum: Spectrum::from_sorted(sorted)?, vectors })
}
