use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Eigenvalues sorted ascending, tagged with the dimension they came from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum<T> {
    values: Vec<T>,
    source_dim: usize,
}

impl<T: Scalar> Spectrum<T> {
    /// Sorts ascending. Exact ties keep their input order.
    pub fn from_unsorted(mut values: Vec<T>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("spectrum contains a non-finite value".into()));
        }
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        let source_dim = values.len();
        Ok(Self { values, source_dim })
    }

    /// Takes values that are already nondecreasing.
    pub fn from_sorted(values: Vec<T>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("spectrum contains a non-finite value".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument("spectrum values are not sorted".into()));
        }
        let source_dim = values.len();
        Ok(Self { values, source_dim })
    }

    #[inline]
    pub fn values(&self) -> &[T] {
        &self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    /// Largest magnitude, which is ‖A‖₂ for the matrix the spectrum came from.
    pub fn norm(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    /// `λ_max − λ_min`.
    pub fn spread(&self) -> T {
        match (self.values.first(), self.values.last()) {
            (Some(&lo), Some(&hi)) => hi - lo,
            _ => T::zero(),
        }
    }

    /// Smallest gap between consecutive values; infinite for fewer than two.
    pub fn min_gap(&self) -> T {
        self.values
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(T::infinity(), |m, g| m.min(g))
    }

    pub fn sum(&self) -> T {
        self.values.iter().copied().sum()
    }

    /// Default absolute cluster tolerance, `CLUSTER_RTOL · max(1, ‖A‖₂)`.
    pub fn default_cluster_tol(&self) -> T {
        T::lit(T::CLUSTER_RTOL) * T::one().max(self.norm())
    }
}

/// Real symmetric tridiagonal matrix with nonnegative off-diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Tridiagonal<T> {
    pub diag: Vec<T>,
    pub offdiag: Vec<T>,
}

impl<T: Scalar> Tridiagonal<T> {
    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn trace(&self) -> T {
        self.diag.iter().copied().sum()
    }

    pub fn frobenius_norm(&self) -> T {
        let two = T::lit(2.0);
        let d: T = self.diag.iter().map(|&x| x * x).sum();
        let e: T = self.offdiag.iter().map(|&x| x * x).sum();
        (d + two * e).sqrt()
    }
}
