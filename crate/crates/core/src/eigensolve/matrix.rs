use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense n×n complex Hermitian matrix, stored row-major in full.
///
/// Every constructor leaves the storage exactly Hermitian: the diagonal has
/// a `+0.0` imaginary part and `a[j][i]` is the bitwise conjugate of `a[i][j]`
/// (a zero imaginary part is always stored as `+0.0`).
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

#[inline]
fn canonical<T: Scalar>(z: Complex<T>) -> Complex<T> {
    // -0.0 == 0.0, so this also clears negative zeros.
    if z.im == T::zero() {
        Complex::new(z.re, T::zero())
    } else {
        z
    }
}

impl<T: Scalar> HermitianMatrix<T> {
    /// Builds the matrix from its lower triangle (`row >= col`); the upper
    /// triangle is the mirrored conjugate and diagonal imaginary parts are dropped.
    pub fn from_lower_fn<F>(n: usize, mut lower: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Complex<T>,
    {
        if n == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        let mut data = vec![Complex::zero(); n * n];
        for i in 0..n {
            for j in 0..=i {
                let mut z = canonical(lower(i, j));
                if i == j {
                    z = Complex::new(z.re, T::zero());
                }
                data[i * n + j] = z;
                data[j * n + i] = canonical(z.conj());
            }
        }
        Ok(Self { n, data })
    }

    /// Real symmetric matrix from its lower triangle.
    pub fn from_real_lower_fn<F>(n: usize, mut lower: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> T,
    {
        Self::from_lower_fn(n, |i, j| Complex::new(lower(i, j), T::zero()))
    }

    /// Takes a full row-major matrix that must already be exactly Hermitian.
    pub fn from_entries(n: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        Self::check_shape(n, &entries)?;
        for i in 0..n {
            for j in 0..=i {
                let a = entries[i * n + j];
                let b = entries[j * n + i].conj();
                if a != b {
                    return Err(Error::NotHermitian {
                        row: i,
                        col: j,
                        deviation: (a - b).norm().as_f64(),
                    });
                }
            }
        }
        Self::from_lower_fn(n, |i, j| entries[i * n + j])
    }

    /// Accepts entries whose Hermitian defect is at most `rel_tol · maxabs`
    /// and replaces them by `(X + Xᴴ)/2`. Larger defects are rejected.
    pub fn from_entries_symmetrized(n: usize, entries: Vec<Complex<T>>, rel_tol: T) -> Result<Self> {
        Self::check_shape(n, &entries)?;
        let maxabs = entries.iter().fold(T::zero(), |m, z| m.max(z.norm()));
        let limit = rel_tol * maxabs;
        let half = T::lit(0.5);
        for i in 0..n {
            for j in 0..=i {
                let dev = (entries[i * n + j] - entries[j * n + i].conj()).norm();
                if dev > limit {
                    return Err(Error::NotHermitian { row: i, col: j, deviation: dev.as_f64() });
                }
            }
        }
        Self::from_lower_fn(n, |i, j| {
            let a = entries[i * n + j];
            let b = entries[j * n + i].conj();
            if a == b {
                a
            } else {
                (a + b) * half
            }
        })
    }

    fn check_shape(n: usize, entries: &[Complex<T>]) -> Result<()> {
        if n == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(())
    }

    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("rows must all have length n".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex::new(x, T::zero())))
            .collect();
        Self::from_entries(n, entries)
    }

    pub fn diagonal(values: &[T]) -> Result<Self> {
        Self::from_real_lower_fn(values.len(), |i, j| if i == j { values[i] } else { T::zero() })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_real_lower_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.n + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == T::zero())
    }

    pub fn trace(&self) -> T {
        (0..self.n).map(|i| self.get(i, i).re).sum()
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// `scale · A + shift · I`.
    pub fn affine(&self, scale: T, shift: T) -> Self {
        let n = self.n;
        Self::from_lower_fn(n, |i, j| {
            let z = self.get(i, j) * scale;
            if i == j {
                z + shift
            } else {
                z
            }
        })
        .expect("dimension already validated")
    }

    /// `P A Pᵀ` with `(P A Pᵀ)[i][j] = A[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("not a permutation of 0..n".into()));
        }
        Self::from_lower_fn(n, |i, j| self.get(perm[i], perm[j]))
    }

    /// Entrywise sum with another Hermitian matrix scaled by `eps`.
    pub fn perturbed(&self, other: &Self, eps: T) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch("perturbation has a different dimension".into()));
        }
        Self::from_lower_fn(self.n, |i, j| self.get(i, j) + other.get(i, j) * eps)
    }

    pub fn mul_vec(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Square complex matrix used for eigenvector bases and unitary transforms.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex<T>>(n: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub(crate) fn from_data(n: usize, data: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex<T>) {
        self.data[i * self.n + j] = z;
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    /// Frobenius norm of `self − other`.
    pub fn distance(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<T>()
            .sqrt()
    }

    pub fn from_hermitian(a: &HermitianMatrix<T>) -> Self {
        Self { n: a.n(), data: a.entries().to_vec() }
    }
}
