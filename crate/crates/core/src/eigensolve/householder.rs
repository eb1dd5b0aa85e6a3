//! Householder reduction of a Hermitian matrix to real symmetric tridiagonal form.
//!
//! The same kernel runs on real (`T`) and complex (`Complex<T>`) storage. Complex
//! sub-diagonal phases are absorbed into a diagonal unitary at the end so the
//! output is always real with nonnegative off-diagonal.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::{DenseMatrix, HermitianMatrix};
use super::spectrum::Tridiagonal;
use crate::scalar::Scalar;

pub(crate) trait Field<T: Scalar>:
    Copy + Send + Sync + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn conj(self) -> Self;
    fn re(self) -> T;
    fn abs(self) -> T;
    fn real(x: T) -> Self;
    fn scale(self, s: T) -> Self;
    fn to_complex(self) -> Complex<T>;

    /// `self / |self|`, or one at zero.
    fn phase(self) -> Self {
        let a = self.abs();
        if a == T::zero() {
            Self::real(T::one())
        } else {
            self.scale(T::one() / a)
        }
    }
}

impl<T: Scalar> Field<T> for T {
    #[inline]
    fn conj(self) -> Self {
        self
    }
    #[inline]
    fn re(self) -> T {
        self
    }
    #[inline]
    fn abs(self) -> T {
        num_traits::Float::abs(self)
    }
    #[inline]
    fn real(x: T) -> Self {
        x
    }
    #[inline]
    fn scale(self, s: T) -> Self {
        self * s
    }
    #[inline]
    fn to_complex(self) -> Complex<T> {
        Complex::new(self, T::zero())
    }
}

impl<T: Scalar> Field<T> for Complex<T> {
    #[inline]
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    #[inline]
    fn re(self) -> T {
        self.re
    }
    #[inline]
    fn abs(self) -> T {
        self.norm()
    }
    #[inline]
    fn real(x: T) -> Self {
        Complex::new(x, T::zero())
    }
    #[inline]
    fn scale(self, s: T) -> Self {
        self * s
    }
    #[inline]
    fn to_complex(self) -> Complex<T> {
        self
    }
}

/// Reduces `a` (row-major, full Hermitian storage, overwritten) in place.
/// Returns the tridiagonal and, when requested, `U` with `Uᴴ A U = T`.
pub(crate) fn reduce<T: Scalar, F: Field<T>>(
    n: usize,
    a: &mut [F],
    accumulate: bool,
) -> (Tridiagonal<T>, Option<Vec<F>>) {
    let mut q: Option<Vec<F>> = accumulate.then(|| {
        let mut q = vec![F::zero(); n * n];
        for i in 0..n {
            q[i * n + i] = F::real(T::one());
        }
        q
    });
    let mut v = vec![F::zero(); n];
    let mut p = vec![F::zero(); n];
    let two = T::lit(2.0);
    let half = T::lit(0.5);

    for k in 0..n.saturating_sub(2) {
        let lo = k + 1;
        let tail_zero = (lo + 1..n).all(|i| a[i * n + k].is_zero());
        if tail_zero {
            continue;
        }
        let scale = (lo..n).fold(T::zero(), |m, i| m.max(a[i * n + k].abs()));
        let mut norm2 = T::zero();
        for i in lo..n {
            let x = a[i * n + k].scale(T::one() / scale);
            v[i] = x;
            let ax = x.abs();
            norm2 += ax * ax;
        }
        let norm = norm2.sqrt();
        let x0 = v[lo];
        let x0_abs = x0.abs();
        // alpha = -phase(x0)·‖x‖ keeps v0 = x0 − alpha free of cancellation.
        let alpha = -(x0.phase().scale(norm));
        v[lo] = x0 - alpha;
        let tau = two / (two * norm * (norm + x0_abs));

        // p = tau · A_sub · v
        for i in lo..n {
            let row = &a[i * n..(i + 1) * n];
            let mut s = F::zero();
            for j in lo..n {
                s = s + row[j] * v[j];
            }
            p[i] = s.scale(tau);
        }
        let mut vhp = T::zero();
        for i in lo..n {
            vhp += (v[i].conj() * p[i]).re();
        }
        let kk = half * tau * vhp;
        for i in lo..n {
            p[i] = p[i] - v[i].scale(kk);
        }
        // A_sub -= v wᴴ + w vᴴ
        for i in lo..n {
            let vi = v[i];
            let wi = p[i];
            let row = &mut a[i * n..(i + 1) * n];
            for j in lo..n {
                row[j] = row[j] - vi * p[j].conj() - wi * v[j].conj();
            }
        }
        let alpha = alpha.scale(scale);
        a[lo * n + k] = alpha;
        a[k * n + lo] = alpha.conj();
        for i in lo + 1..n {
            a[i * n + k] = F::zero();
            a[k * n + i] = F::zero();
        }

        if let Some(q) = q.as_mut() {
            // Q <- Q H, H = I − tau v vᴴ acting on columns lo..n.
            for r in 0..n {
                let row = &mut q[r * n..(r + 1) * n];
                let mut s = F::zero();
                for c in lo..n {
                    s = s + row[c] * v[c];
                }
                let s = s.scale(tau);
                for c in lo..n {
                    row[c] = row[c] - s * v[c].conj();
                }
            }
        }
    }

    let diag: Vec<T> = (0..n).map(|i| a[i * n + i].re()).collect();
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    // Diagonal unitary D with phi_0 = 1, phi_{k+1} = phi_k · phase(e_k) so
    // that (Dᴴ T D)_{k+1,k} = |e_k|.
    let mut phi = F::real(T::one());
    for k in 0..n.saturating_sub(1) {
        let e = a[(k + 1) * n + k];
        offdiag.push(e.abs());
        phi = phi * e.phase();
        if let Some(q) = q.as_mut() {
            for r in 0..n {
                q[r * n + k + 1] = q[r * n + k + 1] * phi;
            }
        }
    }
    (Tridiagonal { diag, offdiag }, q)
}

/// Tridiagonal form of `a`, plus the unitary `U` with `Uᴴ A U = T` when
/// `accumulate` is set.
pub fn tridiagonalize<T: Scalar>(
    a: &HermitianMatrix<T>,
    accumulate: bool,
) -> (Tridiagonal<T>, Option<DenseMatrix<T>>) {
    let n = a.n();
    if a.is_real() {
        let mut work: Vec<T> = a.entries().iter().map(|z| z.re).collect();
        let (t, q) = reduce(n, &mut work, accumulate);
        let q = q.map(|q| DenseMatrix::from_data(n, q.into_iter().map(|x| x.to_complex()).collect()));
        (t, q)
    } else {
        let mut work = a.entries().to_vec();
        let (t, q) = reduce(n, &mut work, accumulate);
        (t, q.map(|q| DenseMatrix::from_data(n, q)))
    }
}
