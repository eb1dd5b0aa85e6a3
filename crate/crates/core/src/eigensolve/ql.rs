use num_complex::Complex;

use super::spectrum::Tridiagonal;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sweeps allowed per eigenvalue before giving up.
pub const SWEEP_BUDGET: usize = 50;

/// Implicit-shift QL on a symmetric tridiagonal matrix with Wilkinson-type
/// shifts. Returns the (unsorted) eigenvalues. When `z` is given (row-major
/// n×n), its columns are rotated along, so starting from the reducing unitary
/// they end as the eigenvectors of the original matrix.
pub(crate) fn ql_implicit<T: Scalar>(
    tri: &Tridiagonal<T>,
    mut z: Option<&mut [Complex<T>]>,
) -> Result<Vec<T>> {
    let n = tri.n();
    let mut d = tri.diag.clone();
    let mut e = tri.offdiag.clone();
    e.push(T::zero());
    let eps = T::epsilon();
    let two = T::lit(2.0);

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if sweeps == SWEEP_BUDGET {
                return Err(Error::ConvergenceFailure { index: l, sweeps: SWEEP_BUDGET });
            }
            sweeps += 1;

            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    for k in 0..n {
                        let row = &mut z[k * n..(k + 1) * n];
                        let f = row[i + 1];
                        row[i + 1] = row[i] * s + f * c;
                        row[i] = row[i] * c - f * s;
                    }
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(d)
}
