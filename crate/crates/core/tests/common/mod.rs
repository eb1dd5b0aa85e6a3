//! Independent reference computations. Nothing here calls into the solver.
#![allow(dead_code)]

use evfe::HermitianMatrix;
use num_complex::Complex;

type C = Complex<f64>;

/// Determinant of `A − xI` by Gaussian elimination with partial pivoting.
pub fn charpoly(a: &HermitianMatrix<f64>, x: f64) -> f64 {
    let n = a.n();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).re - if i == j { x } else { 0.0 }).collect())
        .collect();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n).max_by(|&r, &s| m[r][k].abs().partial_cmp(&m[s][k].abs()).unwrap()).unwrap();
        if m[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k];
        for r in k + 1..n {
            let f = m[r][k] / m[k][k];
            for c in k..n {
                m[r][c] -= f * m[k][c];
            }
        }
    }
    det
}

/// Roots of the characteristic polynomial of a real symmetric matrix, by
/// scanning for sign changes on a fine grid over the Gershgorin interval and
/// bisecting each bracket.
pub fn charpoly_roots(a: &HermitianMatrix<f64>, grid: usize) -> Vec<f64> {
    let n = a.n();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r: f64 = (0..n).filter(|&j| j != i).map(|j| a.get(i, j).norm()).sum();
        lo = lo.min(a.get(i, i).re - r);
        hi = hi.max(a.get(i, i).re + r);
    }
    lo -= 1.0;
    hi += 1.0;
    let mut roots = Vec::new();
    let step = (hi - lo) / grid as f64;
    let mut x0 = lo;
    let mut f0 = charpoly(a, x0);
    for k in 1..=grid {
        let x1 = lo + step * k as f64;
        let f1 = charpoly(a, x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.signum() != f1.signum() && f1 != 0.0 {
            let (mut l, mut r, fl) = (x0, x1, f0);
            for _ in 0..200 {
                let mid = 0.5 * (l + r);
                if mid <= l || mid >= r {
                    break;
                }
                let fm = charpoly(a, mid);
                if fm == 0.0 {
                    l = mid;
                    r = mid;
                    break;
                }
                if fm.signum() == fl.signum() {
                    l = mid;
                } else {
                    r = mid;
                }
            }
            roots.push(0.5 * (l + r));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// `⟨e_j, (A − λI)⁻¹ e_j⟩` by a complex dense solve with partial pivoting.
pub fn resolvent_by_solve(a: &HermitianMatrix<f64>, j: usize, lambda: f64) -> f64 {
    let n = a.n();
    let mut m: Vec<Vec<C>> = (0..n)
        .map(|r| (0..n).map(|c| a.get(r, c) - if r == c { C::new(lambda, 0.0) } else { C::new(0.0, 0.0) }).collect())
        .collect();
    let mut b: Vec<C> = (0..n).map(|r| C::new(if r == j { 1.0 } else { 0.0 }, 0.0)).collect();
    for k in 0..n {
        let p = (k..n).max_by(|&r, &s| m[r][k].norm().partial_cmp(&m[s][k].norm()).unwrap()).unwrap();
        m.swap(p, k);
        b.swap(p, k);
        for r in k + 1..n {
            let f = m[r][k] / m[k][k];
            for c in k..n {
                let t = m[k][c];
                m[r][c] -= f * t;
            }
            let t = b[k];
            b[r] -= f * t;
        }
    }
    let mut x = vec![C::new(0.0, 0.0); n];
    for k in (0..n).rev() {
        let s: C = (k + 1..n).map(|c| m[k][c] * x[c]).sum();
        x[k] = (b[k] - s) / m[k][k];
    }
    x[j].re
}

/// Entry-by-entry copy of `A` without row/column `j`, by explicit index shifts.
pub fn minor_by_copy(a: &HermitianMatrix<f64>, j: usize) -> Vec<C> {
    let n = a.n();
    let mut out = Vec::new();
    for r in 0..n {
        if r == j {
            continue;
        }
        for c in 0..n {
            if c != j {
                out.push(a.get(r, c));
            }
        }
    }
    out
}

/// Fisher–Yates permutation of `0..n` from a tiny LCG, independent of the library RNG.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let k = ((state >> 33) as usize) % (i + 1);
        p.swap(i, k);
    }
    p
}
