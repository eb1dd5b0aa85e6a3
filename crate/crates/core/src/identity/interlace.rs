use serde::Serialize;

use crate::eigensolve::Spectrum;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InterlacingReport<T> {
    pub pass: bool,
    /// Most negative slack over all interlacing inequalities; `None` when
    /// there are none to check (1×1 matrix).
    pub worst_slack: Option<T>,
    /// Index `k` (0-based) of the minor eigenvalue involved in the worst slack.
    pub worst_index: Option<usize>,
    pub tol: T,
}

/// Checks `λ_k(A) ≤ μ_k + tol` and `μ_k ≤ λ_{k+1}(A) + tol` for every `k`.
pub fn check_interlacing<T: Scalar>(spec_a: &Spectrum<T>, spec_m: &Spectrum<T>, tol: T) -> Result<InterlacingReport<T>> {
    if spec_m.len() + 1 != spec_a.len() {
        return Err(Error::DimensionMismatch("minor spectrum must have one fewer value".into()));
    }
    let a = spec_a.values();
    let mut worst: Option<(T, usize)> = None;
    for (k, &mu) in spec_m.values().iter().enumerate() {
        let slack = (mu - a[k]).min(a[k + 1] - mu);
        if worst.is_none_or(|(w, _)| slack < w) {
            worst = Some((slack, k));
        }
    }
    Ok(InterlacingReport {
        pass: worst.is_none_or(|(w, _)| w >= -tol),
        worst_slack: worst.map(|w| w.0),
        worst_index: worst.map(|w| w.1),
        tol,
    })
}
