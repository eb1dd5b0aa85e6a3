//! The eigenvector-eigenvalue identity in ratio form, and its limit on
//! degenerate clusters.

use std::ops::Range;

use super::signed_log::signed_log_product;
use crate::eigensolve::Spectrum;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_dims<T: Scalar>(spec_a: &Spectrum<T>, spec_m: &Spectrum<T>) -> Result<()> {
    if spec_a.is_empty() || spec_m.len() + 1 != spec_a.len() {
        return Err(Error::DimensionMismatch(format!(
            "minor spectrum has {} values, expected {}",
            spec_m.len(),
            spec_a.len().saturating_sub(1)
        )));
    }
    Ok(())
}

/// `Π_{k∉excluded} (center − μ_k) / Π_{k∉cluster} (center − λ_k)`, clamped.
fn ratio<T: Scalar>(
    spec_a: &Spectrum<T>,
    spec_m: &Spectrum<T>,
    center: T,
    cluster: &Range<usize>,
    excluded: &[bool],
) -> Result<T> {
    let num = signed_log_product(
        spec_m
            .values()
            .iter()
            .zip(excluded)
            .filter(|(_, &x)| !x)
            .map(|(&mu, _)| center - mu),
    );
    let den = signed_log_product(
        spec_a
            .values()
            .iter()
            .enumerate()
            .filter(|(k, _)| !cluster.contains(k))
            .map(|(_, &lam)| center - lam),
    );
    let value = match num.checked_div(den) {
        Some(r) => r.to_value(),
        None => {
            return Err(Error::DegenerateEigenvalue { index: cluster.start, gap: 0.0, tol: 0.0 });
        }
    };
    if value < -T::lit(T::NEGATIVE_WEIGHT_TOL) || value.is_nan() {
        return Err(Error::NegativeWeight { index: cluster.start, value: value.as_f64() });
    }
    Ok(value.max(T::zero()).min(T::one()))
}

/// `|v_{i}|²` for the coordinate whose minor has spectrum `spec_m`:
///
/// `Π_k (λ_i − μ_k) / Π_{k≠i} (λ_i − λ_k)`
///
/// `λ_i` must be separated from its neighbours by more than `tol`; clusters go
/// through [`cluster_weight`].
pub fn magnitude_squared<T: Scalar>(spec_a: &Spectrum<T>, spec_m: &Spectrum<T>, i: usize, tol: T) -> Result<T> {
    check_dims(spec_a, spec_m)?;
    let values = spec_a.values();
    if i >= values.len() {
        return Err(Error::IndexOutOfRange { index: i, n: values.len() });
    }
    let li = values[i];
    let gap = values
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, &l)| (li - l).abs())
        .fold(T::infinity(), |m, g| m.min(g));
    if gap <= tol {
        return Err(Error::DegenerateEigenvalue { index: i, gap: gap.as_f64(), tol: tol.as_f64() });
    }
    let none = vec![false; spec_m.len()];
    ratio(spec_a, spec_m, li, &(i..i + 1), &none).map_err(|e| match e {
        Error::NegativeWeight { value, .. } => Error::NegativeWeight { index: i, value },
        other => other,
    })
}

/// Total weight `Σ_{i∈cluster} |v_i|²` of a cluster of `spec_a`.
///
/// The `m − 1` minor eigenvalues nearest the cluster mean cancel against the
/// cluster's own factors in the limit and are left out of the numerator.
pub fn cluster_weight<T: Scalar>(
    spec_a: &Spectrum<T>,
    spec_m: &Spectrum<T>,
    cluster: Range<usize>,
    tol: T,
) -> Result<T> {
    check_dims(spec_a, spec_m)?;
    let n = spec_a.len();
    if cluster.is_empty() || cluster.end > n {
        return Err(Error::InvalidArgument(format!("cluster {cluster:?} is not a subrange of 0..{n}")));
    }
    let m = cluster.len();
    let members = &spec_a.values()[cluster.clone()];
    let center = if m == 1 {
        members[0]
    } else {
        members.iter().copied().sum::<T>() / T::from_usize(m).expect("small count")
    };

    let mut excluded = vec![false; spec_m.len()];
    if m > 1 {
        let radius = T::from_usize(m).expect("small count") * tol + T::lit(1e-9) * spec_a.norm();
        let mut order: Vec<usize> = (0..spec_m.len()).collect();
        // Stable sort: equal distances keep the smaller index first.
        order.sort_by(|&x, &y| {
            let dx = (spec_m.values()[x] - center).abs();
            let dy = (spec_m.values()[y] - center).abs();
            dx.partial_cmp(&dy).expect("finite")
        });
        let chosen = &order[..m - 1];
        let found = order
            .iter()
            .take_while(|&&k| (spec_m.values()[k] - center).abs() <= radius)
            .count();
        if found < m - 1 {
            return Err(Error::MatchingFailure {
                center: center.as_f64(),
                needed: m - 1,
                found,
                radius: radius.as_f64(),
            });
        }
        for &k in chosen {
            excluded[k] = true;
        }
    }
    ratio(spec_a, spec_m, center, &cluster, &excluded)
}
