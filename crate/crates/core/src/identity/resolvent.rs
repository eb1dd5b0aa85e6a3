//! The diagonal resolvent entry `f(λ) = ⟨e_j, (A − λI)⁻¹ e_j⟩` evaluated two
//! ways: as a ratio of characteristic polynomials, and as a partial-fraction
//! sum over the squared eigenvector components.

use serde::Serialize;

use super::signed_log::signed_log_product;
use crate::eigensolve::Spectrum;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ResolventSample<T> {
    pub lambda: T,
    pub value: T,
    /// `min_k |λ − λ_k(A)|`.
    pub nearest_pole_gap: T,
}

fn nearest_pole<T: Scalar>(spec_a: &Spectrum<T>, lambda: T) -> Result<T> {
    let mut gap = T::infinity();
    let mut pole = T::nan();
    for &l in spec_a.values() {
        let g = (lambda - l).abs();
        if g < gap {
            gap = g;
            pole = l;
        }
    }
    if gap <= T::lit(1e-14) * spec_a.norm() {
        return Err(Error::PoleEvaluation { lambda: lambda.as_f64(), pole: pole.as_f64(), gap: gap.as_f64() });
    }
    Ok(gap)
}

/// `Π_k (μ_k − λ) / Π_k (λ_k − λ)`.
pub fn resolvent_det_form<T: Scalar>(spec_a: &Spectrum<T>, spec_m: &Spectrum<T>, lambda: T) -> Result<ResolventSample<T>> {
    if spec_m.len() + 1 != spec_a.len() {
        return Err(Error::DimensionMismatch("minor spectrum must have one fewer value".into()));
    }
    let nearest_pole_gap = nearest_pole(spec_a, lambda)?;
    let num = signed_log_product(spec_m.values().iter().map(|&mu| mu - lambda));
    let den = signed_log_product(spec_a.values().iter().map(|&l| l - lambda));
    let value = num
        .checked_div(den)
        .expect("pole excluded above")
        .to_value();
    Ok(ResolventSample { lambda, value, nearest_pole_gap })
}

/// `Σᵢ wᵢ / (λᵢ − λ)`, accumulated from the smallest term up.
pub fn resolvent_pf_form<T: Scalar>(weights: &[T], spec_a: &Spectrum<T>, lambda: T) -> Result<ResolventSample<T>> {
    if weights.len() != spec_a.len() {
        return Err(Error::DimensionMismatch("one weight per eigenvalue required".into()));
    }
    let nearest_pole_gap = nearest_pole(spec_a, lambda)?;
    let mut terms: Vec<T> = weights
        .iter()
        .zip(spec_a.values())
        .map(|(&w, &l)| w / (l - lambda))
        .collect();
    terms.sort_by(|x, y| x.abs().partial_cmp(&y.abs()).expect("finite"));
    let value = terms.into_iter().fold(T::zero(), |acc, t| acc + t);
    Ok(ResolventSample { lambda, value, nearest_pole_gap })
}

/// `(λ_i − λ)·f(λ)` at `λ = λ_i + offset`, via the determinant form. Tends to
/// `|v_i|²` as the offset shrinks.
pub fn residue_one_sided<T: Scalar>(spec_a: &Spectrum<T>, spec_m: &Spectrum<T>, i: usize, offset: T) -> Result<T> {
    let li = *spec_a
        .values()
        .get(i)
        .ok_or(Error::IndexOutOfRange { index: i, n: spec_a.len() })?;
    let lambda = li + offset;
    let sample = resolvent_det_form(spec_a, spec_m, lambda)?;
    Ok((li - lambda) * sample.value)
}

/// One-sided Richardson pair: `2·g(h/2) − g(h)`, cancelling the linear term.
pub fn residue_richardson<T: Scalar>(spec_a: &Spectrum<T>, spec_m: &Spectrum<T>, i: usize, offset: T) -> Result<T> {
    let half = residue_one_sided(spec_a, spec_m, i, offset * T::lit(0.5))?;
    let full = residue_one_sided(spec_a, spec_m, i, offset)?;
    Ok(T::lit(2.0) * half - full)
}
