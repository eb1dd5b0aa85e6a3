use std::ops::{Div, Mul};

use crate::scalar::Scalar;

/// A real number held as `sign · exp(log_magnitude)`, or an exact zero.
///
/// Products of hundreds of eigenvalue gaps leave the `f64` range long before
/// the ratio of two such products does; carrying logs keeps both finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedLogValue<T> {
    pub log_magnitude: T,
    /// `+1` or `-1`.
    pub sign: i8,
    pub is_zero: bool,
}

impl<T: Scalar> SignedLogValue<T> {
    pub fn one() -> Self {
        Self { log_magnitude: T::zero(), sign: 1, is_zero: false }
    }

    pub fn zero() -> Self {
        Self { log_magnitude: T::neg_infinity(), sign: 1, is_zero: true }
    }

    pub fn from_value(x: T) -> Self {
        if x == T::zero() {
            Self::zero()
        } else {
            Self {
                log_magnitude: x.abs().ln(),
                sign: if x < T::zero() { -1 } else { 1 },
                is_zero: false,
            }
        }
    }

    /// Back to an ordinary float; may overflow to ±inf or underflow to ±0.
    pub fn to_value(self) -> T {
        if self.is_zero {
            return T::zero();
        }
        let m = self.log_magnitude.exp();
        if self.sign < 0 {
            -m
        } else {
            m
        }
    }

    /// `None` when dividing by an exact zero.
    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        if rhs.is_zero {
            return None;
        }
        if self.is_zero {
            return Some(Self::zero());
        }
        Some(Self {
            log_magnitude: self.log_magnitude - rhs.log_magnitude,
            sign: self.sign * rhs.sign,
            is_zero: false,
        })
    }
}

impl<T: Scalar> Mul for SignedLogValue<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero || rhs.is_zero {
            return Self::zero();
        }
        Self {
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
            sign: self.sign * rhs.sign,
            is_zero: false,
        }
    }
}

impl<T: Scalar> Div for SignedLogValue<T> {
    type Output = Self;

    /// Panics on division by an exact zero; use [`SignedLogValue::checked_div`]
    /// when the divisor can vanish.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs).expect("division by an exact zero")
    }
}

impl<T: Scalar> std::iter::Product for SignedLogValue<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// Signed-log product of `gaps`. Any exact zero makes the product an exact
/// zero; the empty product is one.
pub fn signed_log_product<T: Scalar, I: IntoIterator<Item = T>>(gaps: I) -> SignedLogValue<T> {
    let mut log_magnitude = T::zero();
    let mut sign = 1i8;
    for g in gaps {
        if g == T::zero() {
            return SignedLogValue::zero();
        }
        if g < T::zero() {
            sign = -sign;
        }
        log_magnitude += g.abs().ln();
    }
    SignedLogValue { log_magnitude, sign, is_zero: false }
}
