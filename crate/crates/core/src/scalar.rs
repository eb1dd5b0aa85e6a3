//! Scalar abstraction shared by the solver and the identity kernels.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point type the numerical core is generic over.
///
/// The associated constants are the precision-dependent defaults; every
/// other threshold is a fixed multiple of the problem scale.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Relative cluster tolerance; the absolute threshold is
    /// `CLUSTER_RTOL * max(1, ‖A‖₂)`.
    const CLUSTER_RTOL: f64;
    /// Ratios in `[-NEGATIVE_WEIGHT_TOL, 0)` are rounding noise and clamp to zero.
    const NEGATIVE_WEIGHT_TOL: f64;

    /// Converts an `f64` literal. Infallible for the float types we implement.
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const CLUSTER_RTOL: f64 = 1e-8;
    const NEGATIVE_WEIGHT_TOL: f64 = 1e-9;
}

impl Scalar for f32 {
    const CLUSTER_RTOL: f64 = 1e-4;
    const NEGATIVE_WEIGHT_TOL: f64 = 1e-5;
}
