//! Scalar abstraction so the numeric core runs in either f32 or f64.

use ndarray::{LinalgScalar, ScalarOperand};
use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point scalar used throughout the signal / model / optimizer code.
///
/// `f64` is the default for training and evaluation; `f32` halves memory for
/// experiments where the tolerances allow it.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + ScalarOperand
    + LinalgScalar
    + Sum
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Unit roundoff (half the machine epsilon ulp spacing at 1.0).
    fn unit_roundoff() -> f64;

    fn from_f64(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 -> scalar conversion")
    }

    fn to_f64_(self) -> f64 {
        self.to_f64().expect("scalar -> f64 conversion")
    }
}

impl Scalar for f32 {
    fn unit_roundoff() -> f64 {
        f64::from(f32::EPSILON) / 2.0
    }
}

impl Scalar for f64 {
    fn unit_roundoff() -> f64 {
        f64::EPSILON / 2.0
    }
}

/// Shorthand for converting an `f64` constant into the active scalar type.
pub(crate) fn s<A: Scalar>(x: f64) -> A {
    A::from_f64(x)
}
