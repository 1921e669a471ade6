//! Scalar traits shared by the generic algebra.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, Num};

/// Coefficient type of a truncated series: any commutative ring with
/// division (fields in practice), cloneable and printable.
pub trait Scalar: Num + Clone + Debug {}
impl<T: Num + Clone + Debug> Scalar for T {}

/// Ordered scalar, used for the deformation parameters (p, q).
pub trait Real: Scalar + PartialOrd {}
impl<T: Scalar + PartialOrd> Real for T {}

/// Floating point scalar: f32 or f64.
pub trait RealFloat: Real + Float + FromPrimitive + Display + Send + Sync + 'static {}
impl<T: Real + Float + FromPrimitive + Display + Send + Sync + 'static> RealFloat for T {}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: RealFloat>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in target float")
}
