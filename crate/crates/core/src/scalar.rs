//! The field abstraction the polynomial, solver and power-series code is
//! written against.
//!
//! Everything in this crate that only needs field operations is generic over
//! [`Scalar`]. Exact results (closed forms, solver soundness) require an
//! exact field such as [`crate::Rational`]; the float impls exist for quick
//! numeric experiments and compare with `==`.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Num;

/// A field element with exact-or-float semantics.
pub trait Scalar: Num + Neg<Output = Self> + Clone + PartialEq + Debug {
    /// Embeds a small non-negative integer, used for powers of sample points
    /// and the `(n + 1)` / `1 / n` factors of formal calculus.
    fn from_u64(n: u64) -> Self;
}

macro_rules! float_scalar {
    ($($t:ty)*) => ($(
        impl Scalar for $t {
            fn from_u64(n: u64) -> Self {
                n as $t
            }
        }
    )*)
}

float_scalar!(f32 f64);

impl Scalar for Ratio<BigInt> {
    fn from_u64(n: u64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
}

impl Scalar for Ratio<i64> {
    fn from_u64(n: u64) -> Self {
        Ratio::from_integer(n as i64)
    }
}

/// `base^exp` by repeated multiplication (exponents here are small).
pub(crate) fn pow_u<T: Scalar>(base: &T, exp: usize) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}
