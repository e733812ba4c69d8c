//! Exact discrete mathematics: arbitrary-precision rationals and primes,
//! propositional truth tables, finite sets/relations/functions, dense
//! polynomials with the difference method for closed forms, and lazy formal
//! power series.
//!
//! The polynomial, linear-algebra and power-series code is generic over
//! [`Scalar`]; the aliases below fix it to exact [`Rational`] coefficients,
//! which is what every exactness guarantee in this crate assumes.

pub mod error;
pub mod finite;
pub mod logic;
pub mod numbers;
pub mod poly;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Signed arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Normalized arbitrary-precision fraction; the default scalar.
pub type Rational = num_rational::BigRational;

pub type Polynomial = poly::Poly<Rational>;
pub type PolynomialF64 = poly::Poly<f64>;
pub type PowerSeries = series::Series<Rational>;
pub type PowerSeriesF64 = series::Series<f64>;
pub type RationalSystem = poly::LinearSystem<Rational>;
/// A finite sample sequence `f(0), f(1), …`.
pub type Sequence = Vec<Rational>;
/// Process over arbitrary-precision decisions and actions.
pub type IntegerProcess<S> = series::Process<S, Integer>;
