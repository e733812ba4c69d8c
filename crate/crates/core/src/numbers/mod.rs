//! Arbitrary-precision integers and rationals, primality, factorization and
//! a duplicate-free enumeration of the rationals.

mod enumerate;
mod primes;
mod rational;

pub use enumerate::{enumerate_rationals, RationalEnumerator};
pub use primes::{factorize, is_prime, primes_stream, PrimeStream};
pub use rational::{make_rational, parse_rational, rational_arith, RationalOp};
