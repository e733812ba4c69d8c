use num_integer::Integer as IntegerOps;

use crate::error::{Error, Result};
use crate::Integer;

fn two<T: IntegerOps + Clone>() -> T {
    T::one() + T::one()
}

/// Trial division up to `√n`, skipping even candidates after 2.
pub fn is_prime<T: IntegerOps + Clone>(n: &T) -> bool {
    let two = two::<T>();
    if *n < two {
        return false;
    }
    if *n == two {
        return true;
    }
    if n.is_even() {
        return false;
    }
    let mut d = two.clone() + T::one();
    while d.clone() * d.clone() <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d = d + two.clone();
    }
    true
}

/// Prime factors of `n` in nondecreasing order, with multiplicity.
pub fn factorize<T: IntegerOps + Clone>(n: &T) -> Result<Vec<T>> {
    let two = two::<T>();
    if *n < two {
        return Err(Error::domain("factorize requires n >= 2"));
    }
    let mut rest = n.clone();
    let mut factors = Vec::new();
    while rest.is_multiple_of(&two) {
        factors.push(two.clone());
        rest = rest / two.clone();
    }
    let mut d = two.clone() + T::one();
    while d.clone() * d.clone() <= rest {
        while rest.is_multiple_of(&d) {
            factors.push(d.clone());
            rest = rest / d.clone();
        }
        d = d + two.clone();
    }
    if rest > T::one() {
        factors.push(rest);
    }
    Ok(factors)
}

/// Unbounded generator of the primes in increasing order.
///
/// Each candidate is checked against the primes already produced, up to its
/// square root, so memory grows with the number of primes pulled.
#[derive(Debug, Clone)]
pub struct PrimeStream<T = Integer> {
    found: Vec<T>,
}

impl<T: IntegerOps + Clone> PrimeStream<T> {
    pub fn new() -> Self {
        PrimeStream { found: Vec::new() }
    }

    fn passes(&self, candidate: &T) -> bool {
        self.found
            .iter()
            .take_while(|p| (*p).clone() * (*p).clone() <= *candidate)
            .all(|p| !candidate.is_multiple_of(p))
    }
}

impl<T: IntegerOps + Clone> Default for PrimeStream<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: IntegerOps + Clone> Iterator for PrimeStream<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let next = match self.found.last() {
            None => two::<T>(),
            Some(last) if *last == two::<T>() => last.clone() + T::one(),
            Some(last) => {
                let mut c = last.clone() + two::<T>();
                while !self.passes(&c) {
                    c = c + two::<T>();
                }
                c
            }
        };
        self.found.push(next.clone());
        Some(next)
    }
}

pub fn primes_stream() -> PrimeStream<Integer> {
    PrimeStream::new()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_oracle(n: u64) -> bool {
        n >= 2 && (2..n).all(|d| n % d != 0)
    }

    #[test]
    fn primality() {
        assert!(is_prime(&Integer::from(2)));
        assert!(!is_prime(&Integer::from(1)));
        assert!(!is_prime(&Integer::from(0)));
        assert!(!is_prime(&Integer::from(-7)));
        assert!(!is_prime(&Integer::from(91)));
        for n in 0u64..500 {
            assert_eq!(is_prime(&n), trial_division_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn factors() {
        let f: Vec<Integer> = factorize(&Integer::from(84)).unwrap();
        assert_eq!(f, [2, 2, 3, 7].map(Integer::from).to_vec());
        assert_eq!(factorize(&97u32).unwrap(), vec![97]);
        assert!(factorize(&Integer::from(1)).is_err());
        assert!(factorize(&-10i64).is_err());
    }

    #[test]
    fn big_factorization() {
        let n: Integer = "1000000000000000000000".parse().unwrap();
        let f = factorize(&n).unwrap();
        assert_eq!(f.len(), 42);
        assert_eq!(f.iter().product::<Integer>(), n);
    }

    #[test]
    fn stream_prefix() {
        let first: Vec<u32> = PrimeStream::new().take(5).collect();
        assert_eq!(first, [2, 3, 5, 7, 11]);
        assert_eq!(primes_stream().nth(24), Some(Integer::from(97)));
        assert_eq!(primes_stream().take(0).count(), 0);
    }
}
