use super::{degree_by_differences, LinearSystem, Poly};
use crate::error::{Error, Result};
use crate::scalar::{pow_u, Scalar};

/// `true` when `p(i) = samples[i]` for every index.
pub fn fits_samples<T: Scalar>(p: &Poly<T>, samples: &[T]) -> bool {
    samples
        .iter()
        .enumerate()
        .all(|(i, s)| p.eval(&T::from_u64(i as u64)) == *s)
}

/// Recovers `f` with `f(i) = samples[i]` by the difference method.
///
/// The degree `d` comes from [`degree_by_differences`]; the coefficients
/// solve the Vandermonde system `f(i) = samples[i]` for `i = 0..=d`, and the
/// result is then checked against every sample.
pub fn closed_form<T: Scalar>(samples: &[T]) -> Result<Poly<T>> {
    let degree = degree_by_differences(samples)?.ok_or(Error::NotPolynomial)?;
    let matrix = (0..=degree)
        .map(|i| {
            let x = T::from_u64(i as u64);
            (0..=degree).map(|j| pow_u(&x, j)).collect()
        })
        .collect();
    let rhs = samples[..=degree].to_vec();
    let coeffs = LinearSystem::new(matrix, rhs)?.solve()?;
    let f = Poly::from_coeffs(coeffs);
    if !fits_samples(&f, samples) {
        return Err(Error::domain(
            "recovered polynomial does not reproduce the samples",
        ));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn seq(xs: &[i64]) -> Vec<Rational> {
        xs.iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect()
    }

    #[test]
    fn squares() {
        let f = closed_form(&seq(&[0, 1, 4, 9, 16, 25])).unwrap();
        assert_eq!(f.coeffs(), seq(&[0, 0, 1]).as_slice());
    }

    #[test]
    fn constant_and_linear() {
        assert_eq!(
            closed_form(&seq(&[3, 3, 3])).unwrap().coeffs(),
            seq(&[3]).as_slice()
        );
        assert_eq!(
            closed_form(&seq(&[0, 1, 2, 3, 4, 5])).unwrap().coeffs(),
            seq(&[0, 1]).as_slice()
        );
        assert_eq!(closed_form(&seq(&[0, 0])).unwrap(), Poly::zero());
    }

    #[test]
    fn triangular_numbers() {
        let f = closed_form(&seq(&[0, 1, 3, 6, 10, 15])).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(
            f.coeffs(),
            &[Rational::from_integer(0.into()), half.clone(), half]
        );
    }

    #[test]
    fn undetectable_degree() {
        assert_eq!(closed_form(&seq(&[0, 1])), Err(Error::NotPolynomial));
        assert_eq!(closed_form(&seq(&[0, 1, 4])), Err(Error::NotPolynomial));
        assert_eq!(closed_form(&seq(&[1])), Err(Error::InsufficientData));
    }

    #[test]
    fn rational_samples() {
        let s: Vec<Rational> = (0..5)
            .map(|i| Rational::new((2 * i + 1).into(), 3.into()))
            .collect();
        let f = closed_form(&s).unwrap();
        assert_eq!(
            f.coeffs(),
            &[
                Rational::new(1.into(), 3.into()),
                Rational::new(2.into(), 3.into())
            ]
        );
    }
}
