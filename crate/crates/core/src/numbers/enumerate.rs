use num_integer::Integer as IntegerOps;
use num_traits::Zero;

use crate::{Integer, Rational};

/// Walks the rationals diagonal by diagonal.
///
/// Yields `0` first, then for `p + q = 2, 3, 4, …` and `p = 1 ..= p+q-1`
/// every reduced `p/q` as `+p/q` followed by `-p/q`.
#[derive(Debug, Clone)]
pub struct RationalEnumerator {
    sum: u64,
    p: u64,
    zero_done: bool,
    pending: Option<Rational>,
}

impl RationalEnumerator {
    pub fn new() -> Self {
        RationalEnumerator {
            sum: 2,
            p: 1,
            zero_done: false,
            pending: None,
        }
    }

    fn advance(&mut self) {
        self.p += 1;
        if self.p >= self.sum {
            self.sum += 1;
            self.p = 1;
        }
    }
}

impl Default for RationalEnumerator {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for RationalEnumerator {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        if !self.zero_done {
            self.zero_done = true;
            return Some(Rational::zero());
        }
        if let Some(neg) = self.pending.take() {
            return Some(neg);
        }
        loop {
            let (p, q) = (self.p, self.sum - self.p);
            self.advance();
            if p.gcd(&q) == 1 {
                let pos = Rational::new_raw(Integer::from(p), Integer::from(q));
                self.pending = Some(-pos.clone());
                return Some(pos);
            }
        }
    }
}

pub fn enumerate_rationals() -> RationalEnumerator {
    RationalEnumerator::new()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::make_rational;

    fn q(n: i64, d: i64) -> Rational {
        make_rational(n.into(), d.into()).unwrap()
    }

    #[test]
    fn first_five() {
        let got: Vec<Rational> = enumerate_rationals().take(5).collect();
        assert_eq!(got, vec![q(0, 1), q(1, 1), q(-1, 1), q(1, 2), q(-1, 2)]);
    }

    #[test]
    fn skips_unreduced() {
        // diagonal 4: 1/3, (2/2 skipped), 3/1
        let got: Vec<Rational> = enumerate_rationals().skip(7).take(4).collect();
        assert_eq!(got, vec![q(1, 3), q(-1, 3), q(3, 1), q(-3, 1)]);
    }

    #[test]
    fn three_quarters_reached() {
        let pos = enumerate_rationals().position(|r| r == q(3, 4));
        assert!(pos.is_some());
    }
}
