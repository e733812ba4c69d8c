use std::cell::RefCell;
use std::fmt;
use std::rc::{Rc, Weak};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// How many leading coefficients [`Series::div`] inspects when the divisor's
/// constant term is zero.
pub const DIVISION_PROBE: usize = 64;

type Rule<T> = Box<dyn FnMut(usize, &[T]) -> T>;

struct Node<T> {
    cache: RefCell<Vec<T>>,
    rule: RefCell<Rule<T>>,
}

/// A formal power series whose coefficients are produced on demand.
///
/// Cloning shares the underlying memo table: a coefficient is computed at
/// most once and never changes afterwards. Series are single-threaded
/// (`!Send`), since observing a coefficient may extend the cache.
pub struct Series<T>(Rc<Node<T>>);

impl<T> Clone for Series<T> {
    fn clone(&self) -> Self {
        Series(Rc::clone(&self.0))
    }
}

impl<T: Scalar + 'static> Series<T> {
    /// Series whose `n`-th coefficient is `rule(n, &coefficients[..n])`.
    ///
    /// The rule sees every earlier coefficient of the series it defines,
    /// which is what long division and other recurrences need.
    pub fn from_rule(rule: impl FnMut(usize, &[T]) -> T + 'static) -> Self {
        Series(Rc::new(Node {
            cache: RefCell::new(Vec::new()),
            rule: RefCell::new(Box::new(rule)),
        }))
    }

    pub fn from_fn(f: impl Fn(usize) -> T + 'static) -> Self {
        Self::from_rule(move |n, _| f(n))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_| T::zero())
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_fn(move |n| if n == 0 { c.clone() } else { T::zero() })
    }

    /// Coefficients of `p` followed by zeros.
    pub fn from_poly(p: &Poly<T>) -> Self {
        let p = p.clone();
        Self::from_fn(move |n| p.coeff(n))
    }

    /// Corecursion: coefficient `n` is the first component of the `n`-th
    /// step starting from `seed`.
    pub fn unfold<S: 'static>(seed: S, mut step: impl FnMut(&S) -> (T, S) + 'static) -> Self {
        let mut state = Some(seed);
        Self::from_rule(move |_, _| {
            let (value, next) = step(state.as_ref().expect("unfold state"));
            state = Some(next);
            value
        })
    }

    /// Ties a self-referential definition: `define` receives a handle to the
    /// series being defined. The definition must be productive, i.e.
    /// coefficient `n` may only depend on earlier coefficients of the handle.
    pub fn fix(define: impl FnOnce(Series<T>) -> Series<T>) -> Self {
        let slot: Rc<RefCell<Weak<Node<T>>>> = Rc::new(RefCell::new(Weak::new()));
        let forward = {
            let slot = Rc::clone(&slot);
            Self::from_fn(move |n| {
                let node = slot.borrow().upgrade().expect("fixed-point series dropped");
                Series(node).coeff(n)
            })
        };
        let defined = define(forward);
        *slot.borrow_mut() = Rc::downgrade(&defined.0);
        defined
    }

    /// Coefficient of `x^n`, computing and caching any missing prefix.
    ///
    /// # Panics
    ///
    /// If a [`Series::fix`] definition asks for a coefficient it is still
    /// computing.
    pub fn coeff(&self, n: usize) -> T {
        if let Some(c) = self.0.cache.borrow().get(n) {
            return c.clone();
        }
        loop {
            let len = self.0.cache.borrow().len();
            if len > n {
                break;
            }
            let next = {
                let cache = self.0.cache.borrow();
                let mut rule = self
                    .0
                    .rule
                    .try_borrow_mut()
                    .expect("series definition is not productive");
                rule(len, &cache)
            };
            self.0.cache.borrow_mut().push(next);
        }
        self.0.cache.borrow()[n].clone()
    }

    /// The first `n` coefficients.
    pub fn take(&self, n: usize) -> Vec<T> {
        if n > 0 {
            self.coeff(n - 1);
        }
        self.0.cache.borrow()[..n].to_vec()
    }

    /// Number of coefficients computed so far.
    pub fn cached_len(&self) -> usize {
        self.0.cache.borrow().len()
    }

    pub fn add(&self, other: &Series<T>) -> Series<T> {
        let (a, b) = (self.clone(), other.clone());
        Self::from_fn(move |n| a.coeff(n) + b.coeff(n))
    }

    pub fn sub(&self, other: &Series<T>) -> Series<T> {
        let (a, b) = (self.clone(), other.clone());
        Self::from_fn(move |n| a.coeff(n) - b.coeff(n))
    }

    pub fn neg(&self) -> Series<T> {
        let a = self.clone();
        Self::from_fn(move |n| -a.coeff(n))
    }

    pub fn scale(&self, c: &T) -> Series<T> {
        let (a, c) = (self.clone(), c.clone());
        Self::from_fn(move |n| c.clone() * a.coeff(n))
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Series<T>) -> Series<T> {
        let (a, b) = (self.clone(), other.clone());
        Self::from_fn(move |n| (0..=n).fold(T::zero(), |acc, k| acc + a.coeff(k) * b.coeff(n - k)))
    }

    /// Drops the first `k` coefficients (division by `x^k`).
    fn shift_down(&self, k: usize) -> Series<T> {
        if k == 0 {
            return self.clone();
        }
        let a = self.clone();
        Self::from_fn(move |n| a.coeff(n + k))
    }

    /// Power-series quotient `self / divisor` by the long-division recurrence
    /// `q_n = (a_n - Σ_{k=1..n} b_k q_{n-k}) / b_0`.
    ///
    /// A zero constant term in the divisor is accepted only if both series
    /// start with the same number of zero coefficients (found within
    /// [`DIVISION_PROBE`] terms), in which case that power of `x` cancels.
    pub fn div(&self, divisor: &Series<T>) -> Result<Series<T>> {
        let shift = (0..DIVISION_PROBE)
            .find(|&k| !divisor.coeff(k).is_zero())
            .ok_or_else(|| {
                Error::domain(format!(
                    "divisor vanishes on its first {DIVISION_PROBE} coefficients"
                ))
            })?;
        if let Some(k) = (0..shift).find(|&k| !self.coeff(k).is_zero()) {
            return Err(Error::domain(format!(
                "quotient is not a power series: divisor starts at x^{shift} but dividend has a nonzero x^{k} term"
            )));
        }
        let a = self.shift_down(shift);
        let b = divisor.shift_down(shift);
        let lead = b.coeff(0);
        Ok(Self::from_rule(move |n, q| {
            let tail = (1..=n).fold(T::zero(), |acc, k| acc + b.coeff(k) * q[n - k].clone());
            (a.coeff(n) - tail) / lead.clone()
        }))
    }

    /// Formal derivative: coefficient `n` is `(n + 1) · s_{n+1}`.
    pub fn derivative(&self) -> Series<T> {
        let a = self.clone();
        Self::from_fn(move |n| T::from_u64(n as u64 + 1) * a.coeff(n + 1))
    }

    /// Formal antiderivative with constant term `c`.
    pub fn integral(&self, c: T) -> Series<T> {
        let a = self.clone();
        Self::from_fn(move |n| {
            if n == 0 {
                c.clone()
            } else {
                a.coeff(n - 1) / T::from_u64(n as u64)
            }
        })
    }
}

impl<T: fmt::Debug> fmt::Debug for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series")
            .field("cached", &*self.0.cache.borrow())
            .finish_non_exhaustive()
    }
}
