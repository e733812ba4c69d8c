use std::fmt;

/// A process driven by an externally supplied stream of decisions.
///
/// Each step maps `(state, decision)` to `(action, next state)`; randomness
/// lives entirely in the decision stream, so runs are reproducible.
pub struct Process<S, N> {
    step: Box<dyn Fn(&S, &N) -> (N, S)>,
    initial: S,
}

impl<S: Clone, N> Process<S, N> {
    pub fn new(initial: S, step: impl Fn(&S, &N) -> (N, S) + 'static) -> Self {
        Process {
            step: Box::new(step),
            initial,
        }
    }

    pub fn initial(&self) -> &S {
        &self.initial
    }

    /// One action per decision, in order.
    pub fn run(&self, decisions: &[N]) -> Vec<N> {
        self.actions(decisions.iter()).collect()
    }

    /// Lazily maps a (possibly infinite) decision stream to its actions.
    pub fn actions<'a, I>(&'a self, decisions: I) -> impl Iterator<Item = N> + 'a
    where
        I: IntoIterator<Item = &'a N>,
        I::IntoIter: 'a,
        N: 'a,
    {
        decisions
            .into_iter()
            .scan(self.initial.clone(), |state, d| {
                let (action, next) = (self.step)(state, d);
                *state = next;
                Some(action)
            })
    }
}

impl<S: fmt::Debug, N> fmt::Debug for Process<S, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Process")
            .field("initial", &self.initial)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_run() {
        let p = Process::new(0i64, |s: &i64, d: &i64| (*d, *s));
        assert!(p.run(&[]).is_empty());
    }

    #[test]
    fn echo() {
        let p = Process::new(0i64, |s: &i64, d: &i64| (*d, *s));
        assert_eq!(p.run(&[4, 7]), vec![4, 7]);
    }

    #[test]
    fn counter() {
        let p = Process::new(0i64, |s: &i64, d: &i64| (s + d, s + d));
        assert_eq!(p.run(&[1, 2, 3]), vec![1, 3, 6]);
        assert_eq!(p.run(&[1, 2, 3]), p.run(&[1, 2, 3]));
    }

    #[test]
    fn infinite_decisions() {
        let p = Process::new(0i64, |s: &i64, d: &i64| (s + d, s + d));
        let ones = std::iter::repeat(&1i64);
        let got: Vec<i64> = p.actions(ones).take(4).collect();
        assert_eq!(got, vec![1, 2, 3, 4]);
    }
}
