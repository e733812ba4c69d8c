use std::fmt;

use super::FiniteSet;
use crate::error::{Error, Result};

/// A binary relation given as a finite set of pairs over a declared domain.
///
/// The domain is explicit because reflexivity cannot be read off the pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<T: Ord> {
    domain: FiniteSet<T>,
    pairs: FiniteSet<(T, T)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelationProperties {
    pub reflexive: bool,
    pub irreflexive: bool,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub equivalence: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureKind {
    Reflexive,
    Symmetric,
    Transitive,
}

impl<T: Ord + Clone> Relation<T> {
    /// Fails if a pair mentions something outside `domain`.
    pub fn new(domain: FiniteSet<T>, pairs: FiniteSet<(T, T)>) -> Result<Self> {
        if pairs
            .iter()
            .any(|(a, b)| !domain.contains(a) || !domain.contains(b))
        {
            return Err(Error::domain(
                "relation pair has a component outside the domain",
            ));
        }
        Ok(Relation { domain, pairs })
    }

    pub fn identity(domain: FiniteSet<T>) -> Self {
        let pairs = domain.iter().map(|x| (x.clone(), x.clone())).collect();
        Relation { domain, pairs }
    }

    pub fn total(domain: FiniteSet<T>) -> Self {
        let pairs = domain.product(&domain);
        Relation { domain, pairs }
    }

    /// Relation `{ (a, b) | holds(a, b) }` over `domain`.
    pub fn from_predicate(domain: FiniteSet<T>, holds: impl Fn(&T, &T) -> bool) -> Self {
        let pairs = domain
            .product(&domain)
            .into_iter()
            .filter(|(a, b)| holds(a, b))
            .collect();
        Relation { domain, pairs }
    }

    pub fn domain(&self) -> &FiniteSet<T> {
        &self.domain
    }

    pub fn pairs(&self) -> &FiniteSet<(T, T)> {
        &self.pairs
    }

    pub fn relates(&self, a: &T, b: &T) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    pub fn is_reflexive(&self) -> bool {
        self.domain.iter().all(|x| self.relates(x, x))
    }

    pub fn is_irreflexive(&self) -> bool {
        self.domain.iter().all(|x| !self.relates(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs.iter().all(|(a, b)| self.relates(b, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs
            .iter()
            .all(|(a, b)| a == b || !self.relates(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs.iter().all(|(a, b)| {
            self.pairs
                .iter()
                .filter(|(c, _)| c == b)
                .all(|(_, d)| self.relates(a, d))
        })
    }

    pub fn properties(&self) -> RelationProperties {
        let reflexive = self.is_reflexive();
        let symmetric = self.is_symmetric();
        let transitive = self.is_transitive();
        RelationProperties {
            reflexive,
            irreflexive: self.is_irreflexive(),
            symmetric,
            antisymmetric: self.is_antisymmetric(),
            transitive,
            equivalence: reflexive && symmetric && transitive,
        }
    }

    /// `self ; other`: pairs `(a, c)` with `a self b` and `b other c`.
    pub fn compose(&self, other: &Relation<T>) -> Relation<T> {
        let pairs = self
            .pairs
            .iter()
            .flat_map(|(a, b)| {
                other
                    .pairs
                    .iter()
                    .filter(move |(c, _)| c == b)
                    .map(move |(_, d)| (a.clone(), d.clone()))
            })
            .collect();
        Relation {
            domain: self.domain.union(&other.domain),
            pairs,
        }
    }

    pub fn inverse(&self) -> Relation<T> {
        Relation {
            domain: self.domain.clone(),
            pairs: self
                .pairs
                .iter()
                .map(|(a, b)| (b.clone(), a.clone()))
                .collect(),
        }
    }

    /// Smallest superset of `self` with the given property, same domain.
    pub fn closure(&self, kind: ClosureKind) -> Relation<T> {
        match kind {
            ClosureKind::Reflexive => Relation {
                domain: self.domain.clone(),
                pairs: self
                    .pairs
                    .union(Relation::identity(self.domain.clone()).pairs()),
            },
            ClosureKind::Symmetric => Relation {
                domain: self.domain.clone(),
                pairs: self.pairs.union(&self.inverse().pairs),
            },
            ClosureKind::Transitive => {
                let mut current = self.clone();
                loop {
                    let step = current.pairs.union(&current.compose(&current).pairs);
                    if step == current.pairs {
                        return current;
                    }
                    current.pairs = step;
                }
            }
        }
    }

    /// Equivalence classes; fails naming the first missing property.
    pub fn quotient(&self) -> Result<FiniteSet<FiniteSet<T>>> {
        let props = self.properties();
        for (ok, name) in [
            (props.reflexive, "reflexive"),
            (props.symmetric, "symmetric"),
            (props.transitive, "transitive"),
        ] {
            if !ok {
                return Err(Error::domain(format!(
                    "quotient requires an equivalence relation, but the relation is not {name}"
                )));
            }
        }
        Ok(self
            .domain
            .iter()
            .map(|x| {
                self.domain
                    .iter()
                    .filter(|y| self.relates(x, y))
                    .cloned()
                    .collect()
            })
            .collect())
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Relation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({a}, {b})")?;
        }
        write!(f, "}} on {}", self.domain)
    }
}
