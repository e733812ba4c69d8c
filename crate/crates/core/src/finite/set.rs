use std::cmp::Ordering;
use std::collections::btree_set::{self, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Largest set [`FiniteSet::powerset`] will expand.
pub const POWERSET_LIMIT: usize = 20;

/// Duplicate-free set kept in increasing order.
///
/// Sets order first by size and then lexicographically, so a set of sets
/// (e.g. a powerset) lists smaller members first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSet<T: Ord>(BTreeSet<T>);

impl<T: Ord> Default for FiniteSet<T> {
    fn default() -> Self {
        FiniteSet(BTreeSet::new())
    }
}

impl<T: Ord> Ord for FiniteSet<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl<T: Ord> PartialOrd for FiniteSet<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> FromIterator<T> for FiniteSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        FiniteSet(iter.into_iter().collect())
    }
}

impl<T: Ord> IntoIterator for FiniteSet<T> {
    type Item = T;
    type IntoIter = btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T: Ord> IntoIterator for &'a FiniteSet<T> {
    type Item = &'a T;
    type IntoIter = btree_set::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<T: Ord> FiniteSet<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, T> {
        self.0.iter()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.0.contains(x)
    }

    pub fn insert(&mut self, x: T) -> bool {
        self.0.insert(x)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn as_btree(&self) -> &BTreeSet<T> {
        &self.0
    }
}

impl<T: Ord + Clone> FiniteSet<T> {
    pub fn union(&self, other: &Self) -> Self {
        FiniteSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        FiniteSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        FiniteSet(self.0.difference(&other.0).cloned().collect())
    }

    /// Cartesian product `self × other`.
    pub fn product<U: Ord + Clone>(&self, other: &FiniteSet<U>) -> FiniteSet<(T, U)> {
        self.iter()
            .flat_map(|a| other.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }

    /// All `2^n` subsets, ordered by size then lexicographically.
    pub fn powerset(&self) -> Result<FiniteSet<FiniteSet<T>>> {
        if self.len() > POWERSET_LIMIT {
            return Err(Error::domain(format!(
                "powerset of a {}-element set exceeds the limit of {POWERSET_LIMIT}",
                self.len()
            )));
        }
        let items: Vec<&T> = self.iter().collect();
        Ok((0..1usize << items.len())
            .map(|mask| {
                items
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, x)| (*x).clone())
                    .collect()
            })
            .collect())
    }
}

impl<T: Ord + fmt::Display> fmt::Display for FiniteSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
