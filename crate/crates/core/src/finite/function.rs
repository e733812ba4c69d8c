use std::collections::BTreeMap;

use super::FiniteSet;
use crate::error::{Error, Result};

/// A total function between finite sets, stored as a lookup table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFunction<A: Ord, B: Ord> {
    domain: FiniteSet<A>,
    codomain: FiniteSet<B>,
    table: BTreeMap<A, B>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionQuery {
    Injective,
    Surjective,
    Bijective,
}

impl<A: Ord + Clone, B: Ord + Clone> FiniteFunction<A, B> {
    /// Checks that `table` is defined exactly on `domain` and lands in `codomain`.
    pub fn new(
        domain: FiniteSet<A>,
        codomain: FiniteSet<B>,
        table: BTreeMap<A, B>,
    ) -> Result<Self> {
        if table.len() != domain.len() || !domain.iter().all(|x| table.contains_key(x)) {
            return Err(Error::domain(
                "function table must be defined exactly on its domain",
            ));
        }
        if !table.values().all(|y| codomain.contains(y)) {
            return Err(Error::domain("function value outside its codomain"));
        }
        Ok(FiniteFunction {
            domain,
            codomain,
            table,
        })
    }

    pub fn from_fn(
        domain: FiniteSet<A>,
        codomain: FiniteSet<B>,
        f: impl Fn(&A) -> B,
    ) -> Result<Self> {
        let table = domain.iter().map(|x| (x.clone(), f(x))).collect();
        Self::new(domain, codomain, table)
    }

    pub fn domain(&self) -> &FiniteSet<A> {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSet<B> {
        &self.codomain
    }

    pub fn apply(&self, x: &A) -> Option<&B> {
        self.table.get(x)
    }

    /// `{ f(x) : x ∈ domain }`.
    pub fn image(&self) -> FiniteSet<B> {
        self.table.values().cloned().collect()
    }

    pub fn is_injective(&self) -> bool {
        // f x ∉ image f xs, recursively down the domain list
        let values: Vec<&B> = self.table.values().collect();
        (0..values.len()).all(|i| !values[i + 1..].contains(&values[i]))
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.codomain
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn query(&self, q: FunctionQuery) -> bool {
        match q {
            FunctionQuery::Injective => self.is_injective(),
            FunctionQuery::Surjective => self.is_surjective(),
            FunctionQuery::Bijective => self.is_bijective(),
        }
    }

    /// `x ↦ g(f(x))` where `self` is `f`; needs `codomain(f) ⊆ domain(g)`.
    pub fn then<C: Ord + Clone>(&self, g: &FiniteFunction<B, C>) -> Result<FiniteFunction<A, C>> {
        compose(g, self)
    }

    pub fn invert(&self) -> Result<FiniteFunction<B, A>> {
        if !self.is_bijective() {
            return Err(Error::domain("only a bijection can be inverted"));
        }
        Ok(FiniteFunction {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            table: self
                .table
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
        })
    }
}

impl<A: Ord + Clone> FiniteFunction<A, A> {
    pub fn identity(set: FiniteSet<A>) -> Self {
        let table = set.iter().map(|x| (x.clone(), x.clone())).collect();
        FiniteFunction {
            domain: set.clone(),
            codomain: set,
            table,
        }
    }
}

/// `g ∘ f`.
pub fn compose<A, B, C>(
    g: &FiniteFunction<B, C>,
    f: &FiniteFunction<A, B>,
) -> Result<FiniteFunction<A, C>>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    if !f.codomain.is_subset(&g.domain) {
        return Err(Error::domain(
            "cannot compose: codomain of f is not within the domain of g",
        ));
    }
    let table = f
        .table
        .iter()
        .map(|(x, y)| (x.clone(), g.table[y].clone()))
        .collect();
    Ok(FiniteFunction {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        table,
    })
}

impl<B: Ord + Clone, A: Ord + Clone> FiniteFunction<B, A> {
    /// `g(f(x)) = x` for every `x` in the domain of `f`, with `self` as `g`.
    pub fn is_left_inverse_of(&self, f: &FiniteFunction<A, B>) -> bool {
        f.table.iter().all(|(x, y)| self.apply(y) == Some(x))
    }
}
