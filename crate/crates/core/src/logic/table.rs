use std::collections::BTreeMap;

use super::Formula;
use crate::error::{Error, Result};

/// Assignment of truth values to atom names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<String, bool>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, atom: impl Into<String>, value: bool) -> Self {
        self.0.insert(atom.into(), value);
        self
    }

    pub fn set(&mut self, atom: impl Into<String>, value: bool) {
        self.0.insert(atom.into(), value);
    }

    pub fn get(&self, atom: &str) -> Option<bool> {
        self.0.get(atom).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: Into<String>> FromIterator<(S, bool)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (S, bool)>>(iter: I) -> Self {
        Valuation(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

/// Classical two-valued evaluation. Fails on the first unbound atom.
pub fn evaluate(f: &Formula, v: &Valuation) -> Result<bool> {
    Ok(match f {
        Formula::Atom(name) => v
            .get(name)
            .ok_or_else(|| Error::UnboundAtom(name.clone()))?,
        Formula::Constant(b) => *b,
        Formula::Not(g) => !evaluate(g, v)?,
        Formula::And(l, r) => evaluate(l, v)? & evaluate(r, v)?,
        Formula::Or(l, r) => evaluate(l, v)? | evaluate(r, v)?,
        Formula::Implies(l, r) => !evaluate(l, v)? | evaluate(r, v)?,
        Formula::Iff(l, r) => evaluate(l, v)? == evaluate(r, v)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthRow {
    /// One value per atom, in the table's atom order.
    pub values: Vec<bool>,
    pub result: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub atoms: Vec<String>,
    pub rows: Vec<TruthRow>,
}

impl TruthTable {
    pub fn valuation(&self, row: usize) -> Valuation {
        self.atoms
            .iter()
            .cloned()
            .zip(self.rows[row].values.iter().copied())
            .collect()
    }

    /// `(valuation, result)` pairs in row order.
    pub fn entries(&self) -> impl Iterator<Item = (Valuation, bool)> + '_ {
        (0..self.rows.len()).map(move |i| (self.valuation(i), self.rows[i].result))
    }
}

/// Row `i` of the enumeration over `n` atoms: atom `j` is true iff bit
/// `n-1-j` of `i` is clear. The first atom varies slowest, true before false.
fn row_values(i: usize, n: usize) -> Vec<bool> {
    (0..n).map(|j| (i >> (n - 1 - j)) & 1 == 0).collect()
}

fn valuations(atoms: &[String]) -> impl Iterator<Item = (Vec<bool>, Valuation)> + '_ {
    let n = atoms.len();
    (0..1usize << n).map(move |i| {
        let values = row_values(i, n);
        let v = atoms.iter().cloned().zip(values.iter().copied()).collect();
        (values, v)
    })
}

pub fn truth_table(f: &Formula) -> TruthTable {
    let atoms = f.atoms();
    let rows = valuations(&atoms)
        .map(|(values, v)| TruthRow {
            values,
            result: evaluate(f, &v).expect("valuation covers every atom"),
        })
        .collect();
    TruthTable { atoms, rows }
}

pub fn is_valid(f: &Formula) -> bool {
    truth_table(f).rows.iter().all(|r| r.result)
}

pub fn is_satisfiable(f: &Formula) -> bool {
    truth_table(f).rows.iter().any(|r| r.result)
}

pub fn is_contradiction(f: &Formula) -> bool {
    !is_satisfiable(f)
}

/// Agreement on every valuation over the union of both atom sets.
pub fn are_equivalent(f: &Formula, g: &Formula) -> bool {
    let mut atoms = f.atoms();
    for a in g.atoms() {
        if !atoms.contains(&a) {
            atoms.push(a);
        }
    }
    let agree = valuations(&atoms).all(|(_, v)| {
        evaluate(f, &v).expect("total valuation") == evaluate(g, &v).expect("total valuation")
    });
    agree
}
