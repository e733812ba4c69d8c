//! Propositional formulas: parsing, rendering, evaluation and truth-table
//! decision procedures for any number of atoms.

mod formula;
mod parser;
mod table;

pub use formula::Formula;
pub use parser::parse_formula;
pub use table::{
    are_equivalent, evaluate, is_contradiction, is_satisfiable, is_valid, truth_table, TruthRow,
    TruthTable, Valuation,
};
