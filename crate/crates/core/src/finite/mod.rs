//! Finite sets, binary relations over a declared domain, and total functions
//! between finite sets.

mod element;
mod function;
mod relation;
mod set;

pub use element::Element;
pub use function::compose;
pub use function::{FiniteFunction, FunctionQuery};
pub use relation::{ClosureKind, Relation, RelationProperties};
pub use set::{FiniteSet, POWERSET_LIMIT};
