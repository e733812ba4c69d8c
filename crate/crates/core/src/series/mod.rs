//! Formal power series as lazily generated, memoized coefficient streams,
//! and decision-driven processes.

mod process;
mod stream;

pub use process::Process;
pub use stream::{Series, DIVISION_PROBE};
