//! Command-line front end for `discmath`: text parsers and renderers for
//! sequences, polynomials, formulas and relations, plus subcommand dispatch.

pub mod app;
pub mod parse;
pub mod render;

pub use app::{run, Outcome};
