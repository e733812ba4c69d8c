//! Dense polynomials over a field, difference sequences, exact Gaussian
//! elimination, and recovery of polynomial closed forms from samples.

mod closed_form;
mod dense;
mod differences;
mod linear;

pub use closed_form::{closed_form, fits_samples};
pub use dense::{binomial, binomial_power, Poly};
pub use differences::{degree_by_differences, difs};
pub use linear::LinearSystem;
