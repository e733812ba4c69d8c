use num_traits::{CheckedDiv, Zero};

use crate::error::{Error, Result};
use crate::{Integer, Rational};

/// Builds the normalized representative of `num / den`.
///
/// The sign ends up on the numerator and zero is `0/1`.
pub fn make_rational(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    // Ratio::new reduces and moves the sign onto the numerator.
    Ok(Rational::new(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic with a checked division.
pub fn rational_arith(op: RationalOp, a: &Rational, b: &Rational) -> Result<Rational> {
    Ok(match op {
        RationalOp::Add => a + b,
        RationalOp::Sub => a - b,
        RationalOp::Mul => a * b,
        RationalOp::Div => a.checked_div(b).ok_or(Error::DivisionByZero)?,
    })
}

/// Parses `p/q` or a bare integer `p`, with an optional leading `-`.
///
/// The denominator may not carry its own sign. Surrounding whitespace is
/// ignored; anything else is a parse error positioned at the offending byte.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let (neg, digits_at) = match body.strip_prefix('-') {
        Some(_) => (true, 1),
        None => (false, 0),
    };
    let rest = &body[digits_at..];
    let (num_str, den_str) = match rest.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (rest, None),
    };
    let num = parse_digits(num_str, lead + digits_at)?;
    let num = if neg { -num } else { num };
    match den_str {
        None => Ok(Rational::from_integer(num)),
        Some(d) => {
            let den_at = lead + digits_at + num_str.len() + 1;
            let den = parse_digits(d, den_at)?;
            make_rational(num, den).map_err(|_| Error::parse(den_at, "zero denominator"))
        }
    }
}

fn parse_digits(s: &str, at: usize) -> Result<Integer> {
    if s.is_empty() {
        return Err(Error::parse(at, "expected digits"));
    }
    if let Some(bad) = s.find(|c: char| !c.is_ascii_digit()) {
        return Err(Error::parse(
            at + bad,
            format!(
                "unexpected character {:?}",
                s[bad..].chars().next().unwrap()
            ),
        ));
    }
    Ok(s.parse().expect("ascii digits"))
}
