//! Human-readable and JSON renderings.

use discmath::logic::TruthTable;
use discmath::{Polynomial, Rational};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Descending human order, e.g. `3*x^2 - 1/2*x + 4`; the zero polynomial
/// renders as `0`. Parses back with [`crate::parse::parse_poly`].
pub fn render_poly(p: &Polynomial) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = c.abs();
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        if k == 0 {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&format!("{magnitude}*{var}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_list(xs: &[Rational]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn json_rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn json_poly(p: &Polynomial) -> Value {
    json!({
        "degree": p.degree(),
        "coefficients": json_rationals(p.coeffs()),
    })
}

fn tf(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

/// One header line (`atoms | formula`) then one line per row.
pub fn render_table(table: &TruthTable, formula: &str) -> String {
    let mut lines = Vec::with_capacity(table.rows.len() + 1);
    let header = table.atoms.join(" ");
    lines.push(format!("{header} | {formula}").trim_start().to_string());
    for row in &table.rows {
        let vals: Vec<String> = table
            .atoms
            .iter()
            .zip(&row.values)
            .map(|(a, v)| format!("{:<width$}", tf(*v), width = a.len()))
            .collect();
        lines.push(
            format!("{} | {}", vals.join(" "), tf(row.result))
                .trim_start()
                .to_string(),
        );
    }
    lines.join("\n")
}

pub fn json_table(table: &TruthTable) -> Value {
    json!({
        "atoms": table.atoms,
        "rows": table.rows.iter().map(|r| json!({"values": r.values, "result": r.result})).collect::<Vec<_>>(),
    })
}
