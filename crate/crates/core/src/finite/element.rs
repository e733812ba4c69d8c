use std::fmt;

use crate::Integer;

/// A member of the concrete universe used by the text front end: integers
/// sort before strings, each in their natural order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Int(Integer),
    Str(String),
}

impl From<i64> for Element {
    fn from(n: i64) -> Self {
        Element::Int(n.into())
    }
}

impl From<Integer> for Element {
    fn from(n: Integer) -> Self {
        Element::Int(n)
    }
}

impl From<&str> for Element {
    fn from(s: &str) -> Self {
        Element::Str(s.to_string())
    }
}

fn is_bare_word(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(n) => write!(f, "{n}"),
            Element::Str(s) if is_bare_word(s) => write!(f, "{s}"),
            Element::Str(s) => write!(f, "{s:?}"),
        }
    }
}
