//! Recursive-descent parser for the formula grammar:
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := neg ("&" neg)*
//! neg     := "~" neg | prim
//! prim    := ident | "T" | "F" | "(" formula ")"
//! ident   := [a-z][a-zA-Z0-9]*
//! ```

use super::Formula;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Const(bool),
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("atom {s:?}"),
        Tok::Const(true) => "T".into(),
        Tok::Const(false) => "F".into(),
        Tok::Not => "'~'".into(),
        Tok::And => "'&'".into(),
        Tok::Or => "'|'".into(),
        Tok::Imp => "'->'".into(),
        Tok::Iff => "'<->'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Imp
            }
            b'<' if text[i..].starts_with("<->") => {
                i += 2;
                Tok::Iff
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word = &text[start..=i];
                match word {
                    "T" => Tok::Const(true),
                    "F" => Tok::Const(false),
                    _ if c.is_ascii_lowercase() => Tok::Ident(word.to_string()),
                    _ => return Err(Error::parse(start, format!("invalid identifier {word:?}"))),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::parse(start, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        Error::parse(
            self.pos(),
            format!("expected {wanted}, found {}", describe(self.peek())),
        )
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.imp()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            lhs = Formula::iff(lhs, self.imp()?);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            return Ok(Formula::implies(lhs, self.imp()?));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.neg()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = Formula::and(lhs, self.neg()?);
        }
        Ok(lhs)
    }

    fn neg(&mut self) -> Result<Formula> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Formula::not(self.neg()?));
        }
        self.prim()
    }

    fn prim(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::Const(b) => {
                self.bump();
                Ok(Formula::Constant(b))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

/// Parses a formula; errors carry the byte offset of the offending token.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}
