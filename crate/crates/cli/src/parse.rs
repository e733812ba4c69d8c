//! Text front ends: sample sequences, polynomial expressions (also read as
//! power-series quotients), and set/relation literals.

use discmath::finite::{Element, FiniteSet, Relation};
use discmath::numbers::parse_rational;
use discmath::{Error, Integer, Polynomial, PowerSeries, Rational, Result, Sequence};

const MAX_EXPONENT: u32 = 10_000;

/// Comma- and/or whitespace-separated rational literals (`p/q` or `p`).
///
/// Errors report the byte offset and the 1-based token number.
pub fn parse_sequence(text: &str) -> Result<Sequence> {
    let mut out = Vec::new();
    let mut token = 0;
    let mut offset = 0;
    let pieces: Vec<&str> = text.split(',').collect();
    let single_blank = pieces.len() == 1 && pieces[0].trim().is_empty();
    for piece in &pieces {
        let words: Vec<(usize, &str)> = piece
            .split_whitespace()
            .map(|w| (offset + (w.as_ptr() as usize - piece.as_ptr() as usize), w))
            .collect();
        if words.is_empty() && !single_blank {
            return Err(Error::parse(
                offset,
                format!("empty entry (token {})", token + 1),
            ));
        }
        for (at, word) in words {
            token += 1;
            let r = parse_rational(word).map_err(|_| {
                Error::parse(
                    at,
                    format!("malformed rational literal {word:?} (token {token})"),
                )
            })?;
            out.push(r);
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Integer),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let tok = match bytes[i] {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Num(text[start..=i].parse().expect("digits"))
            }
            b'x' | b'z' => Tok::Var,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::parse(start, format!("unexpected character {ch:?}")));
            }
        };
        if tok == Tok::Var && bytes.get(i + 1).is_some_and(|c| c.is_ascii_alphanumeric()) {
            return Err(Error::parse(start, "the only variable is x (or z)"));
        }
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// Expression tree shared by the polynomial and power-series readings.
#[derive(Debug, Clone)]
enum Expr {
    Num(Integer),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
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

    fn expected(&self, what: &str) -> Error {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            t => format!("{t:?}"),
        };
        Error::parse(self.pos(), format!("expected {what}, found {found}"))
    }

    // expr := term (("+" | "-") term)*
    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // term := factor (("*" | "/") factor)*
    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // factor := ("-" | "+") factor | atom ("^" digits)?
    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                return Ok(Expr::Neg(Box::new(self.factor()?)));
            }
            Tok::Plus => {
                self.bump();
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.pos();
        match self.bump() {
            Tok::Num(n) => {
                let k = u32::try_from(&n)
                    .ok()
                    .filter(|k| *k <= MAX_EXPONENT)
                    .ok_or_else(|| Error::parse(at, format!("exponent above {MAX_EXPONENT}")))?;
                Ok(Expr::Pow(Box::new(base), k))
            }
            _ => Err(Error::parse(at, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Var => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.expected("')'"));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.expected("a number, x, or '('")),
        }
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.expected("an operator or end of input"));
    }
    Ok(e)
}

fn to_poly(e: &Expr) -> Result<Polynomial> {
    Ok(match e {
        Expr::Num(n) => Polynomial::constant(Rational::from_integer(n.clone())),
        Expr::Var => Polynomial::x(),
        Expr::Neg(a) => -to_poly(a)?,
        Expr::Add(a, b) => to_poly(a)? + to_poly(b)?,
        Expr::Sub(a, b) => to_poly(a)? - to_poly(b)?,
        Expr::Mul(a, b) => to_poly(a)? * to_poly(b)?,
        Expr::Pow(a, k) => to_poly(a)?.pow(*k),
        Expr::Div(a, b) => {
            let d = to_poly(b)?;
            match d.degree() {
                None => return Err(Error::DivisionByZero),
                Some(0) => to_poly(a)?.scale(&(Rational::from_integer(1.into()) / d.coeff(0))),
                Some(_) => {
                    return Err(Error::domain(
                        "division by a non-constant polynomial (use the series command)",
                    ))
                }
            }
        }
    })
}

fn to_series(e: &Expr) -> Result<PowerSeries> {
    Ok(match e {
        Expr::Num(n) => PowerSeries::constant(Rational::from_integer(n.clone())),
        Expr::Var => PowerSeries::from_poly(&Polynomial::x()),
        Expr::Neg(a) => to_series(a)?.neg(),
        Expr::Add(a, b) => to_series(a)?.add(&to_series(b)?),
        Expr::Sub(a, b) => to_series(a)?.sub(&to_series(b)?),
        Expr::Mul(a, b) => to_series(a)?.mul(&to_series(b)?),
        Expr::Pow(a, k) => {
            let base = to_series(a)?;
            (0..*k).fold(PowerSeries::one(), |acc, _| acc.mul(&base))
        }
        Expr::Div(a, b) => to_series(a)?.div(&to_series(b)?)?,
    })
}

/// Polynomial in `x` (`z` accepted as an alias).
///
/// Accepts sums of terms like `c`, `c*x`, `c*x^k`, `x^k` where `c` may be
/// `p/q`; duplicate powers are summed. Parentheses, products and powers of
/// subexpressions are also expanded, and division is allowed by nonzero
/// constants only.
pub fn parse_poly(text: &str) -> Result<Polynomial> {
    to_poly(&parse_expr(text)?)
}

/// The same expression syntax read as a power series, so division by any
/// series with an invertible leading part is allowed, e.g. `1 / (1 - x)`.
pub fn parse_series(text: &str) -> Result<PowerSeries> {
    to_series(&parse_expr(text)?)
}

struct Cursor<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.at..];
        self.at += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.at..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn error(&mut self, msg: &str) -> Error {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        };
        Error::parse(self.at, format!("{msg}, found {found}"))
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.at;
        let len = self.text[start..]
            .find(|c: char| !f(c))
            .unwrap_or(self.text.len() - start);
        self.at += len;
        &self.text[start..start + len]
    }

    fn element(&mut self) -> Result<Element> {
        match self.peek() {
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let start = self.at;
                self.eat('-');
                let digits = self.take_while(|c| c.is_ascii_digit());
                if digits.is_empty() {
                    return Err(self.error("expected digits"));
                }
                Ok(Element::Int(
                    self.text[start..self.at].parse().expect("integer literal"),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let word = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                Ok(Element::Str(word.to_string()))
            }
            Some('"') => {
                self.at += 1;
                let body = self.take_while(|c| c != '"');
                if !self.text[self.at..].starts_with('"') {
                    return Err(Error::parse(self.at, "unterminated string"));
                }
                self.at += 1;
                Ok(Element::Str(body.to_string()))
            }
            _ => Err(self.error("expected an integer, word, or quoted string")),
        }
    }

    fn pair(&mut self) -> Result<(Element, Element)> {
        self.expect('(')?;
        let a = self.element()?;
        self.expect(',')?;
        let b = self.element()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn braced<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect('{')?;
        let mut out = Vec::new();
        if self.eat('}') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat('}') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(self.error("expected end of input"));
        }
        Ok(())
    }
}

/// `{1, 2, a, "two words"}`.
pub fn parse_set(text: &str) -> Result<FiniteSet<Element>> {
    let mut c = Cursor { text, at: 0 };
    let items = c.braced(Cursor::element)?;
    c.finish()?;
    Ok(items.into_iter().collect())
}

/// `{(1,2), (2,3)} on {1,2,3}`.
pub fn parse_relation(text: &str) -> Result<Relation<Element>> {
    let mut c = Cursor { text, at: 0 };
    let pairs = c.braced(Cursor::pair)?;
    c.skip_ws();
    if !c.text[c.at..].starts_with("on") {
        return Err(c.error("expected 'on' followed by the domain"));
    }
    c.at += 2;
    let domain = c.braced(Cursor::element)?;
    c.finish()?;
    Relation::new(domain.into_iter().collect(), pairs.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn sequences() {
        assert_eq!(parse_sequence("0, 1, 4, 9").unwrap(), ints(&[0, 1, 4, 9]));
        assert_eq!(parse_sequence("1/2 3/2").unwrap(), vec![q(1, 2), q(3, 2)]);
        assert_eq!(parse_sequence("1,2\t3 ,4").unwrap(), ints(&[1, 2, 3, 4]));
        assert_eq!(parse_sequence("-2/4").unwrap(), vec![q(-1, 2)]);
        assert_eq!(parse_sequence("  ").unwrap(), vec![]);
        let err = parse_sequence("1, x").unwrap_err();
        assert_eq!(
            err,
            Error::parse(3, "malformed rational literal \"x\" (token 2)")
        );
        assert!(parse_sequence("1,,2").is_err());
        assert!(parse_sequence("1/0").is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            parse_poly("x^2").unwrap().coeffs(),
            ints(&[0, 0, 1]).as_slice()
        );
        assert_eq!(
            parse_poly("3*x^2 - 1/2*x + 4").unwrap().coeffs(),
            &[q(4, 1), q(-1, 2), q(3, 1)]
        );
        assert_eq!(
            parse_poly("x + x").unwrap().coeffs(),
            ints(&[0, 2]).as_slice()
        );
        assert_eq!(
            parse_poly("z^2 + 1").unwrap().coeffs(),
            ints(&[1, 0, 1]).as_slice()
        );
        assert_eq!(
            parse_poly("-x^2").unwrap().coeffs(),
            ints(&[0, 0, -1]).as_slice()
        );
        assert_eq!(
            parse_poly("(x+1)^2").unwrap().coeffs(),
            ints(&[1, 2, 1]).as_slice()
        );
        assert_eq!(parse_poly("x - x").unwrap(), Polynomial::zero());
        assert_eq!(parse_poly("0").unwrap(), Polynomial::zero());
        assert_eq!(parse_poly("x/2").unwrap().coeffs(), &[q(0, 1), q(1, 2)]);
    }

    #[test]
    fn polynomial_errors() {
        assert!(matches!(
            parse_poly("x^"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("3 x"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("y"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_poly("xx"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_poly("(x"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly(""),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(parse_poly("x^99999"), Err(Error::Parse { .. })));
        assert_eq!(parse_poly("1/0"), Err(Error::DivisionByZero));
        assert!(matches!(parse_poly("1/(1-x)"), Err(Error::Domain(_))));
    }

    #[test]
    fn series_quotients() {
        let g = parse_series("1 / (1 - x)").unwrap();
        assert_eq!(g.take(5), ints(&[1, 1, 1, 1, 1]));
        let s = parse_series("(1 + x)^2").unwrap();
        assert_eq!(s.take(4), ints(&[1, 2, 1, 0]));
        assert!(parse_series("1 / x").is_err());
    }

    #[test]
    fn sets_and_relations() {
        let s = parse_set("{3, 1, 2, 1}").unwrap();
        assert_eq!(s.to_string(), "{1, 2, 3}");
        let s = parse_set("{b, -4, \"a b\"}").unwrap();
        assert_eq!(s.to_string(), "{-4, \"a b\", b}");
        assert!(parse_set("{}").unwrap().is_empty());
        assert!(parse_set("{1 2}").is_err());
        assert!(parse_set("{1} x").is_err());

        let r = parse_relation("{(1,2), (2,3)} on {1,2,3}").unwrap();
        assert_eq!(r.to_string(), "{(1, 2), (2, 3)} on {1, 2, 3}");
        assert!(matches!(
            parse_relation("{(1,2)} on {1}"),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_relation("{(1,2)}"),
            Err(Error::Parse { .. })
        ));
        assert!(parse_relation("{} on {}").unwrap().pairs().is_empty());
    }
}
