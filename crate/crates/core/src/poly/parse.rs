//! Formula parser for polynomial and rational-function expressions written
//! the way they are typeset: `a^2bd + 3/2[bd((a-c)^2 + (a-e)^2)] - 12bcde`.
//!
//! Juxtaposition multiplies, `/` divides (left to right at the same level as
//! `*`), `^` takes a nonnegative integer exponent, and `(...)` and `[...]`
//! group. Lowercase letters are the polynomial variables; uppercase letters
//! (and `ℓ`, read as `L`) refer to caller-supplied [`Bindings`].

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RatFn, Var};
use crate::rational::Rational;

pub type Bindings = HashMap<char, RatFn>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Bound(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open(char),
    Close(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, msg: String| Error::Syntax {
        line: 1,
        column: col + 1,
        message: msg,
    };
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Num(digits.parse().expect("ascii digits")), start));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' | '[' => Tok::Open(c),
            ')' | ']' => Tok::Close(c),
            'ℓ' => Tok::Bound('L'),
            _ if c.is_ascii_uppercase() => Tok::Bound(c),
            _ if c.is_ascii_lowercase() => {
                Tok::Var(Var::from_char(c).map_err(|_| err(i, format!("unknown variable `{c}`")))?)
            }
            _ => return Err(err(i, format!("unexpected character `{c}`"))),
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    bindings: &'a Bindings,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, c)| c + 1)
            .unwrap_or(self.len + 1)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: 1,
            column: self.column(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<RatFn> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFn> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let divisor = self.factor()?;
                    acc = acc.checked_div(&divisor)?;
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Bound(_) | Tok::Open(_)) => {
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(if negate { -&acc } else { acc })
    }

    fn factor(&mut self) -> Result<RatFn> {
        let base = self.atom()?;
        let mut result = base;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp = match self.peek() {
                Some(Tok::Num(n)) => u32::try_from(n.clone()).map_err(|_| self.error("exponent too large"))?,
                _ => return Err(self.error("expected integer exponent")),
            };
            self.pos += 1;
            let mut power = RatFn::constant(Rational::from_integer(1.into()));
            for _ in 0..exp {
                power = &power * &result;
            }
            result = power;
        }
        Ok(result)
    }

    fn atom(&mut self) -> Result<RatFn> {
        let tok = self.peek().cloned().ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(RatFn::constant(Rational::from_integer(n))),
            Tok::Var(v) => Ok(RatFn::from(Polynomial::var(v))),
            Tok::Bound(name) => self
                .bindings
                .get(&name)
                .cloned()
                .ok_or_else(|| Error::UnknownName(name.to_string())),
            Tok::Open(open) => {
                let inner = self.expr()?;
                let close = if open == '(' { ')' } else { ']' };
                match self.peek() {
                    Some(Tok::Close(c)) if *c == close => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.error(format!("expected `{close}`"))),
                }
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a number, variable or `(`"))
            }
        }
    }
}

pub fn parse_ratfn(src: &str, bindings: &Bindings) -> Result<RatFn> {
    let mut parser = Parser {
        tokens: lex(src)?,
        pos: 0,
        bindings,
        len: src.chars().count(),
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

pub fn parse_polynomial(src: &str) -> Result<Polynomial> {
    parse_ratfn(src, &Bindings::new())?
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(src.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use std::collections::BTreeMap;

    fn at(pairs: &[(char, i64)]) -> BTreeMap<char, Rational> {
        pairs.iter().map(|&(c, v)| (c, int(v))).collect()
    }

    #[test]
    fn implicit_products_and_powers() {
        let p = parse_polynomial("a^2bd").unwrap();
        assert_eq!(p.evaluate_at(&at(&[('a', 3), ('b', 2), ('d', 5)])), int(90));
        let q = parse_polynomial("2bcd f").unwrap();
        assert_eq!(q, parse_polynomial("2*b*c*d*f").unwrap());
    }

    #[test]
    fn fractional_coefficients_bind_left_to_right() {
        let p = parse_polynomial("3/2[a - b]").unwrap();
        assert_eq!(p.evaluate_at(&at(&[('a', 4), ('b', 2)])), int(3));
    }

    #[test]
    fn bindings_and_division() {
        let mut b = Bindings::new();
        b.insert('L', parse_ratfn("a+b+c", &Bindings::new()).unwrap());
        let tau = parse_ratfn("ℓ/12 - abc/(6(ab+ac+bc))", &b).unwrap();
        assert_eq!(
            tau.evaluate_at(&at(&[('a', 1), ('b', 1), ('c', 1)])).unwrap(),
            frac(7, 36)
        );
        assert!(parse_ratfn("X + a", &b).is_err());
    }

    #[test]
    fn leading_unary_minus() {
        let p = parse_polynomial("(-2(b+c)de+6bc(d+e))").unwrap();
        assert_eq!(
            p,
            parse_polynomial("6bcd + 6bce - 2bde - 2cde").unwrap()
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for src in ["a +", "(a + b", "a^b", "a ] b", "a $ b", "1/0", "[a + b)"] {
            assert!(parse_ratfn(src, &Bindings::new()).is_err(), "{src}");
        }
        assert!(matches!(
            parse_polynomial("1/a"),
            Err(Error::NotPolynomial(_))
        ));
    }
}
