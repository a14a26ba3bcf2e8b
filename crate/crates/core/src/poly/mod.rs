//! Sparse multivariate polynomials over the rationals in the fixed variables
//! `a b c d e f k m n`, rational functions built from them, and a small
//! formula parser.

mod parse;
mod ratfn;
pub mod registry;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

pub use parse::{parse_polynomial, parse_ratfn, Bindings};
pub use ratfn::RatFn;

pub const VARIABLE_COUNT: usize = 9;
pub const VARIABLE_NAMES: [char; VARIABLE_COUNT] = ['a', 'b', 'c', 'd', 'e', 'f', 'k', 'm', 'n'];

/// One of the nine polynomial variables, by position in [`VARIABLE_NAMES`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    pub fn from_char(c: char) -> Result<Var> {
        VARIABLE_NAMES
            .iter()
            .position(|&v| v == c)
            .map(|i| Var(i as u8))
            .ok_or_else(|| Error::UnknownVariable(c.to_string()))
    }

    pub fn name(self) -> char {
        VARIABLE_NAMES[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Exponent vector; lexicographic order with `a` most significant.
pub type Monomial = [u8; VARIABLE_COUNT];

/// Canonical sparse polynomial: no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term([0; VARIABLE_COUNT], c);
        p
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; VARIABLE_COUNT];
        m[v.index()] = 1;
        let mut p = Polynomial::zero();
        p.add_term(m, Rational::one());
        p
    }

    /// Polynomial for a single variable name such as `'c'`.
    pub fn named_var(c: char) -> Result<Self> {
        Var::from_char(c).map(Polynomial::var)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; VARIABLE_COUNT]).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| u32::from(e)).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// First monomial with a negative coefficient.
    pub fn first_negative(&self) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(m, c)| (*m, c.clone()))
    }

    /// Replaces every occurrence of `v` by `replacement`.
    pub fn substitute(&self, v: Var, replacement: &Polynomial) -> Polynomial {
        let mut powers: Vec<Polynomial> = vec![Polynomial::one()];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m[v.index()] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * replacement;
                powers.push(next);
            }
            let mut rest = *m;
            rest[v.index()] = 0;
            let mut base = Polynomial::zero();
            base.add_term(rest, c.clone());
            out = out + &base * &powers[e];
        }
        out
    }

    /// Substitutes several variables at once (replacements are not rewritten).
    pub fn substitute_all(&self, subs: &[(Var, Polynomial)]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::zero();
            let mut rest = *m;
            for (v, _) in subs {
                rest[v.index()] = 0;
            }
            term.add_term(rest, c.clone());
            for (v, p) in subs {
                term = &term * &p.pow(u32::from(m[v.index()]));
            }
            out = out + term;
        }
        out
    }

    /// Evaluates with `value(var)` for each variable that occurs.
    pub fn evaluate(&self, value: impl Fn(Var) -> Rational) -> Rational {
        let values: Vec<Rational> = (0..VARIABLE_COUNT as u8).map(|i| value(Var(i))).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term *= &values[i];
                }
            }
            total += term;
        }
        total
    }

    /// Evaluates from a `(name, value)` map; absent variables are zero.
    pub fn evaluate_at(&self, point: &BTreeMap<char, Rational>) -> Rational {
        self.evaluate(|v| point.get(&v.name()).cloned().unwrap_or_else(Rational::zero))
    }

    /// `self / divisor` when the division is exact. Long division by the
    /// lexicographically leading term; for a single divisor the remainder
    /// is zero exactly when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lead_m, lead_c) = divisor.terms.iter().next_back()?;
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some((m, c)) = rest.terms.iter().next_back() {
            let mut q = [0u8; VARIABLE_COUNT];
            for i in 0..VARIABLE_COUNT {
                q[i] = m[i].checked_sub(lead_m[i])?;
            }
            let mut step = Polynomial::zero();
            step.add_term(q, c / lead_c);
            rest = rest - &step * divisor;
            quotient = quotient + step;
        }
        Some(quotient)
    }

    pub fn sum_of_coefficients(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

pub fn format_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => s.push(VARIABLE_NAMES[i]),
            _ => {
                s.push(VARIABLE_NAMES[i]);
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let magnitude = c.abs();
            let constant = m.iter().all(|&e| e == 0);
            if constant {
                write!(f, "{}", magnitude)?;
            } else if magnitude.is_one() {
                write!(f, "{}", format_monomial(m))?;
            } else if magnitude.is_integer() {
                write!(f, "{}{}", magnitude, format_monomial(m))?;
            } else {
                write!(f, "({}){}", format_rational(&magnitude), format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.clone() + rhs.clone()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.clone() - rhs.clone()
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m = *m1;
                for i in 0..VARIABLE_COUNT {
                    m[i] += m2[i];
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn square_of_sum() {
        let diff = p("(a+b)^2") - p("a^2 + 2ab + b^2");
        assert!(diff.is_zero());
    }

    #[test]
    fn substitute_shift() {
        let a = Var::from_char('a').unwrap();
        let result = p("a - f").substitute(a, &p("f + k"));
        assert_eq!(result, p("k"));
    }

    #[test]
    fn simultaneous_substitution_does_not_chain() {
        let a = Var::from_char('a').unwrap();
        let b = Var::from_char('b').unwrap();
        let swapped = p("a^2 b").substitute_all(&[(a, p("b")), (b, p("a"))]);
        assert_eq!(swapped, p("b^2 a"));
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let q = p("ab - ba + 0c");
        assert!(q.is_zero());
        assert_eq!(q.term_count(), 0);
        assert_eq!(p("3/2 a - 1/2 a"), p("a"));
    }

    #[test]
    fn unknown_variable() {
        assert!(matches!(Var::from_char('z'), Err(Error::UnknownVariable(_))));
        assert!(parse_polynomial("a + z").is_err());
    }

    #[test]
    fn evaluation_and_degree() {
        let q = p("a^2bd - 3/4 c + 2");
        assert_eq!(q.degree(), 4);
        let mut pt = BTreeMap::new();
        pt.insert('a', int(2));
        pt.insert('b', int(3));
        pt.insert('c', int(4));
        pt.insert('d', frac(1, 2));
        assert_eq!(q.evaluate_at(&pt), int(6 - 3 + 2));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("a^2 - b^2").exact_div(&p("a + b")), Some(p("a - b")));
        assert_eq!(p("a^2 + b^2").exact_div(&p("a + b")), None);
        assert_eq!(p("0").exact_div(&p("c")), Some(Polynomial::zero()));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p("2a^2b - c + 1/2").to_string(), "2a^2b - c + 1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
