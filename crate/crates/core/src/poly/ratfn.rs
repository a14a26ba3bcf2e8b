use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// A quotient of polynomials with nonzero denominator. Not reduced; equality
/// is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: Polynomial,
    den: Polynomial,
}

impl RatFn {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero(num.to_string()));
        }
        Ok(RatFn { num, den }.tidy())
    }

    pub fn constant(c: Rational) -> RatFn {
        RatFn::from(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// Moves a constant denominator into the numerator.
    fn tidy(self) -> RatFn {
        match self.den.as_constant() {
            Some(c) if !c.is_one() => RatFn {
                num: self.num.scale(&(Rational::one() / c)),
                den: Polynomial::one(),
            },
            _ => self,
        }
    }

    /// The quotient as a polynomial, if the denominator divides the numerator.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        match self.den.as_constant() {
            Some(c) => Some(self.num.scale(&(Rational::one() / c))),
            None => self.num.exact_div(&self.den),
        }
    }

    pub fn checked_div(&self, rhs: &RatFn) -> Result<RatFn> {
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZero(rhs.den.to_string()));
        }
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &Rational) -> RatFn {
        RatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `num(self) * den(other) - num(other) * den(self)`: zero exactly when
    /// the two functions agree.
    pub fn cleared_difference(&self, other: &RatFn) -> Polynomial {
        &(&self.num * &other.den) - &(&other.num * &self.den)
    }

    pub fn identical(&self, other: &RatFn) -> bool {
        self.cleared_difference(other).is_zero()
    }

    pub fn evaluate_at(&self, point: &BTreeMap<char, Rational>) -> Result<Rational> {
        let den = self.den.evaluate_at(point);
        if den.is_zero() {
            return Err(Error::DivisionByZero(self.den.to_string()));
        }
        Ok(self.num.evaluate_at(point) / den)
    }
}

impl From<Polynomial> for RatFn {
    fn from(p: Polynomial) -> RatFn {
        RatFn {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl Add<&RatFn> for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RatFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RatFn> for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul<&RatFn> for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .tidy()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_ratfn;
    use crate::rational::{frac, int};

    #[test]
    fn equality_by_cross_multiplication() {
        let lhs = parse_ratfn("1/a + 1/b", &Default::default()).unwrap();
        let rhs = parse_ratfn("(a+b)/(ab)", &Default::default()).unwrap();
        assert!(lhs.identical(&rhs));
        let other = parse_ratfn("(a+b)/(2ab)", &Default::default()).unwrap();
        assert!(!lhs.identical(&other));
    }

    #[test]
    fn evaluation_rejects_zero_denominator() {
        let f = parse_ratfn("ab/(a+b)", &Default::default()).unwrap();
        let mut pt = BTreeMap::new();
        pt.insert('a', int(1));
        pt.insert('b', int(3));
        assert_eq!(f.evaluate_at(&pt).unwrap(), frac(3, 4));
        pt.insert('a', int(0));
        pt.insert('b', int(0));
        assert!(matches!(f.evaluate_at(&pt), Err(Error::DivisionByZero(_))));
    }
}
