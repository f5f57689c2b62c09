use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numfield::Rational;

/// Element a + b√5 of the real quadratic field Q(√5).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuadExt5 {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt5 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt5 { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        QuadExt5 { a: Rational::zero(), b: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate √5 ↦ −√5.
    pub fn conj(&self) -> Self {
        QuadExt5 { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm a² − 5b², a rational.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rational::from_int(5))
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            // a² = 5b² has no nonzero rational solutions, so this is the zero element
            return Err(Error::DivisionByZero);
        }
        let inv = n.recip()?;
        Ok(QuadExt5 {
            a: &self.a * &inv,
            b: -&(&self.b * &inv),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.recip()?)
    }

    /// Integer power by repeated squaring; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        Ok(result)
    }
}

impl Add for QuadExt5 {
    type Output = QuadExt5;
    fn add(self, rhs: QuadExt5) -> QuadExt5 {
        QuadExt5 { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for QuadExt5 {
    type Output = QuadExt5;
    fn sub(self, rhs: QuadExt5) -> QuadExt5 {
        QuadExt5 { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Mul for QuadExt5 {
    type Output = QuadExt5;
    fn mul(self, rhs: QuadExt5) -> QuadExt5 {
        // (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
        let five = Rational::from_int(5);
        QuadExt5 {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &five),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Neg for QuadExt5 {
    type Output = QuadExt5;
    fn neg(self) -> QuadExt5 {
        QuadExt5 { a: -self.a, b: -self.b }
    }
}

impl fmt::Display for QuadExt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt(5)", self.b)
        } else {
            write!(f, "{} + {}*sqrt(5)", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(n: i64) -> Rational {
        Rational::new(n, 2).unwrap()
    }

    /// (5 ± √5)/2
    fn golden(sign: i64) -> QuadExt5 {
        QuadExt5::new(half(5), half(sign))
    }

    #[test]
    fn product_of_conjugate_pair() {
        // ((5+√5)/2)((5−√5)/2) = (25−5)/4 = 5
        assert_eq!(golden(1) * golden(-1), QuadExt5::from_int(5));
    }

    #[test]
    fn sqrt5_squares_to_5() {
        assert_eq!(QuadExt5::sqrt5().pow(2).unwrap(), QuadExt5::from_int(5));
    }

    #[test]
    fn sum_of_squares_is_15() {
        // hand oracle: ((5+√5)/2)² = (30+10√5)/4, ((5−√5)/2)² = (30−10√5)/4
        let lhs = golden(1).pow(2).unwrap() + golden(-1).pow(2).unwrap();
        assert_eq!(lhs, QuadExt5::from_int(15));
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(QuadExt5::one().checked_div(&QuadExt5::zero()).is_err());
        assert!(QuadExt5::zero().pow(-2).is_err());
    }
}
