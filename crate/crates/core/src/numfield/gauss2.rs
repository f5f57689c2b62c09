use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfield::Rational;

/// Element c0 + c1·i + c2·√2 + c3·i√2 of the degree-4 field Q(i, √2),
/// on the fixed basis {1, i, √2, i√2}.
///
/// Serializes as a 4-array of "p/q" strings in that basis order.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GaussSqrt2 {
    pub coords: [Rational; 4],
}

impl GaussSqrt2 {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        GaussSqrt2 { coords: [c0, c1, c2, c3] }
    }

    pub fn from_rational(c0: Rational) -> Self {
        GaussSqrt2::new(c0, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussSqrt2::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt2() -> Self {
        GaussSqrt2::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn i_sqrt2() -> Self {
        GaussSqrt2::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// Complex conjugation i ↦ −i (negates the i and i√2 coordinates).
    pub fn conj(&self) -> Self {
        GaussSqrt2::new(
            self.coords[0].clone(),
            -&self.coords[1],
            self.coords[2].clone(),
            -&self.coords[3],
        )
    }

    /// Galois conjugation √2 ↦ −√2.
    pub fn sqrt2_conj(&self) -> Self {
        GaussSqrt2::new(
            self.coords[0].clone(),
            self.coords[1].clone(),
            -&self.coords[2],
            -&self.coords[3],
        )
    }

    /// The coefficient of 1 in the fixed basis.
    pub fn real_rational_part(&self) -> Rational {
        self.coords[0].clone()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussSqrt2 {
            coords: [
                &self.coords[0] * c,
                &self.coords[1] * c,
                &self.coords[2] * c,
                &self.coords[3] * c,
            ],
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x · x̄ lies in Q(√2); multiplying by its √2-conjugate gives the
        // rational norm, so 1/x = x̄ · τ(x x̄) / N(x).
        let m = self.clone() * self.conj();
        let n = (m.clone() * m.sqrt2_conj()).real_rational_part();
        debug_assert!(!n.is_zero());
        let inv_n = n.recip()?;
        Ok((self.conj() * m.sqrt2_conj()).scale(&inv_n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.recip()?)
    }

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

impl Add for GaussSqrt2 {
    type Output = GaussSqrt2;
    fn add(self, rhs: GaussSqrt2) -> GaussSqrt2 {
        GaussSqrt2 {
            coords: [
                &self.coords[0] + &rhs.coords[0],
                &self.coords[1] + &rhs.coords[1],
                &self.coords[2] + &rhs.coords[2],
                &self.coords[3] + &rhs.coords[3],
            ],
        }
    }
}

impl Sub for GaussSqrt2 {
    type Output = GaussSqrt2;
    fn sub(self, rhs: GaussSqrt2) -> GaussSqrt2 {
        GaussSqrt2 {
            coords: [
                &self.coords[0] - &rhs.coords[0],
                &self.coords[1] - &rhs.coords[1],
                &self.coords[2] - &rhs.coords[2],
                &self.coords[3] - &rhs.coords[3],
            ],
        }
    }
}

impl Mul for GaussSqrt2 {
    type Output = GaussSqrt2;
    fn mul(self, rhs: GaussSqrt2) -> GaussSqrt2 {
        // basis products: i² = −1, (√2)² = 2, i·√2 = i√2, (i√2)² = −2
        let [a0, a1, a2, a3] = &self.coords;
        let [b0, b1, b2, b3] = &rhs.coords;
        let two = Rational::from_int(2);
        let c0 = &(&(a0 * b0) - &(a1 * b1)) + &(&two * &(&(a2 * b2) - &(a3 * b3)));
        let c1 = &(&(a0 * b1) + &(a1 * b0)) + &(&two * &(&(a2 * b3) + &(a3 * b2)));
        let c2 = &(&(a0 * b2) + &(a2 * b0)) - &(&(a1 * b3) + &(a3 * b1));
        let c3 = &(&(a0 * b3) + &(a3 * b0)) + &(&(a1 * b2) + &(a2 * b1));
        GaussSqrt2::new(c0, c1, c2, c3)
    }
}

impl Neg for GaussSqrt2 {
    type Output = GaussSqrt2;
    fn neg(self) -> GaussSqrt2 {
        GaussSqrt2 {
            coords: [-self.coords[0].clone(), -self.coords[1].clone(), -self.coords[2].clone(), -self.coords[3].clone()],
        }
    }
}

impl fmt::Display for GaussSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SYM: [&str; 4] = ["", "i", "sqrt(2)", "i*sqrt(2)"];
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", SYM[k])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
