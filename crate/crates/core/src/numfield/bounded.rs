use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint, Sign as IntSign};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numfield::{QuadExt5, Rational};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Outward multiplier applied to every error-bound computation, so the f64
/// error arithmetic itself can never round the bound below the true worst case.
fn up(e: f64) -> f64 {
    let widened = e * (1.0 + 8.0 * f64::EPSILON);
    if widened > 0.0 && widened < f64::MIN_POSITIVE {
        f64::MIN_POSITIVE
    } else {
        widened
    }
}

fn pow2(e: i64) -> f64 {
    if e < -1070 {
        // underflow clamp keeps the bound an overestimate
        5e-324
    } else if e > 1020 {
        f64::INFINITY
    } else {
        (e as f64).exp2()
    }
}

/// High-precision float paired with a conservatively tracked absolute error.
///
/// The value is rounded to nearest; only the error term is rounded outward.
#[derive(Clone, Debug)]
pub struct BoundedFloat {
    value: BigFloat,
    absolute_error: f64,
    precision_bits: usize,
}

impl BoundedFloat {
    pub fn value(&self) -> &BigFloat {
        &self.value
    }

    pub fn absolute_error(&self) -> f64 {
        self.absolute_error
    }

    pub fn precision_bits(&self) -> usize {
        self.precision_bits
    }

    fn ulp(&self) -> f64 {
        match self.value.exponent() {
            Some(e) => {
                if self.value.is_zero() {
                    0.0
                } else {
                    pow2(e as i64 - self.precision_bits as i64)
                }
            }
            None => f64::INFINITY,
        }
    }

    /// Upper bound on |value| as f64 (within a factor of two).
    fn magnitude_ub(&self) -> f64 {
        if self.value.is_zero() {
            return 0.0;
        }
        match self.value.exponent() {
            Some(e) => pow2(e as i64),
            None => f64::INFINITY,
        }
    }

    /// Lower bound on |value| as f64.
    fn magnitude_lb(&self) -> f64 {
        if self.value.is_zero() {
            return 0.0;
        }
        match self.value.exponent() {
            Some(e) => pow2(e as i64 - 1),
            None => 0.0,
        }
    }

    pub fn zero(precision_bits: usize) -> Self {
        BoundedFloat {
            value: BigFloat::from_i8(0, precision_bits),
            absolute_error: 0.0,
            precision_bits,
        }
    }

    pub fn from_bigint(n: &BigInt, precision_bits: usize) -> Self {
        let value = CONSTS.with(|cc| {
            BigFloat::parse(
                &n.to_string(),
                astro_float::Radix::Dec,
                precision_bits,
                RM,
                &mut cc.borrow_mut(),
            )
        });
        let mut out = BoundedFloat { value, absolute_error: 0.0, precision_bits };
        if n.bits() as usize > precision_bits {
            out.absolute_error = up(2.0 * out.ulp());
        }
        out
    }

    pub fn from_rational(r: &Rational, precision_bits: usize) -> Self {
        if r.is_zero() {
            return Self::zero(precision_bits);
        }
        let num = Self::from_bigint(r.numer(), precision_bits);
        let den = Self::from_bigint(r.denom(), precision_bits);
        // exact when the denominator is a power of two and the numerator fits
        let den_uint = r.denom().magnitude();
        let exact = num.absolute_error == 0.0
            && den_uint == &(BigUint::from(1u8) << (den_uint.trailing_zeros().unwrap_or(0)));
        let value = num.value.div(&den.value, precision_bits, RM);
        let mut out = BoundedFloat { value, absolute_error: 0.0, precision_bits };
        if !exact {
            out.absolute_error = up(4.0 * out.ulp());
        }
        out
    }

    pub fn pi(precision_bits: usize) -> Self {
        let value = CONSTS.with(|cc| cc.borrow_mut().pi(precision_bits, RM));
        let mut out = BoundedFloat { value, absolute_error: 0.0, precision_bits };
        out.absolute_error = up(out.ulp());
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.precision_bits.max(rhs.precision_bits);
        let value = self.value.add(&rhs.value, p, RM);
        let mut out = BoundedFloat { value, absolute_error: 0.0, precision_bits: p };
        out.absolute_error = up(self.absolute_error + rhs.absolute_error + out.ulp());
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.precision_bits.max(rhs.precision_bits);
        let value = self.value.sub(&rhs.value, p, RM);
        let mut out = BoundedFloat { value, absolute_error: 0.0, precision_bits: p };
        out.absolute_error = up(self.absolute_error + rhs.absolute_error + out.ulp());
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.precision_bits.max(rhs.precision_bits);
        let value = self.value.mul(&rhs.value, p, RM);
        let mut out = BoundedFloat { value, absolute_error: 0.0, precision_bits: p };
        out.absolute_error = up(self.magnitude_ub() * rhs.absolute_error
            + rhs.magnitude_ub() * self.absolute_error
            + self.absolute_error * rhs.absolute_error
            + out.ulp());
        out
    }

    pub fn neg(&self) -> Self {
        BoundedFloat {
            value: self.value.neg(),
            absolute_error: self.absolute_error,
            precision_bits: self.precision_bits,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        let lb = self.magnitude_lb();
        if self.value.is_zero() || self.absolute_error >= lb {
            return Err(Error::DivisionByZero);
        }
        let value = self.value.reciprocal(self.precision_bits, RM);
        let mut out = BoundedFloat {
            value,
            absolute_error: 0.0,
            precision_bits: self.precision_bits,
        };
        // |1/x − 1/x̃| ≤ e / (|x̃|(|x̃| − e))
        out.absolute_error =
            up(self.absolute_error / (lb * (lb - self.absolute_error)) + out.ulp());
        Ok(out)
    }

    /// Integer power by repeated squaring; negative exponents require a value
    /// bounded away from zero by more than the tracked error.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.powi(-exp);
        }
        let mut result = {
            let mut one = Self::zero(self.precision_bits);
            one.value = BigFloat::from_i8(1, self.precision_bits);
            one
        };
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base.clone());
            e >>= 1;
        }
        Ok(result)
    }

    /// sin(π r) for rational r, reduced exactly by periodicity and symmetry to
    /// an argument in [0, π/2] before the series evaluation.
    pub fn sin_pi(r: &Rational, precision_bits: usize) -> Self {
        let two = Rational::from_int(2);
        let mut t = r.clone();
        // t ← r mod 2, in [0, 2)
        let q = (t.numer() * two.denom()).div_floor(&(t.denom() * &BigInt::from(2)));
        t -= &(&two * &Rational::from_int(q));
        let mut sign = 1;
        if t >= Rational::one() {
            sign = -1;
            t -= &Rational::one();
        }
        let half = Rational::new(1, 2).unwrap();
        if t > half {
            t = &Rational::one() - &t;
        }
        if t.is_zero() {
            return Self::zero(precision_bits);
        }
        let result = if t == half {
            let mut one = Self::zero(precision_bits);
            one.value = BigFloat::from_i8(1, precision_bits);
            one
        } else {
            let x = Self::pi(precision_bits).mul(&Self::from_rational(&t, precision_bits));
            let value = CONSTS
                .with(|cc| x.value.sin(precision_bits, RM, &mut cc.borrow_mut()));
            let mut out = BoundedFloat { value, absolute_error: 0.0, precision_bits };
            // |sin'| ≤ 1 carries the argument error through unchanged
            out.absolute_error = up(x.absolute_error + out.ulp());
            out
        };
        if sign < 0 { result.neg() } else { result }
    }

    /// Evaluates a + b√5 with a tracked bound.
    pub fn from_quad5(x: &QuadExt5, precision_bits: usize) -> Self {
        let a = Self::from_rational(&x.a, precision_bits);
        if x.b.is_zero() {
            return a;
        }
        let five = BigFloat::from_i8(5, precision_bits);
        let sqrt5 = five.sqrt(precision_bits, RM);
        let mut s5 = BoundedFloat { value: sqrt5, absolute_error: 0.0, precision_bits };
        s5.absolute_error = up(s5.ulp());
        a.add(&Self::from_rational(&x.b, precision_bits).mul(&s5))
    }

    /// Nearest integer together with a bound on |value − integer| that
    /// includes the tracked error.
    pub fn to_nearest_integer(&self) -> (BigInt, f64) {
        let n = self.round_to_bigint();
        let diff = self.sub(&Self::from_bigint(&n, self.precision_bits));
        let residual = up(diff.magnitude_ub() + diff.absolute_error);
        (n, residual)
    }

    fn round_to_bigint(&self) -> BigInt {
        let Some((words, _, sign, exp, _)) = self.value.as_raw_parts() else {
            return BigInt::zero();
        };
        if self.value.is_zero() {
            return BigInt::zero();
        }
        // mantissa words are little-endian; value = m · 2^(exp − total_bits)
        let mut bytes = Vec::with_capacity(words.len() * 8);
        for w in words {
            bytes.extend_from_slice(&w.to_le_bytes());
        }
        let m = BigUint::from_bytes_le(&bytes);
        let total_bits = (words.len() * astro_float::WORD_BIT_SIZE) as i64;
        let shift = exp as i64 - total_bits;
        let mag = if shift >= 0 {
            m << (shift as usize)
        } else {
            let k = (-shift) as usize;
            if k > words.len() * astro_float::WORD_BIT_SIZE + 1 {
                BigUint::zero()
            } else {
                (m + (BigUint::from(1u8) << (k - 1))) >> k
            }
        };
        let int_sign = if sign == Sign::Neg { IntSign::Minus } else { IntSign::Plus };
        BigInt::from_biguint(int_sign, mag)
    }

    /// |self| ≤ |rhs's bound|: true when the two values agree within the sum of
    /// their tracked errors.
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        let diff = self.sub(rhs);
        // the difference bound already folds in both operands' errors
        diff.magnitude_lb() <= diff.absolute_error
            || diff.value.is_zero()
    }

    /// f64 approximation of the value (for reporting only).
    pub fn approx_f64(&self) -> f64 {
        if self.value.is_zero() {
            return 0.0;
        }
        let Some((words, _, sign, exp, _)) = self.value.as_raw_parts() else {
            return f64::NAN;
        };
        let top = *words.last().unwrap_or(&0);
        let frac = top as f64 / (u64::MAX as f64 + 1.0);
        let mag = frac * pow2(exp as i64);
        if sign == Sign::Neg { -mag } else { mag }
    }
}

impl fmt::Display for BoundedFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ± {:e} ({} bits)",
            self.approx_f64(),
            self.absolute_error,
            self.precision_bits
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn zero_and_small_integers_are_exact() {
        let z = BoundedFloat::from_rational(&Rational::zero(), 64);
        assert_eq!(z.absolute_error, 0.0);
        let five = BoundedFloat::from_rational(&Rational::from_int(5), 64);
        assert_eq!(five.absolute_error, 0.0);
        let (n, res) = five.to_nearest_integer();
        assert_eq!(n, BigInt::from(5));
        assert_eq!(res, 0.0);
    }

    #[test]
    fn round_trip_large_integer() {
        let big = (BigInt::one() << 100) + 1;
        let x = BoundedFloat::from_bigint(&big, 256);
        let (n, res) = x.to_nearest_integer();
        assert_eq!(n, big);
        assert!(res < 1e-9);
    }

    #[test]
    fn sin_pi_fifth_matches_quadratic_closed_form() {
        // sin²(π/5) = (5 − √5)/8 at 64 bits, error below 2^−60
        let s = BoundedFloat::sin_pi(&Rational::new(1, 5).unwrap(), 64);
        let lhs = s.mul(&s);
        let rhs = BoundedFloat::from_quad5(
            &QuadExt5::new(Rational::new(5, 8).unwrap(), Rational::new(-1, 8).unwrap()),
            64,
        );
        assert!(lhs.agrees_with(&rhs));
        assert!(lhs.absolute_error < 2f64.powi(-55));
        assert!((lhs.approx_f64() - 0.3454915).abs() < 1e-6);
    }

    #[test]
    fn sin_pi_special_points() {
        let z = BoundedFloat::sin_pi(&Rational::from_int(3), 64);
        assert_eq!(z.absolute_error, 0.0);
        assert!(z.value.is_zero());
        let one = BoundedFloat::sin_pi(&Rational::new(5, 2).unwrap(), 64);
        let (n, res) = one.to_nearest_integer();
        assert_eq!(n, BigInt::one());
        assert_eq!(res, 0.0);
    }

    #[test]
    fn negative_power_applies_reciprocal() {
        let x = BoundedFloat::from_rational(&Rational::new(1, 4).unwrap(), 128);
        let y = x.powi(-2).unwrap();
        let (n, res) = y.to_nearest_integer();
        assert_eq!(n, BigInt::from(16));
        assert!(res < 1e-20);
    }

    #[test]
    fn error_bound_covers_true_error_for_random_rationals() {
        // deterministic LCG; 1000 rationals
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..1000 {
            let n = (next() % 2_000_001) as i64 - 1_000_000;
            let d = (next() % 999_983) as i64 + 1;
            let r = Rational::new(n, d).unwrap();
            let x = BoundedFloat::from_rational(&r, 64);
            // compare against the same rational at much higher precision
            let hi = BoundedFloat::from_rational(&r, 512);
            let diff = x.sub(&hi);
            assert!(
                diff.magnitude_ub() <= x.absolute_error + 1e-300 || diff.value.is_zero(),
                "error bound violated for {r}"
            );
        }
    }
}
