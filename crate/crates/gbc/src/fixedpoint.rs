//! Dyadic fixed-point reals for the one operation that leaves the
//! rationals: raising a positive rational to a rational power.
//!
//! A [`FixedPoint`] is `mantissa / 2^frac_bits` with a `BigInt` mantissa,
//! so every value is itself an exact rational and error analysis reduces
//! to counting rounding steps. On top of it:
//!
//! - [`ln`]: natural log of a positive rational, by power-of-two range
//!   reduction to `[3/4, 3/2)` and the atanh series
//!   `ln s = 2 (t + t^3/3 + t^5/5 + ...)`, `t = (s-1)/(s+1)`
//! - [`exp`]: argument halving, Taylor series, repeated squaring
//! - [`pow`]: `exp(e ln b)`, computed with 64 guard bits and rounded
//!   back to the requested precision
//!
//! Callers compare results against exact rationals via
//! [`FixedPoint::to_rational`], which is lossless.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::numeric::{rat_pow, rational, Rat};

const GUARD_BITS: u32 = 64;

/// A dyadic rational `mantissa / 2^frac_bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    mantissa: BigInt,
    frac_bits: u32,
}

/// Rounds n / d to the nearest integer, halves upward. `d > 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    ((n << 1u32) + d).div_floor(&(d << 1u32))
}

impl FixedPoint {
    pub fn zero(frac_bits: u32) -> Self {
        FixedPoint {
            mantissa: BigInt::zero(),
            frac_bits,
        }
    }

    pub fn one(frac_bits: u32) -> Self {
        FixedPoint {
            mantissa: BigInt::one() << frac_bits,
            frac_bits,
        }
    }

    /// Nearest fixed-point value to the rational `r`.
    pub fn from_rational(r: &Rat, frac_bits: u32) -> Self {
        FixedPoint {
            mantissa: round_div(&(r.numer() << frac_bits), r.denom()),
            frac_bits,
        }
    }

    /// The exact rational value. Lossless.
    pub fn to_rational(&self) -> Rat {
        Rat::new(self.mantissa.clone(), BigInt::one() << self.frac_bits)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// Rounds to a coarser precision (or re-scales to a finer one exactly).
    pub fn round_to(&self, frac_bits: u32) -> FixedPoint {
        if frac_bits >= self.frac_bits {
            FixedPoint {
                mantissa: &self.mantissa << (frac_bits - self.frac_bits),
                frac_bits,
            }
        } else {
            let drop = self.frac_bits - frac_bits;
            FixedPoint {
                mantissa: round_div(&self.mantissa, &(BigInt::one() << drop)),
                frac_bits,
            }
        }
    }

    fn add(&self, other: &FixedPoint) -> FixedPoint {
        debug_assert_eq!(self.frac_bits, other.frac_bits);
        FixedPoint {
            mantissa: &self.mantissa + &other.mantissa,
            frac_bits: self.frac_bits,
        }
    }

    fn mul(&self, other: &FixedPoint) -> FixedPoint {
        debug_assert_eq!(self.frac_bits, other.frac_bits);
        FixedPoint {
            mantissa: round_div(
                &(&self.mantissa * &other.mantissa),
                &(BigInt::one() << self.frac_bits),
            ),
            frac_bits: self.frac_bits,
        }
    }

    fn div_int(&self, d: u64) -> FixedPoint {
        FixedPoint {
            mantissa: round_div(&self.mantissa, &BigInt::from(d)),
            frac_bits: self.frac_bits,
        }
    }

    /// Halves `shift` times, exactly in value (the mantissa is rounded).
    fn shr(&self, shift: u32) -> FixedPoint {
        FixedPoint {
            mantissa: round_div(&self.mantissa, &(BigInt::one() << shift)),
            frac_bits: self.frac_bits,
        }
    }

    /// Decimal rendering with `digits` fractional digits, truncated
    /// toward zero.
    pub fn decimal_string(&self, digits: usize) -> String {
        let r = self.to_rational();
        let neg = r.is_negative();
        let abs = r.abs();
        let int_part = abs.numer() / abs.denom();
        let frac = &abs - Rat::from_integer(int_part.clone());
        let scaled = frac.numer() * BigInt::from(10u32).pow(digits as u32) / frac.denom();
        let frac_digits = format!("{:0>width$}", scaled.to_string(), width = digits);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_digits}")
        }
    }
}

/// `ln 2` to the requested precision, as `2 atanh(1/3)`.
pub fn ln2(frac_bits: u32) -> FixedPoint {
    atanh_series(&rational(1, 3), frac_bits + GUARD_BITS)
        .round_to(frac_bits)
}

/// Natural logarithm of a positive rational.
///
/// # Errors
///
/// [`Error::Precondition`] if `x <= 0`.
pub fn ln(x: &Rat, frac_bits: u32) -> Result<FixedPoint, Error> {
    if !x.is_positive() {
        return Err(Error::Precondition(format!(
            "ln requires a positive argument, got {x}"
        )));
    }
    let work = frac_bits + GUARD_BITS;
    // Exact range reduction: s = x / 2^e with s in [3/4, 3/2).
    let mut e: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let lower = rational(3, 4);
    let upper = rational(3, 2);
    let s_at = |e: i64| {
        if e >= 0 {
            x / Rat::from_integer(BigInt::one() << e as u64)
        } else {
            x * Rat::from_integer(BigInt::one() << (-e) as u64)
        }
    };
    let mut s = s_at(e);
    while s >= upper {
        e += 1;
        s = s_at(e);
    }
    while s < lower {
        e -= 1;
        s = s_at(e);
    }
    let t = (&s - Rat::one()) / (&s + Rat::one());
    let ln_s = atanh_series(&t, work);
    let e_ln2 = atanh_series(&rational(1, 3), work)
        .mul(&FixedPoint::from_rational(&Rat::from_integer(BigInt::from(e)), work));
    Ok(ln_s.add(&e_ln2).round_to(frac_bits))
}

/// `2 atanh(t) = 2 (t + t^3/3 + t^5/5 + ...)` for `|t| < 1`.
/// Used with `|t| <= 1/3`, where the terms lose at least 3 bits each.
fn atanh_series(t: &Rat, frac_bits: u32) -> FixedPoint {
    let t_fp = FixedPoint::from_rational(t, frac_bits);
    let t2 = t_fp.mul(&t_fp);
    let mut power = t_fp.clone();
    let mut sum = t_fp;
    let mut k: u64 = 1;
    loop {
        power = power.mul(&t2);
        let term = power.div_int(2 * k + 1);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        k += 1;
    }
    sum.add(&sum.clone())
}

/// `e^x` at the argument's precision, via halving and Taylor series.
pub fn exp(x: &FixedPoint) -> FixedPoint {
    let work = x.frac_bits + GUARD_BITS;
    let x = x.round_to(work);
    // Halve until |y| < 1/4 so the Taylor series sheds 2 bits per term.
    let int_bits = x.mantissa.bits() as i64 - work as i64;
    let halvings = (int_bits + 2).max(0) as u32;
    let y = x.shr(halvings);
    let mut sum = FixedPoint::one(work);
    let mut term = FixedPoint::one(work);
    let mut n: u64 = 1;
    loop {
        term = term.mul(&y).div_int(n);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    for _ in 0..halvings {
        sum = sum.mul(&sum);
    }
    sum.round_to(x.frac_bits - GUARD_BITS)
}

/// `base^expo` for a positive rational base and rational exponent,
/// rounded to `frac_bits` fractional bits.
///
/// # Errors
///
/// [`Error::Precondition`] if `base <= 0`.
pub fn pow(base: &Rat, expo: &Rat, frac_bits: u32) -> Result<FixedPoint, Error> {
    if !base.is_positive() {
        return Err(Error::Precondition(format!(
            "pow requires a positive base, got {base}"
        )));
    }
    if expo.is_integer() {
        let e = expo
            .numer()
            .to_i64()
            .ok_or_else(|| Error::Precondition("integer exponent too large".into()))?;
        return Ok(FixedPoint::from_rational(&rat_pow(base, e), frac_bits));
    }
    let work = frac_bits + GUARD_BITS;
    let l = ln(base, work)?;
    let product = l.mul(&FixedPoint::from_rational(expo, work));
    Ok(exp(&product).round_to(frac_bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::integer;

    /// |a - b| < 2^-bits, both exact rationals.
    fn close(a: &Rat, b: &Rat, bits: i64) {
        let diff = (a - b).abs();
        let tol = rat_pow(&integer(2), -bits);
        assert!(diff < tol, "difference {} exceeds 2^-{bits}", diff.to_f64().unwrap());
    }

    fn decimal_rat(digits: &str, scale: u32) -> Rat {
        Rat::new(
            digits.parse().unwrap(),
            BigInt::from(10u32).pow(scale),
        )
    }

    #[test]
    fn dyadic_round_trip_is_exact() {
        let r = rational(-13, 8);
        let fp = FixedPoint::from_rational(&r, 80);
        assert_eq!(fp.to_rational(), r);
        assert_eq!(fp.round_to(160).to_rational(), r);
        assert_eq!(fp.round_to(3).to_rational(), r);
    }

    #[test]
    fn rounding_is_to_nearest() {
        let fp = FixedPoint::from_rational(&rational(1, 3), 4);
        assert_eq!(fp.to_rational(), rational(5, 16));
        let fp = FixedPoint::from_rational(&rational(-1, 3), 4);
        assert_eq!(fp.to_rational(), rational(-5, 16));
    }

    #[test]
    fn ln2_matches_reference_digits() {
        // ln 2 = 0.69314718055994530941723212145817656807550013436026...
        let reference = decimal_rat("69314718055994530941723212145817656807550013436026", 50);
        close(&ln2(192).to_rational(), &reference, 150);
    }

    #[test]
    fn ln_matches_reference_digits() {
        // ln 10 = 2.30258509299404568401799145468436420760110148862877...
        let reference = decimal_rat("230258509299404568401799145468436420760110148862877", 50);
        close(&ln(&integer(10), 192).unwrap().to_rational(), &reference, 150);
        // ln(3/4) = ln 3 - ln 4 = -0.28768207245178092743921900599382743150350971089458...
        let reference = -decimal_rat("28768207245178092743921900599382743150350971089458", 50);
        close(
            &ln(&rational(3, 4), 192).unwrap().to_rational(),
            &reference,
            150,
        );
        assert!(matches!(ln(&Rat::zero(), 64), Err(Error::Precondition(_))));
        assert!(matches!(ln(&integer(-3), 64), Err(Error::Precondition(_))));
    }

    #[test]
    fn ln_is_additive_on_products() {
        let a = rational(7, 5);
        let b = rational(22, 3);
        let lhs = ln(&(&a * &b), 192).unwrap().to_rational();
        let rhs = ln(&a, 192).unwrap().to_rational() + ln(&b, 192).unwrap().to_rational();
        close(&lhs, &rhs, 180);
    }

    #[test]
    fn exp_matches_reference_digits() {
        // e = 2.71828182845904523536028747135266249775724709369995...
        let reference = decimal_rat("271828182845904523536028747135266249775724709369995", 50);
        let one = FixedPoint::one(192);
        close(&exp(&one).to_rational(), &reference, 150);
        let zero = FixedPoint::zero(192);
        assert_eq!(exp(&zero).to_rational(), Rat::one());
    }

    #[test]
    fn exp_of_large_and_negative_arguments() {
        // e^10 = 22026.4657948067165169579006452842443663535126185567...
        let reference = decimal_rat("220264657948067165169579006452842443663535126185567", 46);
        let ten = FixedPoint::from_rational(&integer(10), 192);
        close(&exp(&ten).to_rational(), &reference, 130);
        let lhs = exp(&FixedPoint::from_rational(&integer(-3), 192)).to_rational();
        let rhs = exp(&FixedPoint::from_rational(&integer(3), 192)).to_rational();
        close(&(lhs * rhs), &Rat::one(), 140);
    }

    #[test]
    fn pow_agrees_with_exact_roots_and_powers() {
        close(
            &pow(&integer(4), &rational(1, 2), 192).unwrap().to_rational(),
            &integer(2),
            150,
        );
        close(
            &pow(&integer(8), &rational(2, 3), 192).unwrap().to_rational(),
            &integer(4),
            150,
        );
        assert_eq!(
            pow(&rational(3, 2), &integer(3), 128).unwrap().to_rational(),
            rational(27, 8)
        );
        close(
            &pow(&rational(3, 2), &integer(-2), 128).unwrap().to_rational(),
            &rational(4, 9),
            120,
        );
        assert!(matches!(
            pow(&integer(-2), &rational(1, 2), 64),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn decimal_rendering() {
        let third = FixedPoint::from_rational(&rational(1, 3), 128);
        assert!(third.decimal_string(12).starts_with("0.333333333333"));
        let neg = FixedPoint::from_rational(&rational(-27, 8), 64);
        assert_eq!(neg.decimal_string(4), "-3.3750");
        assert_eq!(neg.decimal_string(0), "-3");
    }
}
