//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored constant term first, so `coeffs[i]` multiplies
//! `x^i`, and the vector never ends in a zero (the zero polynomial is the
//! empty vector). Provides:
//!
//! - ring arithmetic (`+`, `-`, `*`, negation, scalar multiples)
//! - Horner evaluation at any rational point
//! - formal derivative, exponentiation
//! - Euclidean division, gcd, and square-free part, the ingredients the
//!   root-counting certificates need
//!
//! `Display` renders ascending powers with explicit signs, e.g.
//! `1 - 5x^4 + 4x^5`; non-integer coefficients are parenthesized as
//! `(p/q)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::numeric::{sign, Rat};

/// Polynomial in one variable over [`Rat`], constant coefficient first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial from coefficients, constant term first.
    /// Trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// c x^d.
    pub fn monomial(c: Rat, d: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// All coefficients, constant term first. Empty for zero.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Evaluates at `x` by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by x^d.
    pub fn shift_up(&self, d: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// `self = q * divisor + r` and `deg r < deg divisor`.
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading_coeff();
        let ddeg = divisor.degree().expect("nonzero divisor has a degree");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading_coeff() / &dlead;
            let term = Poly::monomial(factor, rdeg - ddeg);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        (quot, rem)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Clears denominators and divides out the integer content, keeping the
    /// sign of the leading coefficient. The result has coprime integer
    /// coefficients and the same signs everywhere as the input.
    pub fn primitive_positive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut denom_lcm = num_bigint::BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<num_bigint::BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = num_bigint::BigInt::zero();
        for i in &ints {
            content = num_integer::gcd(content, i.clone());
        }
        Poly {
            coeffs: ints
                .into_iter()
                .map(|i| Rat::from_integer(i / &content))
                .collect(),
        }
    }

    /// Polynomial gcd, returned monic. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The square-free part `self / gcd(self, self')`, monic. Shares the
    /// distinct roots of `self`, each with multiplicity one.
    ///
    /// # Errors
    ///
    /// [`Error::ZeroPolynomial`] if `self` is zero.
    pub fn squarefree_part(&self) -> Result<Poly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Poly::one());
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        Ok(q.monic())
    }

    /// Coefficient strings constant term first, `"p/q"` or `"p"` each,
    /// for JSON output. The zero polynomial gives `["0"]`.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if sign(c) < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign(c) < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match i {
                0 => write!(f, "{coeff_str}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff_str}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
