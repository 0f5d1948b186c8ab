//! The Q_k polynomial family: recurrence, three closed forms, the
//! underlying probability density, and the telescoping certificate.
//!
//! Starting from Q_0(x) = 1 - x^n, the family iterates
//!
//! ```text
//! Q_{k+1}(x) = Q_k(x) + (1 - x)/(k + 1) · Q_k'(x)
//! ```
//!
//! and admits three equivalent closed forms:
//!
//! ```text
//! Q_k = 1 - Σ_{j=0}^{k} C(n,j) (1-x)^j x^{n-j}                    (form 1)
//! Q_k = -(n-k) C(n,k) (-1)^{n+k} Σ_r C(k, n-r) (-1)^r x^r / r
//!         + [k < n]                                               (form 2)
//! Q_k = (1-x)^{k+1} Σ_{j=0}^{n-k-1} C(j+k, j) x^j                 (form 3)
//! ```
//!
//! For fixed k and 0 < x < 1, form 1 exhibits Q_k as a cumulative
//! distribution function in n with density
//! `p_n = C(n,k) x^{n-k} (1-x)^{k+1}`; form 3 is its partial sum. All of
//! Q_n, Q_{n+1}, ... vanish identically.
//!
//! [`gosper_certificate_check`] verifies the antidifference that
//! collapses the inner sum in the derivation of form 3:
//! `(-1)^j C(k+1, r-j) C(k+j, j) = g_{j+1} - g_j` with
//! `g_j = (-1)^{j+1} (k+j)! / (r (j-1)! k!) · C(k, r-j)` and `g_0 = 0`.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::numeric::{binomial, factorial, integer, rational, Rat};
use crate::poly::Poly;

/// The pair (n, k): Q_0 = 1 - x^n, iterated k times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QkSpec {
    pub n: usize,
    pub k: usize,
}

/// 1 - x.
fn one_minus_x() -> Poly {
    Poly::from_coeffs(vec![Rat::one(), -Rat::one()])
}

/// Q_k by literal iteration of the derivative recurrence.
pub fn qk_recurrence(spec: QkSpec) -> Poly {
    let mut q = &Poly::one() - &Poly::monomial(Rat::one(), spec.n);
    for m in 0..spec.k {
        let step = one_minus_x().scale(&rational(1, m as i64 + 1));
        q = &q + &(&step * &q.derivative());
    }
    q
}

/// Form 1: 1 - Σ_{j=0}^{k} C(n,j) (1-x)^j x^{n-j}.
pub fn qk_form1(spec: QkSpec) -> Poly {
    let mut sum = Poly::zero();
    for j in 0..=spec.k.min(spec.n) {
        let term = one_minus_x()
            .pow(j)
            .shift_up(spec.n - j)
            .scale(&Rat::from_integer(binomial(spec.n, j as i64)));
        sum = &sum + &term;
    }
    &Poly::one() - &sum
}

/// Form 2: -(n-k) C(n,k) (-1)^{n+k} Σ_{r} C(k, n-r) (-1)^r x^r / r plus
/// the constant 1 when k < n. The sum runs over max(1, n-k) ≤ r ≤ n,
/// outside which C(k, n-r) vanishes.
pub fn qk_form2(spec: QkSpec) -> Poly {
    let (n, k) = (spec.n, spec.k);
    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
    let prefactor = integer(-(n as i64 - k as i64) * sign)
        * Rat::from_integer(binomial(n, k as i64));
    let mut q = if k < n { Poly::one() } else { Poly::zero() };
    if prefactor.is_zero() {
        return q;
    }
    for r in 1.max(n as i64 - k as i64)..=(n as i64) {
        let c = binomial(k, n as i64 - r);
        if c.is_zero() {
            continue;
        }
        let r_sign = if r % 2 == 0 { 1 } else { -1 };
        let coeff = &prefactor * Rat::from_integer(c) * rational(r_sign, r);
        q = &q + &Poly::monomial(coeff, r as usize);
    }
    q
}

/// Form 3: (1-x)^{k+1} Σ_{j=0}^{n-k-1} C(j+k, j) x^j; the zero
/// polynomial when k ≥ n.
pub fn qk_form3(spec: QkSpec) -> Poly {
    if spec.k >= spec.n {
        return Poly::zero();
    }
    let mut sum = Poly::zero();
    for j in 0..=(spec.n - spec.k - 1) {
        sum = &sum + &Poly::monomial(Rat::from_integer(binomial(j + spec.k, j as i64)), j);
    }
    &one_minus_x().pow(spec.k + 1) * &sum
}

/// The density p_n = C(n,k) x^{n-k} (1-x)^{k+1}, expanded in x.
///
/// # Errors
///
/// [`Error::Precondition`] if `n < k`.
pub fn density(n: usize, k: usize) -> Result<Poly, Error> {
    if n < k {
        return Err(Error::Precondition(format!(
            "density requires n >= k, got n = {n}, k = {k}"
        )));
    }
    Ok(one_minus_x()
        .pow(k + 1)
        .shift_up(n - k)
        .scale(&Rat::from_integer(binomial(n, k as i64))))
}

/// The antidifference g_j, with the j = 0 pole read as g_0 = 0.
fn gosper_g(k: usize, r: usize, j: usize) -> Rat {
    if j == 0 {
        return Rat::zero();
    }
    let sign = if j.is_multiple_of(2) { -1 } else { 1 };
    integer(sign) * Rat::from_integer(factorial(k + j))
        / (integer(r as i64) * Rat::from_integer(factorial(j - 1)) * Rat::from_integer(factorial(k)))
        * Rat::from_integer(binomial(k, r as i64 - j as i64))
}

/// Verifies the telescoping identity
/// `(-1)^j C(k+1, r-j) C(k+j, j) = g_{j+1} - g_j` for every
/// `0 ≤ j ≤ j_max`, in exact arithmetic.
///
/// # Errors
///
/// [`Error::Precondition`] if `r < 1`.
pub fn gosper_certificate_check(k: usize, r: usize, j_max: usize) -> Result<bool, Error> {
    if r < 1 {
        return Err(Error::Precondition(
            "the certificate divides by r, so r >= 1 is required".into(),
        ));
    }
    for j in 0..=j_max {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let lhs = integer(sign)
            * Rat::from_integer(binomial(k + 1, r as i64 - j as i64))
            * Rat::from_integer(binomial(k + j, j as i64));
        if lhs != gosper_g(k, r, j + 1) - gosper_g(k, r, j) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| integer(c)).collect())
    }

    /// The full displayed n = 5 family, k = 0..7.
    #[test]
    fn n5_family_verbatim() {
        let expected = [
            p(&[1, 0, 0, 0, 0, -1]),
            p(&[1, 0, 0, 0, -5, 4]),
            p(&[1, 0, 0, -10, 15, -6]),
            p(&[1, 0, -10, 20, -15, 4]),
            p(&[1, -5, 10, -10, 5, -1]),
            Poly::zero(),
            Poly::zero(),
            Poly::zero(),
        ];
        for (k, want) in expected.iter().enumerate() {
            let spec = QkSpec { n: 5, k };
            assert_eq!(&qk_recurrence(spec), want, "recurrence at k = {k}");
            assert_eq!(&qk_form1(spec), want, "form 1 at k = {k}");
            assert_eq!(&qk_form2(spec), want, "form 2 at k = {k}");
            assert_eq!(&qk_form3(spec), want, "form 3 at k = {k}");
        }
    }

    #[test]
    fn four_forms_coincide() {
        for n in 0..=14 {
            for k in 0..=(n + 3) {
                let spec = QkSpec { n, k };
                let by_recurrence = qk_recurrence(spec);
                assert_eq!(by_recurrence, qk_form1(spec), "form 1 at ({n},{k})");
                assert_eq!(by_recurrence, qk_form2(spec), "form 2 at ({n},{k})");
                assert_eq!(by_recurrence, qk_form3(spec), "form 3 at ({n},{k})");
            }
        }
    }

    #[test]
    fn vanishes_at_and_beyond_n() {
        for n in 0..=14 {
            for k in n..=(n + 5) {
                assert!(qk_recurrence(QkSpec { n, k }).is_zero(), "({n},{k})");
            }
        }
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(2, 2).unwrap(), one_minus_x().pow(3));
        assert_eq!(
            density(4, 2).unwrap().eval(&rational(1, 3)),
            rational(16, 81)
        );
        assert!(matches!(density(1, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn densities_partial_sum_to_form3() {
        for k in 0..=6usize {
            for n in k..=12 {
                let mut sum = Poly::zero();
                for m in k..n {
                    sum = &sum + &density(m, k).unwrap();
                }
                assert_eq!(sum, qk_form3(QkSpec { n, k }), "({n},{k})");
            }
        }
    }

    #[test]
    fn cdf_shadow_is_monotone_and_bounded() {
        let points = [rational(1, 10), rational(1, 3), rational(1, 2), rational(9, 10)];
        for k in 0..=4usize {
            for x in &points {
                let mut prev = Rat::zero();
                for n in k..=16 {
                    let v = qk_form3(QkSpec { n, k }).eval(x);
                    assert!(v >= prev, "Q_{k} at n = {n} decreased");
                    assert!(v <= Rat::one());
                    prev = v;
                    let d = density(n, k).unwrap().eval(x);
                    assert!(d >= Rat::zero());
                }
            }
        }
    }

    #[test]
    fn gosper_certificate_instances() {
        assert!(gosper_certificate_check(2, 3, 6).unwrap());
        assert!(gosper_certificate_check(0, 1, 4).unwrap());
        assert!(gosper_certificate_check(4, 7, 10).unwrap());
        assert!(matches!(
            gosper_certificate_check(2, 0, 5),
            Err(Error::Precondition(_))
        ));
    }

    /// Summing the telescoped terms reproduces g at the boundary.
    #[test]
    fn telescoping_closes_the_inner_sum() {
        for n in 1..=12usize {
            for k in 0..n {
                for r in 1..=n {
                    let mut sum = Rat::zero();
                    for j in 0..(n - k) {
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        sum += integer(sign)
                            * Rat::from_integer(binomial(k + 1, r as i64 - j as i64))
                            * Rat::from_integer(binomial(k + j, j as i64));
                    }
                    assert_eq!(sum, gosper_g(k, r, n - k), "(n={n},k={k},r={r})");
                }
            }
        }
    }
}
