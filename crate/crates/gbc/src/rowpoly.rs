//! Row polynomials and exact real-rootedness certificates.
//!
//! The n-th row polynomial of a triangle is `φ_n(x) = Σ_k {n||k} x^k`.
//! Multiplying the recurrence by x^k and summing gives the derivative
//! recurrence
//!
//! ```text
//! φ_{n+1}(x) = ((α n + γ) + (α′ n + β′ + γ′) x) φ_n(x) + (β + β′ x) x φ_n′(x)
//! ```
//!
//! starting from φ_0 = 1. When β = β′ = 0 the recurrence degenerates to
//! the explicit product Π ((α j + γ) + (α′ j + γ′) x), which plainly has
//! real zeros only; for β′ = 0 and nonnegative parameters all zeros are
//! real and nonpositive, while (3, 1, 1, 0, 1, 0) already breaks reality
//! at φ_3.
//!
//! Whether a given φ_n has real zeros only is decided exactly, never
//! numerically: [`certify_all_real`] counts distinct real roots of the
//! square-free part by Sturm's theorem over the rationals and compares
//! against its degree. [`negativity_check`] runs the same count on
//! (0, +∞).

use num_traits::Zero;

use crate::error::Error;
use crate::numeric::{integer, sign, Rat};
use crate::poly::Poly;
use crate::triangle::Params;

/// φ_n, built by iterating the derivative recurrence from φ_0 = 1.
pub fn phi(params: &Params, n: usize) -> Poly {
    let mut p = Poly::one();
    for m in 0..n {
        let m_rat = integer(m as i64);
        let linear = Poly::from_coeffs(vec![
            &params.alpha * &m_rat + &params.gamma,
            &params.alpha_p * &m_rat + &params.beta_p + &params.gamma_p,
        ]);
        let x_part = Poly::from_coeffs(vec![
            Rat::zero(),
            params.beta.clone(),
            params.beta_p.clone(),
        ]);
        p = &(&linear * &p) + &(&x_part * &p.derivative());
    }
    p
}

/// The β = β′ = 0 product form Π_{j=0}^{n-1} ((α j + γ) + (α′ j + γ′) x),
/// which equals [`phi`] there.
///
/// # Errors
///
/// [`Error::Precondition`] unless β = β′ = 0.
pub fn phi_product_form(params: &Params, n: usize) -> Result<Poly, Error> {
    if !params.beta.is_zero() || !params.beta_p.is_zero() {
        return Err(Error::Precondition(format!(
            "product form requires beta = beta' = 0, got beta = {}, beta' = {}",
            params.beta, params.beta_p
        )));
    }
    let mut p = Poly::one();
    for j in 0..n {
        let j_rat = integer(j as i64);
        let factor = Poly::from_coeffs(vec![
            &params.alpha * &j_rat + &params.gamma,
            &params.alpha_p * &j_rat + &params.gamma_p,
        ]);
        p = &p * &factor;
    }
    Ok(p)
}

/// Sturm-based verdict on the zeros of a polynomial.
///
/// `all_real` holds exactly when every zero is real, i.e. when the
/// square-free part has as many distinct real roots as its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealityCertificate {
    pub degree: usize,
    pub squarefree_degree: usize,
    pub distinct_real_roots: usize,
    pub all_real: bool,
}

impl RealityCertificate {
    /// JSON object with all four fields.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "degree": self.degree,
            "squarefree_degree": self.squarefree_degree,
            "distinct_real_roots": self.distinct_real_roots,
            "all_real": self.all_real,
        })
        .to_string()
    }
}

/// The Sturm chain of a square-free polynomial: p, p′, then each
/// negated remainder, normalized to primitive integer coefficients
/// (a positive scaling, so sign variations are untouched).
fn sturm_chain(squarefree: &Poly) -> Vec<Poly> {
    let mut chain = vec![
        squarefree.primitive_positive(),
        squarefree.derivative().primitive_positive(),
    ];
    loop {
        let last = &chain[chain.len() - 1];
        if last.is_zero() || last.degree() == Some(0) {
            break;
        }
        let (_, r) = chain[chain.len() - 2].div_rem(last);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive_positive());
    }
    chain
}

/// Counts sign alternations, ignoring zeros.
fn variations<I: IntoIterator<Item = i8>>(signs: I) -> usize {
    let mut prev = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign_at_pos_inf(p: &Poly) -> i8 {
    sign(&p.leading_coeff())
}

fn sign_at_neg_inf(p: &Poly) -> i8 {
    let s = sign(&p.leading_coeff());
    match p.degree() {
        Some(d) if d % 2 == 1 => -s,
        _ => s,
    }
}

/// Distinct real roots of the square-free polynomial, as the drop in
/// Sturm sign variations from -∞ to +∞.
fn count_roots_squarefree(squarefree: &Poly) -> usize {
    if squarefree.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    let chain = sturm_chain(squarefree);
    let at_minus = variations(chain.iter().map(sign_at_neg_inf));
    let at_plus = variations(chain.iter().map(sign_at_pos_inf));
    at_minus - at_plus
}

/// Number of distinct real roots of `p`, by Sturm's theorem on the
/// square-free part, entirely in exact arithmetic.
///
/// # Errors
///
/// [`Error::ZeroPolynomial`] if `p` is zero.
pub fn sturm_distinct_real_roots(p: &Poly) -> Result<usize, Error> {
    Ok(count_roots_squarefree(&p.squarefree_part()?))
}

/// Full certificate: degree, square-free degree, distinct real root
/// count, and the reality verdict.
///
/// # Errors
///
/// [`Error::ZeroPolynomial`] if `p` is zero.
pub fn certify_all_real(p: &Poly) -> Result<RealityCertificate, Error> {
    let squarefree = p.squarefree_part()?;
    let degree = p.degree().expect("squarefree_part rejected zero");
    let squarefree_degree = squarefree.degree().expect("squarefree part of nonzero is nonzero");
    let distinct_real_roots = count_roots_squarefree(&squarefree);
    Ok(RealityCertificate {
        degree,
        squarefree_degree,
        distinct_real_roots,
        all_real: distinct_real_roots == squarefree_degree,
    })
}

/// True iff `p` has no root in the open interval (0, +∞): the Sturm
/// variation count over (0, ∞) of the square-free part, after stripping
/// any root at x = 0, must be zero.
///
/// # Errors
///
/// [`Error::ZeroPolynomial`] if `p` is zero.
pub fn negativity_check(p: &Poly) -> Result<bool, Error> {
    let mut q = p.squarefree_part()?;
    if q.coeff(0).is_zero() {
        let (quot, rem) = q.div_rem(&Poly::x());
        debug_assert!(rem.is_zero());
        q = quot;
    }
    if q.degree().is_none_or(|d| d == 0) {
        return Ok(true);
    }
    let chain = sturm_chain(&q);
    let zero = Rat::zero();
    let at_zero = variations(chain.iter().map(|c| sign(&c.eval(&zero))));
    let at_plus = variations(chain.iter().map(sign_at_pos_inf));
    Ok(at_zero == at_plus)
}
