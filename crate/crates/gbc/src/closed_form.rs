//! Closed forms for the α′ = 0 family and the exact row-sum series.
//!
//! When α′ = 0 the triangle entry `{n||k}` factors into a polynomial in
//! (α, β, γ) times a polynomial in (β′, γ′):
//!
//! ```text
//! {n||k} = [ Σ_{i1+i2+i3 = n-k} c(n, n-i1) C(n-i1, k+i2) S(k+i2, k)
//!                               α^i1 β^i2 γ^i3 ]  ·  Π_{j=1}^{k} (γ′ + j β′)
//! ```
//!
//! with c and S the two kinds of Stirling numbers. Provides:
//!
//! - [`gbc_factored`]: the factorization above, division-free and total
//!   over all rational parameters with α′ = 0
//! - [`gbc_hyper`]: the hypergeometric-style alternating sum, defined
//!   only when α, β, β′ are all nonzero; agrees with the factored form
//! - [`expanded_coefficient`]: one monomial of the fully expanded
//!   double sum, for term-level inspection
//! - [`row_sum_series`]: the series for the row sums
//!   `ρ(n) = Σ_k {n||k}`, the one place a real power appears
//!
//! Every closed form here is validated against the recurrence engine in
//! `triangle`, which is the ground truth.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::fixedpoint::{self, FixedPoint};
use crate::numeric::{
    binomial, factorial, integer, rat_pow, rising_factorial, stirling_first_unsigned,
    stirling_second, Rat,
};
use crate::triangle::Params;

/// The two factors of an α′ = 0 entry and their product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredValue {
    /// Value of the polynomial in α, β, γ only.
    pub first_factor: Rat,
    /// Value of Π_{j=1}^{k} (γ′ + j β′).
    pub second_factor: Rat,
    /// `first_factor · second_factor`, which equals `{n||k}`.
    pub product: Rat,
}

impl FactoredValue {
    /// JSON object with `first`, `second`, and `product` as `"p/q"` strings.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "first": self.first_factor.to_string(),
            "second": self.second_factor.to_string(),
            "product": self.product.to_string(),
        })
        .to_string()
    }
}

fn require_alpha_prime_zero(params: &Params) -> Result<(), Error> {
    if params.alpha_p.is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "closed form requires alpha' = 0, got {}",
            params.alpha_p
        )))
    }
}

/// `{n||k}` as the explicit two-factor product, for α′ = 0.
///
/// For `k < 0` or `k > n` the product is 0 (with the empty conventions
/// `first_factor = 0`, and `second_factor = 1` when `k < 0`).
///
/// # Errors
///
/// [`Error::Precondition`] if `params.alpha_p != 0`.
pub fn gbc_factored(params: &Params, n: usize, k: i64) -> Result<FactoredValue, Error> {
    require_alpha_prime_zero(params)?;
    if k < 0 {
        return Ok(FactoredValue {
            first_factor: Rat::zero(),
            second_factor: Rat::one(),
            product: Rat::zero(),
        });
    }
    let k = k as usize;
    let mut first = Rat::zero();
    if k <= n {
        let excess = n - k;
        for i1 in 0..=excess {
            for i2 in 0..=(excess - i1) {
                let i3 = excess - i1 - i2;
                let count = stirling_first_unsigned(n, (n - i1) as i64)
                    * binomial(n - i1, (k + i2) as i64)
                    * stirling_second(k + i2, k as i64);
                if count.is_zero() {
                    continue;
                }
                first += Rat::from_integer(count)
                    * rat_pow(&params.alpha, i1 as i64)
                    * rat_pow(&params.beta, i2 as i64)
                    * rat_pow(&params.gamma, i3 as i64);
            }
        }
    }
    let mut second = Rat::one();
    for j in 1..=k {
        second *= &params.gamma_p + &params.beta_p * integer(j as i64);
    }
    let product = &first * &second;
    Ok(FactoredValue {
        first_factor: first,
        second_factor: second,
        product,
    })
}

/// `{n||k}` by the alternating rising-factorial sum
///
/// ```text
/// (α^n / k!) (β′/β)^k  (γ′/β′ + 1)^(k̄)  Σ_{j=0}^{k} (-1)^{k-j} C(k,j) ((βj+γ)/α)^(n̄)
/// ```
///
/// valid for α′ = 0 and α, β, β′ all nonzero. The divisions cancel: the
/// result is the same rational as [`gbc_factored`]'s product.
///
/// # Errors
///
/// [`Error::Precondition`] if `alpha_p != 0`;
/// [`Error::DegenerateParameters`] if α, β, or β′ is zero (use
/// [`gbc_factored`] there instead).
pub fn gbc_hyper(params: &Params, n: usize, k: usize) -> Result<Rat, Error> {
    require_alpha_prime_zero(params)?;
    for (name, value) in [
        ("alpha", &params.alpha),
        ("beta", &params.beta),
        ("beta'", &params.beta_p),
    ] {
        if value.is_zero() {
            return Err(Error::DegenerateParameters(format!(
                "the rising-factorial form divides by {name}, which is zero"
            )));
        }
    }
    let mut sum = Rat::zero();
    for j in 0..=k {
        let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
        let base = (&params.beta * integer(j as i64) + &params.gamma) / &params.alpha;
        sum += integer(sign)
            * Rat::from_integer(binomial(k, j as i64))
            * rising_factorial(&base, n);
    }
    let ratio_pow = rat_pow(&(&params.beta_p / &params.beta), k as i64);
    let shifted = &params.gamma_p / &params.beta_p + Rat::one();
    let prefactor = rat_pow(&params.alpha, n as i64) / Rat::from_integer(factorial(k))
        * ratio_pow
        * rising_factorial(&shifted, k);
    Ok(prefactor * sum)
}

/// One monomial of the fully expanded α′ = 0 closed form:
///
/// ```text
/// c(k+1, j2+1) c(n, n-i1) C(n-i1, k+i2) S(k+i2, k) α^i1 β^i2 γ^i3 β′^j1 γ′^j2
/// ```
///
/// Summing over all (i1, i2, i3) with `i1+i2+i3 = n-k` and all
/// (j1, j2) with `j1+j2 = k` reproduces `{n||k}`. The (β′, γ′) kernel is
/// `c(k+1, j2+1)` because `Π_{j=1}^{k}(γ′ + jβ′) = Σ_m c(k+1, m+1) γ′^m β′^{k-m}`
/// (rising-factorial expansion shifted by one).
///
/// # Errors
///
/// [`Error::Precondition`] if `alpha_p != 0`, if `i1+i2+i3 != n-k`, or if
/// `j1+j2 != k`.
#[allow(clippy::too_many_arguments)]
pub fn expanded_coefficient(
    params: &Params,
    n: usize,
    k: usize,
    i1: usize,
    i2: usize,
    i3: usize,
    j1: usize,
    j2: usize,
) -> Result<Rat, Error> {
    require_alpha_prime_zero(params)?;
    if (i1 + i2 + i3) as i64 != n as i64 - k as i64 {
        return Err(Error::Precondition(format!(
            "need i1+i2+i3 = n-k, got {}+{}+{} vs {}-{}",
            i1, i2, i3, n, k
        )));
    }
    if j1 + j2 != k {
        return Err(Error::Precondition(format!(
            "need j1+j2 = k, got {}+{} vs {}",
            j1, j2, k
        )));
    }
    let count = stirling_first_unsigned(k + 1, j2 as i64 + 1)
        * stirling_first_unsigned(n, (n - i1) as i64)
        * binomial(n - i1, (k + i2) as i64)
        * stirling_second(k + i2, k as i64);
    Ok(Rat::from_integer(count)
        * rat_pow(&params.alpha, i1 as i64)
        * rat_pow(&params.beta, i2 as i64)
        * rat_pow(&params.gamma, i3 as i64)
        * rat_pow(&params.beta_p, j1 as i64)
        * rat_pow(&params.gamma_p, j2 as i64))
}

/// Result of evaluating the row-sum series: the truncated value plus the
/// diagnostics needed to judge the truncation.
#[derive(Debug, Clone)]
pub struct SeriesEvaluation {
    /// The partial sum, a dyadic rational at `precision_bits`.
    pub value: FixedPoint,
    /// Index of the last term included.
    pub truncation_j: usize,
    /// Fractional bits of the returned value.
    pub precision_bits: u32,
    /// The final summand, up to the constant factor (1 + β′/β)^(-γ′/β′):
    /// exact, so a caller can see how far the tail has decayed.
    pub last_term: Rat,
}

impl SeriesEvaluation {
    /// JSON object; `value` is rendered with `digits` decimal digits.
    pub fn to_json(&self, digits: usize) -> String {
        serde_json::json!({
            "value": self.value.decimal_string(digits),
            "truncation_j": self.truncation_j,
            "precision_bits": self.precision_bits,
            "last_term": self.last_term.to_string(),
        })
        .to_string()
    }
}

/// Truncation of the row-sum series. The exponential generating function
/// of ρ is
///
/// ```text
/// Σ_n ρ(n) x^n / n! = (1-αx)^(-γ/α) / (1 + (β′/β)(1 - (1-αx)^(-β/α)))^(1+γ′/β′)
/// ```
///
/// and expanding the denominator binomially (after factoring out
/// `r = 1 + β′/β`, which makes the expansion variable `w = β′/(β+β′)`,
/// with |w| < 1) gives the coefficient series
///
/// ```text
/// ρ(n) = α^n n! Σ_{j≥0} C(j + γ′/β′, j) C(n + (jβ+γ)/α - 1, n)
///                        w^j r^(-1-γ′/β′)
/// ```
///
/// summed here through `j = truncation_j`. The rational-argument
/// binomials are rising-factorial ratios, so every term is an exact
/// rational times the single constant `r^(-γ′/β′)`; that one real power
/// is computed in fixed point with 96 guard bits and is the only
/// approximation.
///
/// # Errors
///
/// [`Error::Precondition`] if `alpha_p != 0` or any of α, β, β′ is
/// negative; [`Error::DegenerateParameters`] if any of α, β, β′ is zero.
pub fn row_sum_series(
    params: &Params,
    n: usize,
    truncation_j: usize,
    precision_bits: u32,
) -> Result<SeriesEvaluation, Error> {
    require_alpha_prime_zero(params)?;
    for (name, value) in [
        ("alpha", &params.alpha),
        ("beta", &params.beta),
        ("beta'", &params.beta_p),
    ] {
        if value.is_zero() {
            return Err(Error::DegenerateParameters(format!(
                "the row-sum series requires nonzero {name}"
            )));
        }
        if value.is_negative() {
            return Err(Error::Precondition(format!(
                "the row-sum series requires {name} > 0, got {value}"
            )));
        }
    }
    let g = &params.gamma_p / &params.beta_p;
    let r = Rat::one() + &params.beta_p / &params.beta;
    let w = &params.beta_p / (&params.beta + &params.beta_p);
    let alpha_n = rat_pow(&params.alpha, n as i64);

    // Σ_j C(j+g, j) · rising((jβ+γ)/α, n) · w^j r^(-1), all exact.
    // C(j+g, j) is maintained incrementally: it picks up (g+j)/j each step.
    let mut partial = Rat::zero();
    let mut binom = Rat::one();
    let mut geo = r.recip();
    let mut last_term = Rat::zero();
    for j in 0..=truncation_j {
        if j > 0 {
            binom *= (&g + integer(j as i64)) / integer(j as i64);
            geo *= &w;
        }
        let base = (&params.beta * integer(j as i64) + &params.gamma) / &params.alpha;
        last_term = &alpha_n * &binom * rising_factorial(&base, n) * &geo;
        partial += &last_term;
    }

    let constant = fixedpoint::pow(&r, &-g, precision_bits + 96)?;
    let value = FixedPoint::from_rational(
        &(constant.to_rational() * partial),
        precision_bits,
    );
    Ok(SeriesEvaluation {
        value,
        truncation_j,
        precision_bits,
        last_term,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;
    use crate::triangle::{compute_table, entry, first_column_product};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
        rational(rng.random_range(-5i64..=5), rng.random_range(1i64..=3))
    }

    fn rand_params_alpha_prime_zero(rng: &mut ChaCha8Rng) -> Params {
        Params::new(
            rand_rat(rng),
            rand_rat(rng),
            rand_rat(rng),
            Rat::zero(),
            rand_rat(rng),
            rand_rat(rng),
        )
    }

    #[test]
    fn factored_product_matches_recurrence() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..25 {
            let p = rand_params_alpha_prime_zero(&mut rng);
            let t = compute_table(&p, 8);
            for n in 0..=8usize {
                for k in -1..=(n as i64 + 1) {
                    let f = gbc_factored(&p, n, k).unwrap();
                    assert_eq!(f.product, &f.first_factor * &f.second_factor);
                    assert_eq!(f.product, t.entry(n, k).unwrap(), "({n},{k})");
                }
            }
        }
    }

    #[test]
    fn factored_rejects_nonzero_alpha_prime() {
        let p = Params::from_ints([1, 1, 1, 1, 0, 1]);
        assert!(matches!(
            gbc_factored(&p, 3, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn factored_binomial_example() {
        let f = gbc_factored(&Params::binomial(), 4, 2).unwrap();
        assert_eq!(f.first_factor, integer(6));
        assert_eq!(f.second_factor, Rat::one());
        assert_eq!(f.product, integer(6));
    }

    #[test]
    fn factored_column_zero_is_the_column_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            let p = rand_params_alpha_prime_zero(&mut rng);
            for n in 0..=8 {
                let f = gbc_factored(&p, n, 0).unwrap();
                assert_eq!(f.second_factor, Rat::one());
                assert_eq!(f.product, first_column_product(&p, n));
            }
        }
    }

    #[test]
    fn second_factor_satisfies_its_own_recurrence() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..10 {
            let p = rand_params_alpha_prime_zero(&mut rng);
            for k in 1..=8i64 {
                let prev = gbc_factored(&p, 8, k - 1).unwrap().second_factor;
                let cur = gbc_factored(&p, 8, k).unwrap().second_factor;
                assert_eq!(cur, prev * (&p.gamma_p + &p.beta_p * integer(k)));
            }
        }
    }

    /// The two-factor display for {4||2}:
    /// (11α² + 18αβ + 7β² + 18αγ + 12βγ + 6γ²)(β′ + γ′)(2β′ + γ′).
    #[test]
    fn four_two_factored_display() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..25 {
            let p = rand_params_alpha_prime_zero(&mut rng);
            let (a, b, c) = (&p.alpha, &p.beta, &p.gamma);
            let first = integer(11) * a * a
                + integer(18) * a * b
                + integer(7) * b * b
                + integer(18) * a * c
                + integer(12) * b * c
                + integer(6) * c * c;
            let second =
                (&p.beta_p + &p.gamma_p) * (integer(2) * &p.beta_p + &p.gamma_p);
            let f = gbc_factored(&p, 4, 2).unwrap();
            assert_eq!(f.first_factor, first);
            assert_eq!(f.second_factor, second);
            assert_eq!(f.product, entry(&p, 4, 2));
        }
    }

    #[test]
    fn hyper_agrees_with_factored_when_defined() {
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        let mut checked = 0;
        while checked < 20 {
            let p = rand_params_alpha_prime_zero(&mut rng);
            if p.alpha.is_zero() || p.beta.is_zero() || p.beta_p.is_zero() {
                continue;
            }
            checked += 1;
            for n in 0..=6usize {
                for k in 0..=n {
                    assert_eq!(
                        gbc_hyper(&p, n, k).unwrap(),
                        gbc_factored(&p, n, k as i64).unwrap().product,
                        "({n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn hyper_examples_and_guards() {
        let p = Params::from_ints([1, 1, 1, 0, 1, 1]);
        assert_eq!(gbc_hyper(&p, 0, 0).unwrap(), Rat::one());
        assert_eq!(gbc_hyper(&p, 2, 1).unwrap(), entry(&p, 2, 1));
        assert_eq!(gbc_hyper(&p, 3, 5).unwrap(), Rat::zero());
        assert!(matches!(
            gbc_hyper(&Params::binomial(), 3, 1),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            gbc_hyper(&Params::from_ints([1, 1, 1, 1, 1, 1]), 3, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn expanded_terms_sum_to_the_entry() {
        let mut rng = ChaCha8Rng::seed_from_u64(46);
        for _ in 0..15 {
            let p = rand_params_alpha_prime_zero(&mut rng);
            for n in 0..=7usize {
                for k in 0..=n {
                    let mut sum = Rat::zero();
                    let excess = n - k;
                    for i1 in 0..=excess {
                        for i2 in 0..=(excess - i1) {
                            let i3 = excess - i1 - i2;
                            for j2 in 0..=k {
                                sum += expanded_coefficient(&p, n, k, i1, i2, i3, k - j2, j2)
                                    .unwrap();
                            }
                        }
                    }
                    assert_eq!(sum, entry(&p, n, k as i64), "({n},{k})");
                }
            }
        }
    }

    #[test]
    fn expanded_rejects_mismatched_indices() {
        let p = Params::from_ints([1, 1, 1, 0, 1, 1]);
        assert!(matches!(
            expanded_coefficient(&p, 4, 2, 1, 1, 1, 1, 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            expanded_coefficient(&p, 4, 2, 1, 1, 0, 2, 1),
            Err(Error::Precondition(_))
        ));
    }

    /// |series/exact - 1| <= 1e-9, checked in exact rational arithmetic.
    fn assert_close(series: &SeriesEvaluation, exact: &Rat) {
        let v = series.value.to_rational();
        let rel = ((v - exact) / exact).abs();
        assert!(
            rel <= rational(1, 1_000_000_000),
            "relative error {:e} too large",
            FixedPoint::from_rational(&rel, 64).to_f64()
        );
    }

    #[test]
    fn series_reproduces_exact_row_sums() {
        let p = Params::from_ints([1, 1, 1, 0, 1, 1]);
        let t = compute_table(&p, 3);
        let s0 = row_sum_series(&p, 0, 200, 192).unwrap();
        assert_close(&s0, &Rat::one());
        let s3 = row_sum_series(&p, 3, 200, 192).unwrap();
        assert_close(&s3, &t.row_sum(3).unwrap());

        let q = Params::from_ints([1, 2, 1, 0, 1, 2]);
        let tq = compute_table(&q, 4);
        let s4 = row_sum_series(&q, 4, 400, 192).unwrap();
        assert_close(&s4, &tq.row_sum(4).unwrap());
    }

    #[test]
    fn series_handles_irrational_exponents() {
        // gamma'/beta' = 1/2, so the power factor is 3^(-1/2).
        let p = Params::from_ints([1, 1, 1, 0, 2, 1]);
        let t = compute_table(&p, 5);
        let s = row_sum_series(&p, 5, 400, 192).unwrap();
        assert_close(&s, &t.row_sum(5).unwrap());
    }

    #[test]
    fn series_guards() {
        assert!(matches!(
            row_sum_series(&Params::from_ints([1, 1, 1, 1, 1, 1]), 2, 50, 64),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            row_sum_series(&Params::from_ints([0, 1, 1, 0, 1, 1]), 2, 50, 64),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            row_sum_series(&Params::from_ints([1, 1, 1, 0, -1, 1]), 2, 50, 64),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn series_diagnostics_report_decay() {
        let p = Params::from_ints([1, 1, 1, 0, 1, 1]);
        let s = row_sum_series(&p, 2, 120, 160).unwrap();
        assert_eq!(s.truncation_j, 120);
        assert_eq!(s.precision_bits, 160);
        // Terms decay like 2^-j here; the last one must be far below 1e-9.
        let tiny = rational(1, 1_000_000_000);
        assert!(s.last_term.abs() < &tiny * &tiny);
    }

    #[test]
    fn factored_value_json_shape() {
        let f = gbc_factored(&Params::binomial(), 4, 2).unwrap();
        assert_eq!(
            f.to_json(),
            r#"{"first":"6","product":"6","second":"1"}"#
        );
    }
}
