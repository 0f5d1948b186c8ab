//! The generalized coefficient triangle and its recurrence engine.
//!
//! A six-tuple of rationals (α, β, γ, α′, β′, γ′) defines a triangle of
//! values `{n||k}` through
//!
//! ```text
//! {n+1||k} = (α n + β k + γ) {n||k} + (α′ n + β′ k + γ′) {n||k-1}
//! {0||k}   = [k = 0]
//! ```
//!
//! with every out-of-range read taken as 0. Specializing the parameters
//! recovers the classical triangles:
//!
//! ```text
//! (0, 0, 1, 0, 0, 1)   binomial coefficients
//! (1, 0, 0, 0, 0, 1)   unsigned Stirling, first kind
//! (0, 1, 0, 0, 0, 1)   Stirling, second kind
//! (0, 1, 1, 1, -1, 1)  Eulerian numbers
//! ```
//!
//! This module is the ground truth the closed forms elsewhere in the
//! crate are checked against: it evaluates the recurrence literally,
//! one addition and two multiplications per entry, in exact arithmetic.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::numeric::{integer, Rat};

/// The six recurrence parameters (α, β, γ, α′, β′, γ′).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub alpha_p: Rat,
    pub beta_p: Rat,
    pub gamma_p: Rat,
}

impl Params {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, alpha_p: Rat, beta_p: Rat, gamma_p: Rat) -> Self {
        Params {
            alpha,
            beta,
            gamma,
            alpha_p,
            beta_p,
            gamma_p,
        }
    }

    /// Integer parameters, in the order (α, β, γ, α′, β′, γ′).
    pub fn from_ints(t: [i64; 6]) -> Self {
        Params::new(
            integer(t[0]),
            integer(t[1]),
            integer(t[2]),
            integer(t[3]),
            integer(t[4]),
            integer(t[5]),
        )
    }

    /// (0, 0, 1, 0, 0, 1): `{n||k} = C(n, k)`.
    pub fn binomial() -> Self {
        Params::from_ints([0, 0, 1, 0, 0, 1])
    }

    /// (1, 0, 0, 0, 0, 1): unsigned Stirling numbers of the first kind.
    pub fn stirling_first() -> Self {
        Params::from_ints([1, 0, 0, 0, 0, 1])
    }

    /// (0, 1, 0, 0, 0, 1): Stirling numbers of the second kind.
    pub fn stirling_second() -> Self {
        Params::from_ints([0, 1, 0, 0, 0, 1])
    }

    /// (0, 1, 1, 1, -1, 1): Eulerian numbers `A(n, k)`, counting
    /// permutations of n elements with k descents.
    pub fn eulerian() -> Self {
        Params::from_ints([0, 1, 1, 1, -1, 1])
    }

    /// The row-to-row multipliers at (n, k): the coefficient of `{n||k}`
    /// and of `{n||k-1}` in `{n+1||k}`.
    fn multipliers(&self, n: usize, k: usize) -> (Rat, Rat) {
        let n = integer(n as i64);
        let k = integer(k as i64);
        (
            &self.alpha * &n + &self.beta * &k + &self.gamma,
            &self.alpha_p * &n + &self.beta_p * &k + &self.gamma_p,
        )
    }
}

/// A fully computed triangle: rows 0 through `max_n`, row n holding
/// `{n||0} .. {n||n}`.
///
/// Entries outside that triangular range are zero for every parameter
/// choice, because row 0 is supported on k = 0 alone and each step of the
/// recurrence widens the support by at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBCTable {
    params: Params,
    rows: Vec<Vec<Rat>>,
}

impl GBCTable {
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Number of rows, `max_n + 1`.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// `{n||k}`, with out-of-range indices reading as 0.
    ///
    /// # Errors
    ///
    /// [`Error::IndexOutOfRange`] if `n` exceeds the computed depth.
    pub fn entry(&self, n: usize, k: i64) -> Result<Rat, Error> {
        let row = self
            .rows
            .get(n)
            .ok_or_else(|| Error::IndexOutOfRange(format!("row {n} of a {}-row table", self.rows.len())))?;
        if k < 0 || k as usize >= row.len() {
            return Ok(Rat::zero());
        }
        Ok(row[k as usize].clone())
    }

    /// Row n as a slice, `{n||0} .. {n||n}`.
    ///
    /// # Errors
    ///
    /// [`Error::IndexOutOfRange`] if `n` exceeds the computed depth.
    pub fn row(&self, n: usize) -> Result<&[Rat], Error> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::IndexOutOfRange(format!("row {n} of a {}-row table", self.rows.len())))
    }

    /// `Σ_k {n||k}`, the n-th row sum.
    ///
    /// # Errors
    ///
    /// [`Error::IndexOutOfRange`] if `n` exceeds the computed depth.
    pub fn row_sum(&self, n: usize) -> Result<Rat, Error> {
        Ok(self.row(n)?.iter().sum())
    }

    /// Rows rendered as comma-separated values, one row per line,
    /// each entry in `p/q` form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Rat::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Rows as a JSON array of arrays of `"p/q"` strings.
    pub fn to_json(&self) -> String {
        let strings: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Rat::to_string).collect())
            .collect();
        serde_json::to_string(&strings).expect("string matrix serializes")
    }
}

/// Runs the recurrence down to row `max_n` inclusive.
pub fn compute_table(params: &Params, max_n: usize) -> GBCTable {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![Rat::one()]);
    for n in 0..max_n {
        let prev = &rows[n];
        let read = |k: i64| -> Rat {
            if k < 0 || k as usize >= prev.len() {
                Rat::zero()
            } else {
                prev[k as usize].clone()
            }
        };
        let row: Vec<Rat> = (0..=n + 1)
            .map(|k| {
                let (same, carry) = params.multipliers(n, k);
                same * read(k as i64) + carry * read(k as i64 - 1)
            })
            .collect();
        rows.push(row);
    }
    GBCTable {
        params: params.clone(),
        rows,
    }
}

/// `{n||k}` computed directly, without keeping the table.
pub fn entry(params: &Params, n: usize, k: i64) -> Rat {
    compute_table(params, n)
        .entry(n, k)
        .expect("row n exists in a depth-n table")
}

/// The first-column product `{n||0} = Π_{j=0}^{n-1} (α j + γ)`.
///
/// The recurrence gives column zero no carry term, so it telescopes
/// into this product; exposed for checks and for callers that need
/// column zero without a table.
pub fn first_column_product(params: &Params, n: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..n {
        acc *= &params.alpha * integer(j as i64) + &params.gamma;
    }
    acc
}
