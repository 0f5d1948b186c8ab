//! Generalized binomial coefficient triangles in exact rational
//! arithmetic: the six-parameter recurrence, its closed forms, row
//! polynomials with Sturm real-rootedness certificates, and the Q_k
//! distribution family.
//!
//! A six-tuple (α, β, γ, α′, β′, γ′) of rationals defines a triangle
//! `{n||k}` by
//!
//! ```text
//! {n+1||k} = (α n + β k + γ) {n||k} + (α′ n + β′ k + γ′) {n||k-1},
//! {0||k} = [k = 0],
//! ```
//!
//! specializing to binomial coefficients, both kinds of Stirling
//! numbers, and Eulerian numbers. Every closed form in the crate is
//! cross-checked against this recurrence, and everything outside the
//! quarantined series evaluator is exact.
//!
//! ## Start with the examples
//!
//! ```text
//! examples/
//! ├── classical_triangles.rs   # the four classical specializations and row sums
//! ├── closed_forms.rs          # the α′ = 0 factorization and the {4||2} displays
//! ├── row_polynomials.rs       # φ_n, the reality theorem, and the counterexample
//! ├── qk_distribution.rs       # Q_k four ways, densities, Gosper certificate
//! └── row_sums.rs              # exact ρ(n) vs the truncated series
//! ```
//!
//! ```bash
//! cargo run --example classical_triangles
//! cargo run --example closed_forms
//! cargo run --example row_polynomials
//! cargo run --example qk_distribution
//! cargo run --example row_sums
//! ```
//!
//! ## Or the CLI
//!
//! ```bash
//! cargo run -- triangle --params 0,0,1,0,0,1 --max-n 4 --format csv
//! cargo run -- phi --params 3,1,1,0,1,0 --n 3
//! cargo run -- roots --params 3,1,1,0,1,0 --n 3 --format json
//! cargo run -- qk --n 5 --k 1 --form all
//! cargo run -- rowsum-series --params 1,1,1,0,1,1 --n 3
//! ```
//!
//! ## Library map
//!
//! - [`numeric`]: rationals and the classical special numbers
//! - [`poly`]: dense polynomials over the rationals
//! - [`triangle`]: the recurrence engine, the ground truth
//! - [`closed_form`]: α′ = 0 closed forms and the row-sum series
//! - [`rowpoly`]: φ_n and exact real-rootedness certificates
//! - [`qk`]: the Q_k family
//! - [`fixedpoint`]: dyadic fixed point backing the series evaluator
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod fixedpoint;
pub mod numeric;
pub mod poly;
pub mod qk;
pub mod rowpoly;
pub mod triangle;

pub use closed_form::{
    expanded_coefficient, gbc_factored, gbc_hyper, row_sum_series, FactoredValue,
    SeriesEvaluation,
};
pub use error::Error;
pub use fixedpoint::FixedPoint;
pub use numeric::{
    bell, binomial, factorial, rising_factorial, stirling_first_unsigned, stirling_second, Rat,
};
pub use poly::Poly;
pub use qk::{
    density, gosper_certificate_check, qk_form1, qk_form2, qk_form3, qk_recurrence, QkSpec,
};
pub use rowpoly::{
    certify_all_real, negativity_check, phi, phi_product_form, sturm_distinct_real_roots,
    RealityCertificate,
};
pub use triangle::{compute_table, entry, first_column_product, GBCTable, Params};
