//! Exact scalars and the classical special numbers.
//!
//! Every quantity in this crate is an arbitrary-precision rational
//! ([`Rat`]); there is no floating point outside the quarantined
//! fixed-point series evaluator. This module provides:
//!
//! - [`Rat`]: the universal scalar, kept in canonical form
//!   (reduced, positive denominator) by `num-rational`
//! - [`binomial`], [`factorial`], [`rising_factorial`]
//! - [`stirling_first_unsigned`], [`stirling_second`], [`bell`]
//!
//! The special numbers are memoized in per-thread triangular tables,
//! since the closed-form evaluators read them densely. Out-of-range
//! indices (`k < 0` or `k > n`) return 0 rather than erroring; the
//! multi-index sums in the closed forms rely on that convention.

use std::cell::RefCell;
use std::thread::LocalKey;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed rational, the universal scalar.
///
/// Serialized everywhere as `"p/q"`, or `"p"` when the denominator is 1,
/// with an optional leading minus; that is exactly the `Display`/`FromStr`
/// behaviour of `num-rational`.
pub type Rat = BigRational;

/// Shorthand for `p/q` as a [`Rat`]. Panics if `q == 0`.
pub fn rational(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer as a [`Rat`].
pub fn integer(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `r^e` for a signed exponent. Panics on `0^e` with `e < 0`.
pub fn rat_pow(r: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut base = if e > 0 {
        r.clone()
    } else {
        assert!(!r.is_zero(), "rat_pow: zero base with negative exponent");
        r.recip()
    };
    let mut exp = e.unsigned_abs();
    let mut acc = Rat::one();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    acc
}

type Triangle = RefCell<Vec<Vec<BigInt>>>;

thread_local! {
    static PASCAL: Triangle = RefCell::new(vec![vec![BigInt::one()]]);
    static STIRLING1: Triangle = RefCell::new(vec![vec![BigInt::one()]]);
    static STIRLING2: Triangle = RefCell::new(vec![vec![BigInt::one()]]);
    static FACTORIAL: RefCell<Vec<BigInt>> = RefCell::new(vec![BigInt::one()]);
}

/// Reads entry (n, k) of a memoized triangle, growing it as needed.
/// `step(n, prev, k)` produces entry k of row n from row n-1.
fn triangle_entry(
    cache: &'static LocalKey<Triangle>,
    n: usize,
    k: i64,
    step: fn(usize, &[BigInt], usize) -> BigInt,
) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = k as usize;
    cache.with(|c| {
        let mut rows = c.borrow_mut();
        while rows.len() <= n {
            let m = rows.len();
            let prev = rows.last().expect("triangle cache seeded with row 0");
            let row: Vec<BigInt> = (0..=m).map(|j| step(m, prev, j)).collect();
            rows.push(row);
        }
        rows[n][k].clone()
    })
}

fn at(row: &[BigInt], j: i64) -> BigInt {
    if j < 0 || j as usize >= row.len() {
        BigInt::zero()
    } else {
        row[j as usize].clone()
    }
}

/// Binomial coefficient C(n, k); 0 when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    triangle_entry(&PASCAL, n, k, |_, prev, j| {
        at(prev, j as i64 - 1) + at(prev, j as i64)
    })
}

/// Unsigned Stirling number of the first kind: permutations of n
/// elements with k cycles. Recurrence c(n+1, k) = n c(n, k) + c(n, k-1).
pub fn stirling_first_unsigned(n: usize, k: i64) -> BigInt {
    triangle_entry(&STIRLING1, n, k, |m, prev, j| {
        at(prev, j as i64) * BigInt::from(m - 1) + at(prev, j as i64 - 1)
    })
}

/// Stirling number of the second kind: partitions of an n-set into k
/// nonempty blocks. Recurrence S(n+1, k) = k S(n, k) + S(n, k-1).
pub fn stirling_second(n: usize, k: i64) -> BigInt {
    triangle_entry(&STIRLING2, n, k, |_, prev, j| {
        at(prev, j as i64) * BigInt::from(j) + at(prev, j as i64 - 1)
    })
}

/// Bell number: the number of partitions of an n-set.
pub fn bell(n: usize) -> BigInt {
    (0..=n as i64).map(|k| stirling_second(n, k)).sum()
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    FACTORIAL.with(|c| {
        let mut v = c.borrow_mut();
        while v.len() <= n {
            let m = v.len();
            let next = v.last().expect("factorial cache seeded") * BigInt::from(m);
            v.push(next);
        }
        v[n].clone()
    })
}

/// Rising factorial x(x+1)(x+2)...(x+n-1); 1 when n = 0.
pub fn rising_factorial(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
