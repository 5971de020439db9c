//! Exact counting formulas for the families: binomials, Catalan, ballot and
//! generalized Catalan numbers. Everything is arbitrary precision.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type ExactInteger = BigInt;

/// Exact binomial coefficient. Out-of-range `r` (negative or above `n`)
/// yields zero.
pub fn binomial(n: u64, r: i64) -> ExactInteger {
    if r < 0 || r as u64 > n {
        return BigInt::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = BigInt::one();
    for i in 0..r {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn exact_div(numerator: ExactInteger, denominator: ExactInteger) -> ExactInteger {
    let quotient = &numerator / &denominator;
    assert!(
        (&quotient * &denominator) == numerator,
        "inexact division {numerator} / {denominator}"
    );
    quotient
}

/// `c_n = binomial(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> ExactInteger {
    exact_div(binomial(2 * n, n as i64), BigInt::from(n + 1))
}

/// `b_{ell,m} = binomial(2 ell + m, ell) - binomial(2 ell + m, ell - 1)`.
pub fn ballot(ell: u64, m: u64) -> ExactInteger {
    let top = 2 * ell + m;
    binomial(top, ell as i64) - binomial(top, ell as i64 - 1)
}

/// `C_{k,gamma}(n) = gamma / (n k + gamma) * binomial(k n + gamma, n)`.
pub fn generalized_catalan(k: u64, gamma: u64, n: u64) -> ExactInteger {
    let top = k * n + gamma;
    exact_div(
        BigInt::from(gamma) * binomial(top, n as i64),
        BigInt::from(top),
    )
}

/// Number of `m`-tree ordered forests with `ell` total edges: `b_{ell, m-1}`.
pub fn forest_count(m: u64, ell: u64) -> ExactInteger {
    if ell == 0 {
        return BigInt::one();
    }
    ballot(ell, m - 1)
}
