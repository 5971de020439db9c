//! Closed membership tests for the recursively defined families.
//!
//! For `P^ell(lambda)` every `mu` in `P^ell` carries a unique embedded square:
//! `b` and `b + k - 1` are the smallest and largest fixed points of `mu∘mu`,
//! and the `k x k` block they cut out is the core. For `P^ell(Omega_m)` the
//! test runs on the compressed map `mu~(i) = t(i, mu(i))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{BoundedPartition, SquarePartition};

/// Location and shape of the square embedded in a partition of `P^ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCoreWitness {
    pub b: usize,
    pub k: usize,
    pub core: SquarePartition,
}

impl fmt::Display for SquareCoreWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b={} k={} core={}", self.b, self.k, self.core)
    }
}

fn require_square_shape(mu: &BoundedPartition) -> Result<usize> {
    let ell = mu.len();
    if mu.bound() != ell {
        return Err(Error::Precondition(format!(
            "{mu} must lie in P^{ell} (bound {ell}), got bound {}",
            mu.bound()
        )));
    }
    Ok(ell)
}

/// Finds `(b, k, core)` by iterating `j -> mu(mu(j))` from `j = 1`.
pub fn find_square_core(mu: &BoundedPartition) -> Result<SquareCoreWitness> {
    let ell = require_square_shape(mu)?;
    let mm = |j: usize| mu.at(mu.at(j));
    let mut b = 1;
    let mut steps = 0;
    loop {
        let next = mm(b);
        if next == b {
            break;
        }
        debug_assert!(next > b, "mu∘mu is increasing along the orbit of 1");
        b = next;
        steps += 1;
        assert!(steps <= ell, "mu∘mu orbit of 1 failed to stabilize");
    }
    let top = mu.at(b);
    let k = top + 1 - b;
    assert!(
        b + k - 1 <= ell && b <= ell + 1 - k,
        "witness b={b} k={k} escapes [ell-k+1] for {mu}"
    );
    let core_parts = (1..=k).map(|i| mu.at(b + i - 1) + 1 - b).collect();
    let core = SquarePartition::new(core_parts)
        .expect("block cut out by the extreme fixed points of mu∘mu is square");
    Ok(SquareCoreWitness { b, k, core })
}

/// Conditions (i)-(iii) of the square characterization for a given `(b, k)`,
/// checked literally. Empty index ranges are vacuously satisfied.
pub fn satisfies_square_conditions(mu: &BoundedPartition, b: usize, k: usize) -> bool {
    let ell = mu.len();
    if b == 0 || k == 0 || b + k - 1 > ell {
        return false;
    }
    let top = b + k - 1;
    let mm = |i: usize| mu.at(mu.at(i));
    mu.at(b) == top
        && mu.at(top) == b
        && (1..b).all(|i| mm(i) > i)
        && (top + 1..=ell).all(|i| mm(i) < i)
}

/// `mu ∈ P^ell(lambda)`, via witness extraction and core comparison.
pub fn member_square(mu: &BoundedPartition, lambda: &SquarePartition) -> Result<bool> {
    let ell = require_square_shape(mu)?;
    if lambda.k() > ell {
        return Err(Error::Precondition(format!(
            "core size {} exceeds part count {ell}",
            lambda.k()
        )));
    }
    let w = find_square_core(mu)?;
    debug_assert!(satisfies_square_conditions(mu, w.b, w.k));
    Ok(w.k == lambda.k() && (w.core == *lambda || w.core == lambda.tau()))
}

/// Collapses the embedded `k x k` square to a single fixed point, landing in
/// `P^{ell-k+1}((1))`.
pub fn theta(mu: &BoundedPartition) -> Result<BoundedPartition> {
    let w = find_square_core(mu)?;
    Ok(theta_with(mu, &w))
}

fn theta_with(mu: &BoundedPartition, w: &SquareCoreWitness) -> BoundedPartition {
    let (b, k) = (w.b, w.k);
    let ell = mu.len();
    let n = ell - k + 1;
    let parts = (1..=n)
        .map(|i| {
            if i <= b {
                mu.at(i) + 1 - k
            } else {
                mu.at(i + k - 1)
            }
        })
        .collect();
    BoundedPartition::from_raw(parts, n)
}

/// Every `mu ∈ P^ell(lambda)` with `theta(mu) = nu`, where
/// `ell = len(nu) + k - 1`. One element for self-dual `lambda`, two otherwise.
pub fn theta_fiber(nu: &BoundedPartition, lambda: &SquarePartition) -> Result<Vec<BoundedPartition>> {
    let wn = find_square_core(nu)?;
    if wn.k != 1 {
        return Err(Error::NotInDomain(format!(
            "{nu} has core {} rather than (1)",
            wn.core
        )));
    }
    let b = wn.b;
    let k = lambda.k();
    let n = nu.len();
    let ell = n + k - 1;
    let mut cores = vec![lambda.clone()];
    if !lambda.is_self_dual() {
        cores.push(lambda.tau());
    }
    let fiber = cores
        .iter()
        .map(|core| {
            let mut parts = Vec::with_capacity(ell);
            parts.extend((1..b).map(|i| nu.at(i) + k - 1));
            parts.extend(core.parts().iter().map(|&c| c + b - 1));
            parts.extend((b + 1..=n).map(|i| nu.at(i)));
            let mu = BoundedPartition::from_raw(parts, ell);
            debug_assert_eq!(theta(&mu).ok().as_ref(), Some(nu));
            mu
        })
        .collect();
    Ok(fiber)
}

/// The compression `t : [ell] x [ell+m-1] -> [ell]`.
pub fn compress_t(r: usize, s: usize, ell: usize, m: usize) -> Result<usize> {
    if r == 0 || r > ell {
        return Err(Error::IndexOutOfRange { index: r, max: ell });
    }
    if s == 0 || s > ell + m - 1 {
        return Err(Error::IndexOutOfRange {
            index: s,
            max: ell + m - 1,
        });
    }
    Ok(compress_unchecked(r, s, m))
}

fn compress_unchecked(r: usize, s: usize, m: usize) -> usize {
    if s < r {
        s
    } else if s < m + r {
        r
    } else {
        s + 1 - m
    }
}

/// `mu~`, the pointwise compression of a partition in `P^{ell, ell+m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedMap {
    values: Vec<usize>,
    m: usize,
}

/// The index sets `L = {mu~(i) > i}`, `M = {mu~(i) = i}`, `H = {mu~(i) < i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexClasses {
    pub low: Vec<usize>,
    pub fixed: Vec<usize>,
    pub high: Vec<usize>,
}

impl IndexClasses {
    /// Whether the three sets are contiguous and appear in the order L, M, H.
    pub fn are_ordered_intervals(&self) -> bool {
        let all: Vec<usize> = self
            .low
            .iter()
            .chain(&self.fixed)
            .chain(&self.high)
            .copied()
            .collect();
        all.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

impl CompressedMap {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `mu~(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Condition (i): `mu~(i) > i` implies `mu~(mu~(i)) > i`.
    pub fn rising_condition(&self) -> bool {
        (1..=self.len()).all(|i| {
            let v = self.at(i);
            v <= i || self.at(v) > i
        })
    }

    /// Condition (ii): `mu~(i) < i` implies `mu~(mu~(i)) < i`.
    pub fn falling_condition(&self) -> bool {
        (1..=self.len()).all(|i| {
            let v = self.at(i);
            v >= i || self.at(v) < i
        })
    }

    pub fn classes(&self) -> IndexClasses {
        let mut c = IndexClasses {
            low: Vec::new(),
            fixed: Vec::new(),
            high: Vec::new(),
        };
        for i in 1..=self.len() {
            let v = self.at(i);
            match v.cmp(&i) {
                std::cmp::Ordering::Greater => c.low.push(i),
                std::cmp::Ordering::Equal => c.fixed.push(i),
                std::cmp::Ordering::Less => c.high.push(i),
            }
        }
        c
    }
}

fn require_omega_shape(mu: &BoundedPartition, m: usize) -> Result<usize> {
    let ell = mu.len();
    if m == 0 || mu.bound() != ell + m - 1 {
        return Err(Error::Precondition(format!(
            "{mu} must lie in P^{{{ell},{}}} for m={m}, got bound {}",
            ell + m.max(1) - 1,
            mu.bound()
        )));
    }
    Ok(ell)
}

pub fn mu_tilde(mu: &BoundedPartition, m: usize) -> Result<CompressedMap> {
    let ell = require_omega_shape(mu, m)?;
    let values = (1..=ell)
        .map(|i| compress_unchecked(i, mu.at(i), m))
        .collect();
    Ok(CompressedMap { values, m })
}

/// `mu ∈ P^ell(Omega_m)`.
pub fn member_omega(mu: &BoundedPartition, m: usize) -> Result<bool> {
    let tilde = mu_tilde(mu, m)?;
    Ok(tilde.rising_condition() && tilde.falling_condition())
}
