//! Partitions as weakly decreasing functions `[n] -> [k]`, the involutions
//! `gamma_m` and `tau_k`, and brute-force enumeration of `P^{n,k}` and the
//! square partitions `P^k_sq`.
//!
//! All public indexing is 1-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::counting::binomial;
use crate::error::{Error, Result};

/// Default upper bound on the number of structures any enumeration may
/// materialize.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "CAP_STRUCTURES";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(pub u64);

impl Default for Cap {
    fn default() -> Self {
        Cap(DEFAULT_CAP)
    }
}

impl Cap {
    /// Reads `CAP_STRUCTURES`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Cap)
            .unwrap_or_default()
    }

    pub fn check(&self, count: &BigInt, what: &str) -> Result<()> {
        if *count > BigInt::from(self.0) {
            return Err(Error::CapExceeded {
                requested: format!("{count} {what}"),
                cap: self.0,
            });
        }
        Ok(())
    }

    pub fn check_len(&self, len: usize, what: &str) -> Result<()> {
        self.check(&BigInt::from(len), what)
    }
}

/// `gamma_m(i) = m + 1 - i`, the order-reversing involution of `[m]`.
pub fn gamma(m: usize, i: usize) -> Result<usize> {
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, max: m });
    }
    Ok(m + 1 - i)
}

/// A weakly decreasing sequence of positive integers with at least one part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a non-positive part"
            )));
        }
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} increases at position {}",
                w + 2
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `mu(i)` for `1 <= i <= n`. Panics outside that range.
    pub fn at(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn get(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.parts.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.parts.len(),
            });
        }
        Ok(self.parts[i - 1])
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    pub fn smallest(&self) -> usize {
        self.parts[self.parts.len() - 1]
    }

    /// Comma-separated wire form, largest part first.
    pub fn to_csv(&self) -> String {
        join_parts(&self.parts)
    }
}

fn join_parts(parts: &[usize]) -> String {
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_parts(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `7,6,5`, `(7,6,5)` and whitespace around parts.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// An element of `P^{n,k}`: a partition with no part exceeding `bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundedPartition {
    partition: Partition,
    bound: usize,
}

impl BoundedPartition {
    pub fn new(parts: Vec<usize>, bound: usize) -> Result<Self> {
        Self::from_partition(Partition::new(parts)?, bound)
    }

    pub fn from_partition(partition: Partition, bound: usize) -> Result<Self> {
        if partition.largest() > bound {
            return Err(Error::InvalidPartition(format!(
                "{partition} has a part larger than the bound {bound}"
            )));
        }
        Ok(BoundedPartition { partition, bound })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_raw(parts: Vec<usize>, bound: usize) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        debug_assert!(parts[0] <= bound);
        BoundedPartition {
            partition: Partition { parts },
            bound,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn parts(&self) -> &[usize] {
        self.partition.parts()
    }

    pub fn len(&self) -> usize {
        self.partition.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn at(&self, i: usize) -> usize {
        self.partition.at(i)
    }

    pub fn tau(&self) -> BoundedPartition {
        tau(self)
    }

    pub fn is_square(&self) -> bool {
        is_square(self)
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

pub(crate) fn tau_parts(parts: &[usize], bound: usize) -> Vec<usize> {
    parts.iter().rev().map(|&p| bound + 1 - p).collect()
}

/// `tau(mu_1, ..., mu_n) = (k+1-mu_n, ..., k+1-mu_1)` with `k` the bound.
pub fn tau(mu: &BoundedPartition) -> BoundedPartition {
    BoundedPartition::from_raw(tau_parts(mu.parts(), mu.bound), mu.bound)
}

/// Membership in `P^k_sq`: `k` parts, bound `k`, first part `k`, last part 1.
pub fn is_square(mu: &BoundedPartition) -> bool {
    let k = mu.bound;
    mu.len() == k && mu.partition.largest() == k && mu.partition.smallest() == 1
}

/// An element of `P^k_sq`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarePartition(BoundedPartition);

impl SquarePartition {
    /// Builds a square partition; `k` is the number of parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let k = parts.len();
        let bp = BoundedPartition::new(parts, k)?;
        Self::try_from(bp)
    }

    pub fn k(&self) -> usize {
        self.0.bound
    }

    pub fn as_bounded(&self) -> &BoundedPartition {
        &self.0
    }

    pub fn into_bounded(self) -> BoundedPartition {
        self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn tau(&self) -> SquarePartition {
        SquarePartition(tau(&self.0))
    }

    pub fn is_self_dual(&self) -> bool {
        is_self_dual(self)
    }

    /// The lexicographically larger of `{lambda, tau(lambda)}`.
    pub fn orbit_representative(&self) -> SquarePartition {
        let t = self.tau();
        if t.parts() > self.parts() {
            t
        } else {
            self.clone()
        }
    }
}

impl TryFrom<BoundedPartition> for SquarePartition {
    type Error = Error;

    fn try_from(bp: BoundedPartition) -> Result<Self> {
        if !is_square(&bp) {
            return Err(Error::InvalidPartition(format!(
                "{bp} with bound {} is not a square partition",
                bp.bound
            )));
        }
        Ok(SquarePartition(bp))
    }
}

impl FromStr for SquarePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SquarePartition::new(s.parse::<Partition>()?.into_parts())
    }
}

impl fmt::Display for SquarePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_self_dual(lambda: &SquarePartition) -> bool {
    tau_parts(lambda.parts(), lambda.k()) == lambda.parts()
}

/// Pushes every weakly decreasing sequence of `len` values in `[1, max]`
/// onto `out`, extending `prefix`, in lexicographically decreasing order.
fn decreasing_sequences(
    prefix: &mut Vec<usize>,
    len: usize,
    max: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if len == 0 {
        out.push(prefix.clone());
        return;
    }
    for v in (1..=max).rev() {
        prefix.push(v);
        decreasing_sequences(prefix, len - 1, v, out);
        prefix.pop();
    }
}

/// All of `P^{n,k}` in lexicographically decreasing order.
pub fn enumerate_pnk(n: usize, k: usize, cap: Cap) -> Result<Vec<BoundedPartition>> {
    if n == 0 || k == 0 {
        return Err(Error::Precondition(format!(
            "P^{{n,k}} needs n, k >= 1 (got n={n}, k={k})"
        )));
    }
    cap.check(&binomial((n + k - 1) as u64, n as i64), "partitions")?;
    let mut raw = Vec::new();
    decreasing_sequences(&mut Vec::with_capacity(n), n, k, &mut raw);
    Ok(raw
        .into_iter()
        .map(|p| BoundedPartition::from_raw(p, k))
        .collect())
}

/// All of `P^k_sq` in lexicographically decreasing order.
pub fn enumerate_square(k: usize, cap: Cap) -> Result<Vec<SquarePartition>> {
    if k == 0 {
        return Err(Error::Precondition("P^k_sq needs k >= 1".into()));
    }
    if k == 1 {
        return Ok(vec![SquarePartition(BoundedPartition::from_raw(vec![1], 1))]);
    }
    cap.check(
        &binomial((2 * k - 4) as u64, (k - 2) as i64),
        "square partitions",
    )?;
    let mut middles = Vec::new();
    decreasing_sequences(&mut Vec::with_capacity(k), k - 2, k, &mut middles);
    Ok(middles
        .into_iter()
        .map(|mid| {
            let mut parts = Vec::with_capacity(k);
            parts.push(k);
            parts.extend(mid);
            parts.push(1);
            SquarePartition(BoundedPartition::from_raw(parts, k))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn bp(parts: &[usize], k: usize) -> BoundedPartition {
        BoundedPartition::new(parts.to_vec(), k).unwrap()
    }

    /// Every sequence in `[1,k]^n`, filtered to weakly decreasing ones.
    fn brute_force_pnk(n: usize, k: usize) -> HashSet<Vec<usize>> {
        let mut out = HashSet::new();
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let seq: Vec<usize> = (0..n)
                .map(|_| {
                    let v = c % k + 1;
                    c /= k;
                    v
                })
                .collect();
            if seq.windows(2).all(|w| w[0] >= w[1]) {
                out.insert(seq);
            }
        }
        out
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(5, 1).unwrap(), 5);
        assert_eq!(gamma(5, 3).unwrap(), 3);
        assert_eq!(gamma(14, 3).unwrap(), 12);
        assert!(gamma(5, 0).is_err());
        assert!(gamma(5, 6).is_err());
    }

    #[test]
    fn gamma_is_order_reversing_involution() {
        for m in 1..=12 {
            for i in 1..=m {
                assert_eq!(gamma(m, gamma(m, i).unwrap()).unwrap(), i);
                for j in i + 1..=m {
                    assert!(gamma(m, i).unwrap() > gamma(m, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&bp(&[3, 1, 1], 3)), bp(&[3, 3, 1], 3));
        let mu = bp(&[11, 11, 11, 11, 10, 9, 9, 9, 9, 9, 9, 7, 7, 3], 14);
        assert_eq!(
            tau(&mu),
            bp(&[12, 8, 8, 6, 6, 6, 6, 6, 6, 5, 4, 4, 4, 4], 14)
        );
        assert_eq!(tau(&tau(&mu)), mu);
        // tau depends on the bound, not only on the parts
        assert_eq!(tau(&bp(&[1], 1)), bp(&[1], 1));
        assert_eq!(tau(&bp(&[1], 3)), bp(&[3], 3));
    }

    #[test]
    fn tau_exhaustive_properties() {
        for n in 1..=6 {
            for k in 1..=6 {
                let all = enumerate_pnk(n, k, Cap::default()).unwrap();
                let set: HashSet<_> = all.iter().cloned().collect();
                for mu in &all {
                    let t = tau(mu);
                    assert_eq!(tau(&t), *mu);
                    assert!(set.contains(&t));
                    for i in 1..=n {
                        let composed =
                            gamma(k, mu.at(gamma(n, i).unwrap())).unwrap();
                        assert_eq!(t.at(i), composed);
                    }
                }
            }
        }
        for k in 1..=7 {
            let squares = enumerate_square(k, Cap::default()).unwrap();
            let set: HashSet<_> = squares.iter().cloned().collect();
            for s in &squares {
                assert!(set.contains(&s.tau()));
            }
        }
    }

    #[test]
    fn square_and_self_dual() {
        assert!(is_square(&bp(&[3, 2, 1], 3)));
        assert!(!is_square(&bp(&[3, 3, 3], 3)));
        assert!(!is_square(&bp(&[7, 6, 5, 3, 3, 3, 3, 3, 3, 1], 10)));
        assert!(SquarePartition::new(vec![2, 1]).unwrap().is_self_dual());
        assert!(!SquarePartition::new(vec![3, 1, 1]).unwrap().is_self_dual());
        assert!(SquarePartition::new(vec![1]).unwrap().is_self_dual());
        assert!(SquarePartition::new(vec![3, 3, 3]).is_err());
    }

    #[test]
    fn enumerate_pnk_examples_and_counts() {
        let one = enumerate_pnk(1, 3, Cap::default()).unwrap();
        let parts: Vec<_> = one.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(parts, vec![vec![3], vec![2], vec![1]]);
        let two = enumerate_pnk(2, 2, Cap::default()).unwrap();
        let parts: Vec<_> = two.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(parts, vec![vec![2, 2], vec![2, 1], vec![1, 1]]);
        assert_eq!(enumerate_pnk(4, 4, Cap::default()).unwrap().len(), 35);
        for n in 1..=5 {
            for k in 1..=5 {
                let got = enumerate_pnk(n, k, Cap::default()).unwrap();
                let set: HashSet<Vec<usize>> =
                    got.iter().map(|p| p.parts().to_vec()).collect();
                assert_eq!(set.len(), got.len());
                assert_eq!(set, brute_force_pnk(n, k));
                assert_eq!(
                    BigInt::from(got.len()),
                    binomial((n + k - 1) as u64, n as i64)
                );
                assert!(got.windows(2).all(|w| w[0].parts() > w[1].parts()));
            }
        }
    }

    #[test]
    fn enumerate_square_examples() {
        let one = enumerate_square(1, Cap::default()).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].parts(), &[1]);
        let three: Vec<_> = enumerate_square(3, Cap::default())
            .unwrap()
            .iter()
            .map(|s| s.parts().to_vec())
            .collect();
        assert_eq!(three, vec![vec![3, 3, 1], vec![3, 2, 1], vec![3, 1, 1]]);
        for k in 2..=8 {
            let brute = brute_force_pnk(k, k)
                .into_iter()
                .filter(|p| p[0] == k && p[k - 1] == 1)
                .count();
            let got = enumerate_square(k, Cap::default()).unwrap().len();
            assert_eq!(got, brute);
            assert_eq!(
                BigInt::from(got),
                binomial((2 * k - 3) as u64, (k - 2) as i64)
            );
        }
        assert_eq!(enumerate_square(4, Cap::default()).unwrap().len(), 10);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_pnk(10, 10, Cap(100)),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_pnk(3, 3, Cap(10)).is_ok());
    }

    #[test]
    fn parse_and_validate() {
        let p: Partition = "7,6,5,3,3,3,3,3,3,1".parse().unwrap();
        assert_eq!(p.len(), 10);
        assert_eq!(p.to_csv(), "7,6,5,3,3,3,3,3,3,1");
        assert_eq!(p.to_string(), "(7,6,5,3,3,3,3,3,3,1)");
        assert_eq!("(3, 1, 1)".parse::<Partition>().unwrap().parts(), &[3, 1, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
        assert!(BoundedPartition::new(vec![4, 1], 3).is_err());
    }

    #[test]
    fn orbit_representative_is_larger() {
        let l = SquarePartition::new(vec![3, 1, 1]).unwrap();
        assert_eq!(l.orbit_representative().parts(), &[3, 3, 1]);
        assert_eq!(l.tau().orbit_representative().parts(), &[3, 3, 1]);
    }
}
