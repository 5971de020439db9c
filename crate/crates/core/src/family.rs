//! Recursive generation of the families `P^ell(lambda)` (grown from a square
//! core) and `P^ell(Omega_m)` (grown from the one-part partitions `(1)..(m)`):
//! append one part no larger than the current last part, then close the new
//! level under `tau`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::counting::{ballot, catalan};
use crate::error::{Error, Result};
use crate::partition::{tau_parts, BoundedPartition, Cap, SquarePartition};

/// Which family an operation addresses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    SquareCore { lambda: SquarePartition, ell: usize },
    Omega { m: usize, ell: usize },
}

impl FamilyDescriptor {
    pub fn square(lambda: SquarePartition, ell: usize) -> Result<Self> {
        if ell < lambda.k() {
            return Err(Error::Precondition(format!(
                "target parts {ell} is smaller than core size {}",
                lambda.k()
            )));
        }
        Ok(FamilyDescriptor::SquareCore { lambda, ell })
    }

    pub fn omega(m: usize, ell: usize) -> Result<Self> {
        if m == 0 || ell == 0 {
            return Err(Error::Precondition(format!(
                "Omega families need m, ell >= 1 (got m={m}, ell={ell})"
            )));
        }
        Ok(FamilyDescriptor::Omega { m, ell })
    }

    pub fn ell(&self) -> usize {
        match self {
            FamilyDescriptor::SquareCore { ell, .. } | FamilyDescriptor::Omega { ell, .. } => *ell,
        }
    }

    /// Largest part any member may have.
    pub fn bound(&self) -> usize {
        match self {
            FamilyDescriptor::SquareCore { ell, .. } => *ell,
            FamilyDescriptor::Omega { m, ell } => ell + m - 1,
        }
    }

    /// The cardinality the counting theorems predict.
    pub fn predicted_count(&self) -> BigInt {
        match self {
            FamilyDescriptor::SquareCore { lambda, ell } => {
                let c = catalan((ell - lambda.k() + 1) as u64);
                if lambda.is_self_dual() {
                    c
                } else {
                    c * 2
                }
            }
            FamilyDescriptor::Omega { m, ell } => ballot(*ell as u64, (*m - 1) as u64),
        }
    }

    /// Human-readable name of the predicted count, e.g. `c_4`, `2*c_2`,
    /// `b_{2,1}`.
    pub fn predicted_symbol(&self) -> String {
        match self {
            FamilyDescriptor::SquareCore { lambda, ell } => {
                let n = ell - lambda.k() + 1;
                if lambda.is_self_dual() {
                    format!("c_{n}")
                } else {
                    format!("2*c_{n}")
                }
            }
            FamilyDescriptor::Omega { m, ell } => format!("b_{{{ell},{}}}", m - 1),
        }
    }

    pub fn generate(&self, cap: Cap) -> Result<PartitionSet> {
        match self {
            FamilyDescriptor::SquareCore { lambda, ell } => grow_square_family(lambda, *ell, cap),
            FamilyDescriptor::Omega { m, ell } => grow_omega_family(*m, *ell, cap),
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyDescriptor::SquareCore { lambda, ell } => write!(f, "P^{ell}{lambda}"),
            FamilyDescriptor::Omega { m, ell } => write!(f, "P^{ell}(Omega_{m})"),
        }
    }
}

/// A deduplicated set of partitions sharing part count and bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSet {
    ell: usize,
    bound: usize,
    elements: BTreeSet<Vec<usize>>,
}

impl PartitionSet {
    fn from_raw(ell: usize, bound: usize, elements: BTreeSet<Vec<usize>>) -> Self {
        PartitionSet {
            ell,
            bound,
            elements,
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, mu: &BoundedPartition) -> bool {
        mu.bound() == self.bound && self.elements.contains(mu.parts())
    }

    pub fn contains_parts(&self, parts: &[usize]) -> bool {
        self.elements.contains(parts)
    }

    /// Members in canonical (lexicographically decreasing) order.
    pub fn iter(&self) -> impl Iterator<Item = BoundedPartition> + '_ {
        self.elements
            .iter()
            .rev()
            .map(move |p| BoundedPartition::from_raw(p.clone(), self.bound))
    }

    pub fn raw_parts(&self) -> impl Iterator<Item = &[usize]> {
        self.elements.iter().rev().map(Vec::as_slice)
    }

    pub fn to_vec(&self) -> Vec<BoundedPartition> {
        self.iter().collect()
    }

    /// `tau` applied to every member, with this set's bound.
    pub fn tau_image(&self) -> PartitionSet {
        let elements = self
            .elements
            .iter()
            .map(|p| tau_parts(p, self.bound))
            .collect();
        PartitionSet::from_raw(self.ell, self.bound, elements)
    }
}

/// `(nu : j)`: appends the part `j`, which must not exceed the last part.
pub fn augment(nu: &BoundedPartition, j: usize) -> Result<BoundedPartition> {
    let last = nu.partition().smallest();
    if j == 0 || j > last {
        return Err(Error::Precondition(format!(
            "cannot append {j} to {nu}: must lie in [1, {last}]"
        )));
    }
    let mut parts = nu.parts().to_vec();
    parts.push(j);
    Ok(BoundedPartition::from_raw(parts, nu.bound()))
}

/// One recursion step: every legal augmentation of every member, then the
/// `tau_{bound}` image of those.
fn next_level(prev: &BTreeSet<Vec<usize>>, bound: usize, cap: Cap) -> Result<BTreeSet<Vec<usize>>> {
    let mut next = BTreeSet::new();
    for nu in prev {
        let last = *nu.last().expect("nonempty");
        for j in 1..=last {
            let mut mu = Vec::with_capacity(nu.len() + 1);
            mu.extend_from_slice(nu);
            mu.push(j);
            let t = tau_parts(&mu, bound);
            next.insert(mu);
            next.insert(t);
        }
        cap.check_len(next.len(), "partitions")?;
    }
    Ok(next)
}

/// `P^ell(lambda)`, bound `ell`.
pub fn grow_square_family(lambda: &SquarePartition, ell: usize, cap: Cap) -> Result<PartitionSet> {
    let k = lambda.k();
    if ell < k {
        return Err(Error::Precondition(format!(
            "target parts {ell} is smaller than core size {k}"
        )));
    }
    let mut level: BTreeSet<Vec<usize>> = BTreeSet::new();
    level.insert(lambda.parts().to_vec());
    level.insert(lambda.tau().parts().to_vec());
    for bound in k + 1..=ell {
        level = next_level(&level, bound, cap)?;
    }
    Ok(PartitionSet::from_raw(ell, ell, level))
}

/// `P^ell(Omega_m)`, bound `ell + m - 1`.
pub fn grow_omega_family(m: usize, ell: usize, cap: Cap) -> Result<PartitionSet> {
    if m == 0 || ell == 0 {
        return Err(Error::Precondition(format!(
            "Omega families need m, ell >= 1 (got m={m}, ell={ell})"
        )));
    }
    let mut level: BTreeSet<Vec<usize>> = (1..=m).map(|j| vec![j]).collect();
    for parts in 2..=ell {
        level = next_level(&level, parts + m - 1, cap)?;
    }
    Ok(PartitionSet::from_raw(ell, ell + m - 1, level))
}

/// Union of `P^ell(lambda)` over one representative per `tau`-orbit of square
/// cores with `k <= ell`, keyed by representative. Members of different
/// families are returned separately so disjointness can be checked.
pub fn families_by_orbit(ell: usize, cap: Cap) -> Result<Vec<(SquarePartition, PartitionSet)>> {
    let mut out = Vec::new();
    for k in 1..=ell {
        for lambda in crate::partition::enumerate_square(k, cap)? {
            if lambda.orbit_representative() != lambda {
                continue;
            }
            let fam = grow_square_family(&lambda, ell, cap)?;
            out.push((lambda, fam));
        }
    }
    Ok(out)
}
