//! Randomized invariants at sizes beyond the exhaustive sweeps.

use proptest::prelude::*;

use catalan_families::bijection::{
    forest_to_partition, pair_to_partition, partition_to_forest, partition_to_pair, tau_on_pair,
};
use catalan_families::closed_form::{find_square_core, member_square, mu_tilde, theta};
use catalan_families::counting::{ballot, binomial, catalan, generalized_catalan};
use catalan_families::partition::{tau, BoundedPartition};
use catalan_families::render::{labeled_pair_from_dot, labeled_pair_to_dot};
use catalan_families::tree::{attach, cut, Forest, ForestSlot, PlaneTree, TreePair};

fn partition(max_len: usize, max_bound: usize) -> impl Strategy<Value = BoundedPartition> {
    (1..=max_len, 1..=max_bound).prop_flat_map(|(n, k)| {
        proptest::collection::vec(1..=k, n).prop_map(move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            BoundedPartition::new(v, k).unwrap()
        })
    })
}

/// Square partitions with `n` parts, i.e. members of `P^n`.
fn square_bounded(max_len: usize) -> impl Strategy<Value = BoundedPartition> {
    (1..=max_len).prop_flat_map(|n| {
        proptest::collection::vec(1..=n, n).prop_map(move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            BoundedPartition::new(v, n).unwrap()
        })
    })
}

fn plane_tree(max_edges: u32) -> impl Strategy<Value = PlaneTree> {
    let leaf = Just(PlaneTree::leaf());
    leaf.prop_recursive(6, max_edges, 4, |inner| {
        proptest::collection::vec(inner, 0..4).prop_map(PlaneTree::with_children)
    })
}

/// The partition a pair of trees maps to; all of `P^ell(1)` is reachable.
fn pair_partition() -> impl Strategy<Value = BoundedPartition> {
    (plane_tree(10), plane_tree(10)).prop_map(|(a, b)| {
        let pair = TreePair::new(a, b);
        pair_to_partition(&pair, pair.edges() + 1).unwrap()
    })
}

proptest! {
    #[test]
    fn tau_is_an_involution(mu in partition(20, 20)) {
        let t = tau(&mu);
        prop_assert_eq!(t.bound(), mu.bound());
        prop_assert_eq!(tau(&t), mu);
    }

    #[test]
    fn every_partition_has_one_core(mu in square_bounded(25)) {
        let w = find_square_core(&mu).unwrap();
        let ell = mu.len();
        prop_assert!(w.b + w.k - 1 <= ell);
        prop_assert!(member_square(&mu, &w.core).unwrap());
        prop_assert!(member_square(&mu, &w.core.tau()).unwrap());
        let wt = find_square_core(&tau(&mu)).unwrap();
        prop_assert_eq!(wt.b, ell + 2 - w.k - w.b);
        prop_assert_eq!(wt.core, w.core.tau());
        let nu = theta(&mu).unwrap();
        prop_assert_eq!(nu.len(), ell - w.k + 1);
        prop_assert_eq!(nu.at(w.b), w.b);
    }

    #[test]
    fn pair_bijection_round_trips(a in plane_tree(12), b in plane_tree(12)) {
        let pair = TreePair::new(a, b);
        let ell = pair.edges() + 1;
        let mu = pair_to_partition(&pair, ell).unwrap();
        let labeled = partition_to_pair(&mu).unwrap();
        prop_assert_eq!(labeled.shape(), pair);
        prop_assert_eq!(labeled_pair_from_dot(&labeled_pair_to_dot(&labeled)).unwrap(), labeled.clone());
        prop_assert_eq!(tau_on_pair(&labeled), partition_to_pair(&tau(&mu)).unwrap());
    }

    #[test]
    fn cut_inverts_attach(a in plane_tree(15), b in plane_tree(15)) {
        let pair = TreePair::new(a, b);
        let t = attach(&pair);
        prop_assert_eq!(cut(&t).unwrap(), pair);
    }

    #[test]
    fn forest_bijection_round_trips(trees in proptest::collection::vec(plane_tree(6), 1..5)) {
        let forest = Forest::new(trees.into_iter().map(ForestSlot::from_tree).collect()).unwrap();
        prop_assume!(forest.edges() > 0);
        let mu = forest_to_partition(&forest).unwrap();
        prop_assert_eq!(mu.len(), forest.edges());
        prop_assert_eq!(mu.bound(), forest.edges() + forest.m() - 1);
        prop_assert!(mu_tilde(&mu, forest.m()).unwrap().classes().are_ordered_intervals());
        prop_assert_eq!(partition_to_forest(&mu, forest.m()).unwrap(), forest);
    }

    #[test]
    fn m_one_forests_cover_pair_family(mu in pair_partition()) {
        let forest = partition_to_forest(&mu, 1).unwrap();
        prop_assert_eq!(forest.edges(), mu.len());
        prop_assert_eq!(forest_to_partition(&forest).unwrap(), mu);
    }

    #[test]
    fn counting_identities(n in 0u64..60, m in 0u64..20) {
        prop_assert_eq!(ballot(n, 0), catalan(n));
        prop_assert_eq!(generalized_catalan(2, 1, n), catalan(n));
        prop_assert_eq!(generalized_catalan(2, m + 1, n), ballot(n, m));
        prop_assert_eq!(
            binomial(n + 1, (n / 2) as i64),
            binomial(n, (n / 2) as i64) + binomial(n, (n / 2) as i64 - 1)
        );
    }
}
