//! Topology enumeration against two independent oracles: a brute force over
//! families of subsets, and a count of preorders as relation matrices.

use std::collections::BTreeSet;

mod common;

use common::{preorder_count, set_family_topologies};

use idealtop::enumeration::{topologies, topology_chunks};
use idealtop::{PointSet, Topology};

fn enumerated(n: usize) -> BTreeSet<Vec<u32>> {
    topologies(n)
        .map(|t| {
            t.opens()
                .iter()
                .map(|s| s.bits())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        })
        .collect()
}

#[test]
fn counts_match_the_set_family_oracle_up_to_four_points() {
    for (n, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let oracle = set_family_topologies(n);
        assert_eq!(oracle.len(), expected, "oracle count for n={n}");
        assert_eq!(
            topologies(n).count(),
            expected,
            "enumerated count for n={n}"
        );
        assert_eq!(enumerated(n), oracle, "same topologies for n={n}");
    }
}

#[test]
fn counts_match_preorder_matrices() {
    for (n, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        assert_eq!(preorder_count(n), expected);
    }
}

#[test]
fn five_points_give_6942_topologies() {
    assert_eq!(preorder_count(5), 6942);
    let all: BTreeSet<Vec<u32>> = enumerated(5);
    assert_eq!(all.len(), 6942);
    let via_chunks: usize = topology_chunks(5).into_iter().map(|c| c.count()).sum();
    assert_eq!(via_chunks, 6942);
}

#[test]
fn no_duplicates_and_every_topology_is_valid() {
    for n in 0..=4 {
        let list: Vec<Topology> = topologies(n).collect();
        let distinct: BTreeSet<Vec<PointSet>> = list.iter().map(|t| t.opens().to_vec()).collect();
        assert_eq!(distinct.len(), list.len());
        for t in &list {
            t.check_invariants().unwrap();
            // round trip through the open-set constructor
            assert_eq!(
                &Topology::from_opens(n, t.opens().iter().copied()).unwrap(),
                t
            );
        }
    }
}
