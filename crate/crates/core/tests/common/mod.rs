//! Oracles shared by the integration tests, written without the library.

use std::collections::BTreeSet;

/// Every family of subsets of an n-set that contains ∅ and X and is closed
/// under pairwise union and intersection, as sorted bit lists.
pub fn set_family_topologies(n: usize) -> BTreeSet<Vec<u32>> {
    let full = (1u32 << n) - 1;
    // the middle sets: everything except ∅ and X
    let middle: Vec<u32> = (1..full).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << middle.len()) {
        let mut family = vec![0, full];
        family.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s),
        );
        let members: BTreeSet<u32> = family.iter().copied().collect();
        let closed = family.iter().all(|&u| {
            family
                .iter()
                .all(|&v| members.contains(&(u | v)) && members.contains(&(u & v)))
        });
        if closed {
            out.insert(members.into_iter().collect());
        }
    }
    out
}

/// Reflexive transitive relations on n points, counted as bit matrices.
pub fn preorder_count(n: usize) -> usize {
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut count = 0;
    for mask in 0u64..(1u64 << off_diagonal.len()) {
        let mut rel = vec![0u32; n];
        for (i, row) in rel.iter_mut().enumerate() {
            *row |= 1 << i;
        }
        for (k, &(i, j)) in off_diagonal.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel[i] |= 1 << j;
            }
        }
        // transitive iff each row contains the rows of its members
        let transitive = (0..n).all(|i| {
            (0..n)
                .filter(|&j| rel[i] >> j & 1 == 1)
                .all(|j| rel[j] & !rel[i] == 0)
        });
        if transitive {
            count += 1;
        }
    }
    count
}
