//! Definition-level routes to the operators, quantifying over every open set
//! instead of using minimal neighbourhoods. The verifier compares them with
//! the fast paths; nothing else should call them.

use std::collections::BTreeSet;

use crate::ideal::IdealSpace;
use crate::pointset::PointSet;
use crate::topology::Topology;

/// Union of every open set inside `s`.
pub fn interior_by_opens(t: &Topology, s: PointSet) -> PointSet {
    t.opens()
        .iter()
        .filter(|u| u.is_subset(s))
        .fold(PointSet::EMPTY, |acc, &u| acc | u)
}

/// Intersection of every closed set containing `s`.
pub fn closure_by_closed_sets(t: &Topology, s: PointSet) -> PointSet {
    let n = t.n();
    t.opens()
        .iter()
        .map(|u| u.complement(n))
        .filter(|f| s.is_subset(*f))
        .fold(PointSet::full(n), |acc, f| acc & f)
}

/// `{x : U ∩ A ∉ I for every open U ∋ x}` with the quantifier taken literally.
pub fn local_function_by_opens(sp: &IdealSpace, a: PointSet) -> PointSet {
    let t = sp.topology();
    (0..t.n())
        .filter(|&x| t.opens_containing(x).all(|u| !sp.ideal().contains(u & a)))
        .collect()
}

/// `U` open in `τ*` iff its complement is a fixed point of `Cl*`.
pub fn star_opens_by_closure(sp: &IdealSpace) -> Vec<PointSet> {
    let n = sp.n();
    let mut v: Vec<PointSet> = PointSet::full(n)
        .subsets()
        .filter(|&u| {
            let f = u.complement(n);
            sp.cl_star(f) == f
        })
        .collect();
    v.sort();
    v
}

/// Compatibility with the existential over every open neighbourhood.
pub fn is_compatible_by_opens(sp: &IdealSpace) -> bool {
    let t = sp.topology();
    PointSet::full(t.n()).subsets().all(|s| {
        let hyp = s
            .points()
            .all(|x| t.opens_containing(x).any(|u| sp.ideal().contains(u & s)));
        !hyp || sp.ideal().contains(s)
    })
}

/// Dense FIP by scanning every nonempty subfamily.
pub fn has_dense_fip_by_subfamilies(t: &Topology, family: &[PointSet]) -> bool {
    let k = family.len();
    if k >= 24 {
        // 2^24 subfamilies is past any size this is meant for
        panic!("family of {k} sets is too large for the subfamily scan");
    }
    (1u32..(1 << k)).all(|mask| {
        let meet = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .fold(t.full(), |acc, i| acc & family[i]);
        t.is_dense(meet)
    })
}

/// Maximal dense-FIP families are exactly `{D dense : D ⊇ K}` for the
/// inclusion-minimal dense sets `K`.
pub fn maximal_families_by_minimal_dense(t: &Topology) -> Vec<Vec<PointSet>> {
    let dense = t.dense_sets();
    let minimal: Vec<PointSet> = dense
        .iter()
        .copied()
        .filter(|&k| !dense.iter().any(|&d| d != k && d.is_subset(k)))
        .collect();
    minimal
        .into_iter()
        .map(|k| dense.iter().copied().filter(|d| k.is_subset(*d)).collect())
        .collect()
}

/// Maximality of a dense-FIP family by trying every other dense set.
pub fn is_maximal_dense_fip(t: &Topology, family: &[PointSet]) -> bool {
    has_dense_fip_by_subfamilies_or_meet(t, family)
        && t.dense_sets().into_iter().all(|d| {
            family.contains(&d) || {
                let mut bigger = family.to_vec();
                bigger.push(d);
                !has_dense_fip_by_subfamilies_or_meet(t, &bigger)
            }
        })
}

fn has_dense_fip_by_subfamilies_or_meet(t: &Topology, family: &[PointSet]) -> bool {
    if family.len() < 12 {
        has_dense_fip_by_subfamilies(t, family)
    } else {
        let meet = family.iter().fold(t.full(), |acc, &d| acc & d);
        t.is_dense(meet)
    }
}

/// Closes `family ∪ {∅, X}` under pairwise intersection, then pairwise union,
/// repeating until neither adds anything.
pub fn generate_by_fixed_point(n: usize, family: &[PointSet]) -> Vec<PointSet> {
    let mut sets: BTreeSet<PointSet> = family.iter().copied().collect();
    sets.insert(PointSet::EMPTY);
    sets.insert(PointSet::full(n));
    loop {
        let before = sets.len();
        for op in [
            PointSet::intersection as fn(PointSet, PointSet) -> PointSet,
            PointSet::union,
        ] {
            loop {
                let current: Vec<PointSet> = sets.iter().copied().collect();
                let mut grew = false;
                for &u in &current {
                    for &v in &current {
                        grew |= sets.insert(op(u, v));
                    }
                }
                if !grew {
                    break;
                }
            }
        }
        if sets.len() == before {
            break;
        }
    }
    sets.into_iter().collect()
}

/// `I_D` for an arbitrary list of sets, without the dense-FIP precondition.
pub fn ideal_top_of_complements(n: usize, family: &[PointSet]) -> PointSet {
    family
        .iter()
        .fold(PointSet::EMPTY, |acc, d| acc | d.complement(n))
}
