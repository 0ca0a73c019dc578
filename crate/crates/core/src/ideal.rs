//! Ideals, the local function and the expanded topology `τ*`.
//!
//! An ideal on a finite set is closed under finite unions, so the union of
//! all its members is again a member: every ideal here is principal. It is
//! stored as that single maximal member; the generic "antichain of maximal
//! elements" view collapses to a one-element list.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::topology::Topology;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    n: usize,
    top: PointSet,
}

impl Ideal {
    /// Smallest ideal containing every generator: all subsets of finite
    /// unions of generators. With no generators this is `{∅}`.
    pub fn from_generators(n: usize, gens: &[PointSet]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut top = PointSet::EMPTY;
        for &g in gens {
            if !g.within(n) {
                return Err(Error::SetOutOfRange { set: g, n });
            }
            top = top | g;
        }
        Ok(Ideal { n, top })
    }

    /// The ideal of all subsets of `top`.
    pub fn principal(n: usize, top: PointSet) -> Result<Self> {
        Self::from_generators(n, &[top])
    }

    /// `{∅}`.
    pub fn trivial(n: usize) -> Self {
        Ideal {
            n,
            top: PointSet::EMPTY,
        }
    }

    /// The full powerset.
    pub fn powerset(n: usize) -> Self {
        Ideal {
            n,
            top: PointSet::full(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The largest member; every member is a subset of it.
    pub fn top(&self) -> PointSet {
        self.top
    }

    /// Maximal elements as an antichain. Always a single set.
    pub fn maximal(&self) -> Vec<PointSet> {
        vec![self.top]
    }

    pub fn contains(&self, s: PointSet) -> bool {
        s.is_subset(self.top)
    }

    pub fn is_trivial(&self) -> bool {
        self.top.is_empty()
    }

    /// True when every member of `self` is a member of `other`.
    pub fn is_subideal(&self, other: &Ideal) -> bool {
        self.n == other.n && self.top.is_subset(other.top)
    }

    pub fn members(&self) -> impl Iterator<Item = PointSet> {
        self.top.subsets()
    }
}

/// The triple `(X, τ, I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpace {
    topology: Topology,
    ideal: Ideal,
}

impl IdealSpace {
    pub fn new(topology: Topology, ideal: Ideal) -> Result<Self> {
        if topology.n() != ideal.n() {
            return Err(Error::SizeMismatch {
                topology: topology.n(),
                ideal: ideal.n(),
            });
        }
        Ok(IdealSpace { topology, ideal })
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn n(&self) -> usize {
        self.topology.n()
    }

    /// `A* = {x : U ∩ A ∉ I for every open U ∋ x}`.
    ///
    /// Ideals are closed downward, so the quantifier only needs the smallest
    /// open set around `x`.
    pub fn local_function(&self, a: PointSet) -> PointSet {
        (0..self.n())
            .filter(|&x| !self.ideal.contains(self.topology.min_nbhd(x) & a))
            .collect()
    }

    /// `Cl*(A) = A ∪ A*`.
    pub fn cl_star(&self, a: PointSet) -> PointSet {
        a | self.local_function(a)
    }

    /// `U` is open in `τ*` iff `U ∩ (X \ U)* = ∅`.
    pub fn is_star_open(&self, u: PointSet) -> bool {
        u.is_disjoint(self.local_function(u.complement(self.n())))
    }

    pub fn star_topology(&self) -> Topology {
        let n = self.n();
        let opens: Vec<PointSet> = PointSet::full(n)
            .subsets()
            .filter(|&u| self.is_star_open(u))
            .collect();
        let table = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(PointSet::full(n), |acc, &u| acc & u)
            })
            .collect();
        Topology::from_table_unchecked(n, table)
    }

    /// `β(I, τ) = {V \ J : V ∈ τ, J ∈ I}`, deduplicated, canonical order.
    pub fn base_beta(&self) -> Vec<PointSet> {
        let mut family = BTreeSet::new();
        for &v in self.topology.opens() {
            for j in (v & self.ideal.top()).subsets() {
                family.insert(v - j);
            }
        }
        family.into_iter().collect()
    }

    /// `τ ∼ I`: whenever every point of `S` has an open neighbourhood whose
    /// trace on `S` lies in the ideal, `S` itself lies in the ideal.
    pub fn is_compatible(&self) -> bool {
        PointSet::full(self.n()).subsets().all(|s| {
            let locally_small = s
                .points()
                .all(|x| self.ideal.contains(self.topology.min_nbhd(x) & s));
            !locally_small || self.ideal.contains(s)
        })
    }

    /// `τ ∩ I = {∅}`.
    pub fn trace_is_trivial(&self) -> bool {
        trace_is_trivial(&self.topology, &self.ideal)
    }
}

/// `τ ∩ I = {∅}`: no nonempty open set belongs to the ideal.
pub fn trace_is_trivial(t: &Topology, ideal: &Ideal) -> bool {
    t.opens()
        .iter()
        .all(|&u| u.is_empty() || !ideal.contains(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    fn sierpinski() -> Topology {
        Topology::from_opens(2, [ps(&[]), ps(&[1]), ps(&[0, 1])]).unwrap()
    }

    fn chain() -> Topology {
        Topology::from_opens(3, [ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 1, 2])]).unwrap()
    }

    fn space(t: Topology, top: &[usize]) -> IdealSpace {
        let n = t.n();
        IdealSpace::new(t, Ideal::principal(n, ps(top)).unwrap()).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(
            Ideal::from_generators(3, &[]).unwrap().maximal(),
            vec![PointSet::EMPTY]
        );
        assert_eq!(
            Ideal::from_generators(3, &[ps(&[1])]).unwrap().maximal(),
            vec![ps(&[1])]
        );
        assert_eq!(
            Ideal::from_generators(3, &[ps(&[1]), ps(&[2])])
                .unwrap()
                .maximal(),
            vec![ps(&[1, 2])]
        );
        assert!(Ideal::from_generators(2, &[ps(&[2])]).is_err());
    }

    #[test]
    fn membership() {
        let i = Ideal::principal(3, ps(&[1, 2])).unwrap();
        assert!(i.contains(ps(&[2])));
        assert!(i.contains(PointSet::EMPTY));
        assert!(Ideal::trivial(3).contains(PointSet::EMPTY));
        assert!(!Ideal::principal(3, ps(&[1])).unwrap().contains(ps(&[0, 1])));
        assert_eq!(i.members().count(), 4);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(matches!(
            IdealSpace::new(chain(), Ideal::trivial(2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn local_function_extremes() {
        for t in [chain(), sierpinski(), Topology::indiscrete(3)] {
            let n = t.n();
            let triv = IdealSpace::new(t.clone(), Ideal::trivial(n)).unwrap();
            let full = IdealSpace::new(t.clone(), Ideal::powerset(n)).unwrap();
            for a in PointSet::full(n).subsets() {
                assert_eq!(triv.local_function(a), t.closure(a));
                assert_eq!(triv.cl_star(a), t.closure(a));
                assert_eq!(full.local_function(a), PointSet::EMPTY);
                assert_eq!(full.cl_star(a), a);
            }
        }
    }

    #[test]
    fn local_function_chain() {
        let sp = space(chain(), &[1]);
        assert_eq!(sp.local_function(ps(&[1])), PointSet::EMPTY);
        assert_eq!(sp.cl_star(ps(&[1])), ps(&[1]));
    }

    #[test]
    fn star_topology_examples() {
        assert_eq!(
            space(sierpinski(), &[1]).star_topology(),
            Topology::discrete(2)
        );
        for t in [chain(), sierpinski(), Topology::indiscrete(2)] {
            let n = t.n();
            assert_eq!(
                IdealSpace::new(t.clone(), Ideal::trivial(n))
                    .unwrap()
                    .star_topology(),
                t
            );
        }
        let star = space(chain(), &[1]).star_topology();
        assert_eq!(
            star.opens(),
            &[ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 2]), ps(&[0, 1, 2])]
        );
        star.check_invariants().unwrap();
    }

    #[test]
    fn beta_examples() {
        let t = chain();
        assert_eq!(
            IdealSpace::new(t.clone(), Ideal::trivial(3))
                .unwrap()
                .base_beta(),
            t.opens()
        );
        assert!(space(chain(), &[1]).base_beta().contains(&ps(&[0, 2])));
        assert!(space(sierpinski(), &[1]).base_beta().contains(&ps(&[0])));
    }

    #[test]
    fn compatibility_examples() {
        assert!(space(chain(), &[1]).is_compatible());
        assert!(IdealSpace::new(chain(), Ideal::trivial(3))
            .unwrap()
            .is_compatible());
        assert!(space(Topology::indiscrete(3), &[0, 2]).is_compatible());
    }

    #[test]
    fn trace() {
        assert!(space(chain(), &[1]).trace_is_trivial());
        assert!(!space(sierpinski(), &[1]).trace_is_trivial());
        assert!(IdealSpace::new(chain(), Ideal::trivial(3))
            .unwrap()
            .trace_is_trivial());
    }
}
