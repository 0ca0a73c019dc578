//! Finite topologies and the classical operators on them.
//!
//! A finite topology is Alexandrov: every point `x` has a smallest open set
//! containing it, `min_nbhd[x]`. Interior and closure reduce to that table:
//! `Int(S) = {x ∈ S : min_nbhd[x] ⊆ S}` and `Cl(S) = {x : min_nbhd[x] ∩ S ≠ ∅}`.
//! The explicit list of open sets is kept alongside, in canonical order, so two
//! topologies compare equal exactly when they have the same opens.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pointset::{all_subsets, PointSet, MAX_POINTS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    n: usize,
    opens: Vec<PointSet>,
    min_nbhd: Vec<PointSet>,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

fn check_within(n: usize, s: PointSet) -> Result<()> {
    if !s.within(n) {
        return Err(Error::SetOutOfRange { set: s, n });
    }
    Ok(())
}

impl Topology {
    /// Builds the topology whose minimal neighbourhoods are `table`.
    ///
    /// The table must describe a preorder: `x ∈ table[x]`, and
    /// `y ∈ table[x]` implies `table[y] ⊆ table[x]`.
    pub fn from_min_nbhds(n: usize, table: Vec<PointSet>) -> Result<Self> {
        check_size(n)?;
        if table.len() != n {
            return Err(Error::NotATopology(format!(
                "expected {n} minimal neighbourhoods, got {}",
                table.len()
            )));
        }
        for (x, &nx) in table.iter().enumerate() {
            check_within(n, nx)?;
            if !nx.contains(x) {
                return Err(Error::NotATopology(format!(
                    "minimal neighbourhood {nx} of {x} does not contain it"
                )));
            }
            for y in nx.points() {
                if !table[y].is_subset(nx) {
                    return Err(Error::NotATopology(format!(
                        "{y} ∈ U_{x} = {nx} but U_{y} = {} is not inside it",
                        table[y]
                    )));
                }
            }
        }
        Ok(Self::from_table_unchecked(n, table))
    }

    pub(crate) fn from_table_unchecked(n: usize, min_nbhd: Vec<PointSet>) -> Self {
        let opens = PointSet::full(n)
            .subsets()
            .filter(|&u| u.points().all(|x| min_nbhd[x].is_subset(u)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Topology { n, opens, min_nbhd }
    }

    /// Builds a topology from an explicit family of open sets, rejecting
    /// families that are not closed under pairwise union and intersection or
    /// that miss `∅` or `X`.
    pub fn from_opens(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_size(n)?;
        let family: BTreeSet<PointSet> = opens.into_iter().collect();
        for &u in &family {
            check_within(n, u)?;
        }
        if !family.contains(&PointSet::EMPTY) {
            return Err(Error::NotATopology("the empty set is not open".into()));
        }
        if !family.contains(&PointSet::full(n)) {
            return Err(Error::NotATopology("the whole space is not open".into()));
        }
        for &u in &family {
            for &v in &family {
                if !family.contains(&(u | v)) {
                    return Err(Error::NotATopology(format!(
                        "union of {u} and {v} is not open"
                    )));
                }
                if !family.contains(&(u & v)) {
                    return Err(Error::NotATopology(format!(
                        "intersection of {u} and {v} is not open"
                    )));
                }
            }
        }
        let min_nbhd = (0..n)
            .map(|x| {
                family
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(PointSet::full(n), |acc, &u| acc & u)
            })
            .collect();
        Ok(Topology {
            n,
            opens: family.into_iter().collect(),
            min_nbhd,
        })
    }

    /// Smallest topology containing every member of `subbase`.
    ///
    /// On a finite set the generated topology is determined by the minimal
    /// neighbourhoods `min_nbhd[x] = ⋂ {S ∈ subbase : x ∈ S}` (with `X` for
    /// points covered by no member); the opens are the unions of those.
    pub fn generate(n: usize, subbase: &[PointSet]) -> Result<Self> {
        check_size(n)?;
        for &s in subbase {
            check_within(n, s)?;
        }
        let table = (0..n)
            .map(|x| {
                subbase
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(PointSet::full(n), |acc, &s| acc & s)
            })
            .collect();
        Ok(Self::from_table_unchecked(n, table))
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_table_unchecked(n, (0..n).map(PointSet::singleton).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_table_unchecked(n, vec![PointSet::full(n); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// Open sets in canonical order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    pub fn min_nbhds(&self) -> &[PointSet] {
        &self.min_nbhd
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.within(self.n) && s.points().all(|x| self.min_nbhd[x].is_subset(s))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement(self.n))
    }

    pub fn opens_containing(&self, x: usize) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().copied().filter(move |u| u.contains(x))
    }

    /// True when every open set of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &Topology) -> bool {
        self.n == other.n && self.opens.iter().all(|&u| other.is_open(u))
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        s.points()
            .filter(|&x| self.min_nbhd[x].is_subset(s))
            .collect()
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        (0..self.n)
            .filter(|&x| self.min_nbhd[x].intersects(s))
            .collect()
    }

    pub fn is_dense(&self, s: PointSet) -> bool {
        self.closure(s) == self.full()
    }

    pub fn is_preopen(&self, s: PointSet) -> bool {
        s.is_subset(self.interior(self.closure(s)))
    }

    pub fn is_regular_open(&self, s: PointSet) -> bool {
        s == self.interior(self.closure(s))
    }

    pub fn dense_sets(&self) -> Vec<PointSet> {
        all_subsets(self.n)
            .into_iter()
            .filter(|&s| self.is_dense(s))
            .collect()
    }

    pub fn preopen_sets(&self) -> Vec<PointSet> {
        all_subsets(self.n)
            .into_iter()
            .filter(|&s| self.is_preopen(s))
            .collect()
    }

    pub fn regular_open_sets(&self) -> Vec<PointSet> {
        self.opens
            .iter()
            .copied()
            .filter(|&u| self.is_regular_open(u))
            .collect()
    }

    /// The topology generated by the regular open sets.
    pub fn semiregularization(&self) -> Topology {
        Topology::generate(self.n, &self.regular_open_sets())
            .expect("regular open sets lie in the ground set")
    }

    pub fn is_connected(&self) -> bool {
        let x = self.full();
        !self
            .opens
            .iter()
            .any(|&u| !u.is_empty() && u != x && self.is_open(u.complement(self.n)))
    }

    /// Every preopen set is open.
    pub fn is_submaximal(&self) -> bool {
        PointSet::full(self.n)
            .subsets()
            .all(|s| !self.is_preopen(s) || self.is_open(s))
    }

    /// Every dense set is open. Equivalent to [`Topology::is_submaximal`].
    pub fn is_submaximal_by_dense(&self) -> bool {
        PointSet::full(self.n)
            .subsets()
            .all(|s| !self.is_dense(s) || self.is_open(s))
    }

    /// Two disjoint dense sets exist. Supersets of dense sets are dense, so it
    /// suffices to look for a dense set whose complement is dense.
    pub fn is_resolvable(&self) -> bool {
        PointSet::full(self.n)
            .subsets()
            .any(|s| self.is_dense(s) && self.is_dense(s.complement(self.n)))
    }

    /// Every singleton is closed. A finite T1 space is discrete.
    pub fn is_t1(&self) -> bool {
        (0..self.n).all(|x| self.is_closed(PointSet::singleton(x)))
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.min_nbhd[x] == PointSet::singleton(x))
    }

    /// Re-checks every structural invariant against the explicit open list.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::NotATopology(msg));
        if self.min_nbhd.len() != self.n {
            return fail("minimal neighbourhood table has wrong length".into());
        }
        if !self.opens.windows(2).all(|w| w[0] < w[1]) {
            return fail("opens are not in strictly increasing canonical order".into());
        }
        let set: BTreeSet<PointSet> = self.opens.iter().copied().collect();
        if !set.contains(&PointSet::EMPTY) || !set.contains(&self.full()) {
            return fail("∅ or X missing".into());
        }
        for &u in &self.opens {
            if !u.within(self.n) {
                return fail(format!("{u} is outside the ground set"));
            }
            for &v in &self.opens {
                if !set.contains(&(u | v)) || !set.contains(&(u & v)) {
                    return fail(format!("{u} and {v} break union/intersection closure"));
                }
            }
        }
        for x in 0..self.n {
            let m = self.min_nbhd[x];
            if !m.contains(x) || !set.contains(&m) {
                return fail(format!("minimal neighbourhood {m} of {x} is invalid"));
            }
            if self.opens.iter().any(|u| u.contains(x) && !m.is_subset(*u)) {
                return fail(format!("{m} is not the smallest open set around {x}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    /// `{∅, {1}, X}` on two points.
    fn sierpinski() -> Topology {
        Topology::from_opens(2, [ps(&[]), ps(&[1]), ps(&[0, 1])]).unwrap()
    }

    /// `{∅, {a}, {a,b}, X}` with a=0, b=1, c=2.
    fn chain() -> Topology {
        Topology::from_opens(3, [ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 1, 2])]).unwrap()
    }

    fn union_of_opens_inside(t: &Topology, s: PointSet) -> PointSet {
        t.opens()
            .iter()
            .filter(|u| u.is_subset(s))
            .fold(PointSet::EMPTY, |acc, &u| acc | u)
    }

    #[test]
    fn interior_examples() {
        let s = sierpinski();
        assert_eq!(s.interior(ps(&[0])), PointSet::EMPTY);
        assert_eq!(union_of_opens_inside(&s, ps(&[0])), PointSet::EMPTY);
        let c = chain();
        assert_eq!(c.interior(c.full()), c.full());
        assert_eq!(c.interior(ps(&[0, 2])), ps(&[0]));
        assert_eq!(union_of_opens_inside(&c, ps(&[0, 2])), ps(&[0]));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(sierpinski().closure(ps(&[1])), ps(&[0, 1]));
        assert_eq!(chain().closure(PointSet::EMPTY), PointSet::EMPTY);
        assert_eq!(chain().closure(ps(&[0])), ps(&[0, 1, 2]));
    }

    #[test]
    fn dense_and_preopen_examples() {
        let c = chain();
        let s = sierpinski();
        assert!(c.is_dense(ps(&[0])));
        assert!(c.is_dense(c.full()));
        assert!(!s.is_dense(ps(&[0])));

        assert!(c.is_preopen(ps(&[0, 2])));
        for &u in c.opens() {
            assert!(c.is_preopen(u));
        }
        assert!(!s.is_preopen(ps(&[0])));
    }

    #[test]
    fn regular_open_examples() {
        assert!(chain().is_regular_open(PointSet::EMPTY));
        assert!(!chain().is_regular_open(ps(&[0])));
        assert!(Topology::discrete(2).is_regular_open(ps(&[0])));
    }

    #[test]
    fn semiregularization_examples() {
        assert_eq!(chain().semiregularization(), Topology::indiscrete(3));
        assert_eq!(
            Topology::discrete(3).semiregularization(),
            Topology::discrete(3)
        );
        // Cl({1}) = X so {1} is not regular open in the Sierpiński space.
        assert!(!sierpinski().is_regular_open(ps(&[1])));
        assert_eq!(sierpinski().semiregularization(), Topology::indiscrete(2));
    }

    #[test]
    fn connectedness() {
        assert!(chain().is_connected());
        assert!(!Topology::discrete(2).is_connected());
        assert!(!Topology::discrete(4).is_connected());
        assert!(Topology::indiscrete(3).is_connected());
    }

    #[test]
    fn submaximality() {
        assert!(Topology::discrete(3).is_submaximal());
        assert!(!Topology::indiscrete(2).is_submaximal());
        let star = Topology::from_opens(
            3,
            [ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 2]), ps(&[0, 1, 2])],
        )
        .unwrap();
        assert!(star.is_submaximal());
        assert!(star.is_submaximal_by_dense());
        // preopen sets: ∅ and the sets containing 0, all of them open
        let preopen: Vec<_> = star.preopen_sets();
        assert_eq!(preopen, star.opens());
    }

    #[test]
    fn resolvability() {
        assert!(Topology::indiscrete(2).is_resolvable());
        assert!(!Topology::discrete(3).is_resolvable());
        assert!(!chain().is_resolvable());
    }

    #[test]
    fn t1() {
        assert!(Topology::discrete(3).is_t1());
        assert!(!sierpinski().is_t1());
        assert!(!Topology::indiscrete(2).is_t1());
        assert!(!Topology::indiscrete(5).is_t1());
    }

    #[test]
    fn generate_examples() {
        assert_eq!(Topology::generate(2, &[ps(&[1])]).unwrap(), sierpinski());
        assert_eq!(
            Topology::generate(3, &[ps(&[0]), ps(&[0, 1])]).unwrap(),
            chain()
        );
        assert_eq!(Topology::generate(2, &[]).unwrap(), Topology::indiscrete(2));
        assert!(Topology::generate(2, &[ps(&[3])]).is_err());
    }

    #[test]
    fn from_opens_rejects_non_topologies() {
        assert!(Topology::from_opens(2, [ps(&[]), ps(&[0]), ps(&[1])]).is_err());
        assert!(
            Topology::from_opens(3, [ps(&[]), ps(&[0, 1]), ps(&[1, 2]), ps(&[0, 1, 2])]).is_err()
        );
        assert!(Topology::from_opens(17, [PointSet::EMPTY]).is_err());
    }

    #[test]
    fn from_min_nbhds_rejects_non_preorders() {
        assert!(Topology::from_min_nbhds(2, vec![ps(&[1]), ps(&[1])]).is_err());
        assert!(Topology::from_min_nbhds(3, vec![ps(&[0, 1]), ps(&[1, 2]), ps(&[2])]).is_err());
        let t = Topology::from_min_nbhds(3, vec![ps(&[0]), ps(&[0, 1]), ps(&[0, 1, 2])]).unwrap();
        assert_eq!(t, chain());
        t.check_invariants().unwrap();
    }

    #[test]
    fn opens_are_canonically_sorted() {
        let t = Topology::discrete(3);
        assert_eq!(t.opens().len(), 8);
        assert!(t.opens().windows(2).all(|w| w[0] < w[1]));
        t.check_invariants().unwrap();
        assert_eq!(Topology::discrete(0).opens(), &[PointSet::EMPTY]);
    }
}
