//! Ideals that make a chosen set open in `τ*`, and ideals built from
//! families of dense sets.
//!
//! Given `A ⊆ X`, a neighbourhood assignment picks an open `U_x ∋ x` for every
//! `x ∈ A \ Int(A)`; the ideal `I_A` is generated by the sets `U_x \ A`, and `A`
//! is open in the resulting `τ*`. Three assignment policies are provided:
//! arbitrary (enumerated by [`assignments`]), the minimal-neighbourhood
//! policy behind [`ideal_ia_prime`], and the single neighbourhood
//! `Int(Cl(A))` behind [`ideal_ia_max`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::pointset::PointSet;
use crate::topology::Topology;

/// A choice of open neighbourhood `U_x` for each `x ∈ A \ Int(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NbhdAssignment {
    set_a: PointSet,
    domain: PointSet,
    choice: BTreeMap<usize, PointSet>,
}

impl NbhdAssignment {
    /// Validates `choice` against `t` and `a`: its keys must be exactly
    /// `A \ Int(A)`, and each `U_x` must be open and contain `x`.
    pub fn new(t: &Topology, a: PointSet, choice: BTreeMap<usize, PointSet>) -> Result<Self> {
        if !a.within(t.n()) {
            return Err(Error::SetOutOfRange { set: a, n: t.n() });
        }
        let domain = a - t.interior(a);
        let keys: PointSet = choice.keys().copied().collect();
        if choice.keys().any(|&x| x >= t.n()) || keys != domain {
            return Err(Error::InvalidAssignment(format!(
                "assigned points {keys} differ from A \\ Int(A) = {domain}"
            )));
        }
        for (&x, &u) in &choice {
            if !u.contains(x) {
                return Err(Error::InvalidAssignment(format!(
                    "U_{x} = {u} does not contain {x}"
                )));
            }
            if !t.is_open(u) {
                return Err(Error::InvalidAssignment(format!("U_{x} = {u} is not open")));
            }
        }
        Ok(NbhdAssignment {
            set_a: a,
            domain,
            choice,
        })
    }

    /// `U_x = min_nbhd[x]` for every `x ∈ A \ Int(A)`.
    pub fn minimal(t: &Topology, a: PointSet) -> Self {
        let domain = a - t.interior(a);
        NbhdAssignment {
            set_a: a,
            domain,
            choice: domain.points().map(|x| (x, t.min_nbhd(x))).collect(),
        }
    }

    pub fn set_a(&self) -> PointSet {
        self.set_a
    }

    pub fn domain(&self) -> PointSet {
        self.domain
    }

    pub fn choice(&self) -> &BTreeMap<usize, PointSet> {
        &self.choice
    }

    pub fn get(&self, x: usize) -> Option<PointSet> {
        self.choice.get(&x).copied()
    }

    /// The generating family `{U_x \ A}` in point order.
    pub fn generators(&self) -> Vec<PointSet> {
        self.choice.values().map(|&u| u - self.set_a).collect()
    }

    pub fn is_minimal(&self, t: &Topology) -> bool {
        self.choice.iter().all(|(&x, &u)| u == t.min_nbhd(x))
    }
}

/// `I_A` for the given assignment. Open `A` yields `{∅}`.
pub fn ideal_ia(t: &Topology, a: PointSet, asg: &NbhdAssignment) -> Result<Ideal> {
    if asg.set_a != a {
        return Err(Error::InvalidAssignment(format!(
            "assignment was built for {} but A = {a}",
            asg.set_a
        )));
    }
    let checked = NbhdAssignment::new(t, a, asg.choice.clone())?;
    Ideal::from_generators(t.n(), &checked.generators())
}

/// Every neighbourhood assignment for `(t, a)`, as an odometer over the open
/// sets containing each point of `A \ Int(A)` (canonical order, first point
/// varying slowest).
pub fn assignments(t: &Topology, a: PointSet) -> Assignments {
    let domain = a - t.interior(a);
    let points: Vec<usize> = domain.points().collect();
    let options: Vec<Vec<PointSet>> = points
        .iter()
        .map(|&x| t.opens_containing(x).collect())
        .collect();
    Assignments {
        set_a: a,
        domain,
        index: vec![0; points.len()],
        points,
        options,
        done: false,
    }
}

#[derive(Clone, Debug)]
pub struct Assignments {
    set_a: PointSet,
    domain: PointSet,
    points: Vec<usize>,
    options: Vec<Vec<PointSet>>,
    index: Vec<usize>,
    done: bool,
}

impl Assignments {
    /// Number of assignments the iterator yields in total.
    pub fn count_total(&self) -> usize {
        self.options.iter().map(Vec::len).product()
    }
}

impl Iterator for Assignments {
    type Item = NbhdAssignment;

    fn next(&mut self) -> Option<NbhdAssignment> {
        if self.done {
            return None;
        }
        let choice = self
            .points
            .iter()
            .zip(&self.index)
            .zip(&self.options)
            .map(|((&x, &i), opts)| (x, opts[i]))
            .collect();
        let item = NbhdAssignment {
            set_a: self.set_a,
            domain: self.domain,
            choice,
        };
        // advance the odometer, last position fastest
        let mut pos = self.index.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.index[pos] += 1;
            if self.index[pos] < self.options[pos].len() {
                break;
            }
            self.index[pos] = 0;
        }
        Some(item)
    }
}

/// The three-branch choice used for `I′_A`: the minimal neighbourhood when it
/// exists, otherwise the first candidate (canonical order) containing `x` and
/// lying inside `target = Int(Cl(A))`, otherwise the first candidate
/// containing `x`.
///
/// On a finite space `minimal` is always `Some`, so the later branches only
/// matter to callers modelling spaces without minimal neighbourhoods.
pub fn prime_neighbourhood(
    x: usize,
    minimal: Option<PointSet>,
    candidates: &[PointSet],
    target: PointSet,
) -> Option<PointSet> {
    if let Some(m) = minimal {
        return Some(m);
    }
    let mut around: Vec<PointSet> = candidates
        .iter()
        .copied()
        .filter(|u| u.contains(x))
        .collect();
    around.sort();
    around
        .iter()
        .copied()
        .find(|u| u.is_subset(target))
        .or_else(|| around.first().copied())
}

/// The assignment behind `I′_A`.
pub fn prime_assignment(t: &Topology, a: PointSet) -> NbhdAssignment {
    let target = t.interior(t.closure(a));
    let domain = a - t.interior(a);
    let choice = domain
        .points()
        .map(|x| {
            let u = prime_neighbourhood(x, Some(t.min_nbhd(x)), t.opens(), target)
                .expect("finite spaces have minimal neighbourhoods");
            (x, u)
        })
        .collect();
    NbhdAssignment {
        set_a: a,
        domain,
        choice,
    }
}

/// `I′_A`.
pub fn ideal_ia_prime(t: &Topology, a: PointSet) -> Ideal {
    Ideal::from_generators(t.n(), &prime_assignment(t, a).generators())
        .expect("generators lie in the ground set")
}

/// The assignment `U_x = Int(Cl(A))`; valid only for preopen `A`.
pub fn max_assignment(t: &Topology, a: PointSet) -> Result<NbhdAssignment> {
    if !a.within(t.n()) {
        return Err(Error::SetOutOfRange { set: a, n: t.n() });
    }
    if !t.is_preopen(a) {
        return Err(Error::NotPreopen(a));
    }
    let u = t.interior(t.closure(a));
    let domain = a - t.interior(a);
    Ok(NbhdAssignment {
        set_a: a,
        domain,
        choice: domain.points().map(|x| (x, u)).collect(),
    })
}

/// `I_A^max`, the principal ideal of `Int(Cl(A)) \ A`, for preopen `A`.
pub fn ideal_ia_max(t: &Topology, a: PointSet) -> Result<Ideal> {
    if !a.within(t.n()) {
        return Err(Error::SetOutOfRange { set: a, n: t.n() });
    }
    if !t.is_preopen(a) {
        return Err(Error::NotPreopen(a));
    }
    Ideal::principal(t.n(), t.interior(t.closure(a)) - a)
}

/// Removes a closed point `y ∈ U_{x0} \ A` from every assigned neighbourhood.
pub fn shrink_assignment(
    t: &Topology,
    asg: &NbhdAssignment,
    x0: usize,
    y: usize,
) -> Result<NbhdAssignment> {
    let u0 = asg
        .get(x0)
        .ok_or_else(|| Error::InvalidAssignment(format!("{x0} is not in A \\ Int(A)")))?;
    if y >= t.n() || !(u0 - asg.set_a).contains(y) {
        return Err(Error::InvalidShrinkPoint { x0, y });
    }
    if !t.is_closed(PointSet::singleton(y)) {
        return Err(Error::SingletonNotClosed(y));
    }
    let choice = asg
        .choice
        .iter()
        .map(|(&x, &u)| (x, u.without(y)))
        .collect();
    NbhdAssignment::new(t, asg.set_a, choice)
}

/// A family of dense sets with the dense finite intersection property,
/// kept deduplicated and in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenseFamily {
    members: Vec<PointSet>,
}

impl DenseFamily {
    pub fn new(t: &Topology, members: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let mut members: Vec<PointSet> = members.into_iter().collect();
        for &m in &members {
            if !m.within(t.n()) {
                return Err(Error::SetOutOfRange { set: m, n: t.n() });
            }
        }
        members.sort();
        members.dedup();
        if !has_dense_fip(t, &members) {
            return Err(Error::NotDenseFip);
        }
        Ok(DenseFamily { members })
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    /// Intersection of all members (`X` for the empty family).
    pub fn intersection(&self, n: usize) -> PointSet {
        self.members
            .iter()
            .fold(PointSet::full(n), |acc, &d| acc & d)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Every finite subfamily has dense intersection. Density is inherited by
/// supersets, so the intersection of the whole family decides it.
pub fn has_dense_fip(t: &Topology, family: &[PointSet]) -> bool {
    let all = family.iter().fold(t.full(), |acc, &d| acc & d);
    t.is_dense(all)
}

/// Greedy completion of `seed` to a maximal family with the dense FIP,
/// scanning dense sets in canonical order.
pub fn dense_fip_maximal(t: &Topology, seed: &[PointSet]) -> Result<DenseFamily> {
    let seed = DenseFamily::new(t, seed.iter().copied())?;
    let mut members = seed.members;
    let mut meet = members.iter().fold(t.full(), |acc, &d| acc & d);
    for d in t.dense_sets() {
        if members.contains(&d) {
            continue;
        }
        if t.is_dense(meet & d) {
            meet = meet & d;
            members.push(d);
        }
    }
    members.sort();
    Ok(DenseFamily { members })
}

/// Every maximal family with the dense FIP, by include/exclude search over
/// the dense sets.
///
/// A branch that excludes a dense set containing the current intersection is
/// cut: that set could be added to any completion, so no completion is
/// maximal.
pub fn all_maximal_dense_fip(t: &Topology) -> Vec<DenseFamily> {
    struct Search<'a> {
        t: &'a Topology,
        dense: Vec<PointSet>,
        chosen: Vec<PointSet>,
        excluded: Vec<PointSet>,
        out: Vec<DenseFamily>,
    }

    impl Search<'_> {
        fn run(&mut self, i: usize, meet: PointSet) {
            if i == self.dense.len() {
                let maximal = self.excluded.iter().all(|&d| !self.t.is_dense(meet & d));
                if maximal {
                    self.out.push(DenseFamily {
                        members: self.chosen.clone(),
                    });
                }
                return;
            }
            let d = self.dense[i];
            if self.t.is_dense(meet & d) {
                self.chosen.push(d);
                self.run(i + 1, meet & d);
                self.chosen.pop();
            }
            if !d.is_superset(meet) {
                self.excluded.push(d);
                self.run(i + 1, meet);
                self.excluded.pop();
            }
        }
    }

    let mut search = Search {
        t,
        dense: t.dense_sets(),
        chosen: Vec::new(),
        excluded: Vec::new(),
        out: Vec::new(),
    };
    search.run(0, t.full());
    search.out
}

/// `I_D`, generated by the complements of the members.
pub fn ideal_id(t: &Topology, family: &DenseFamily) -> Ideal {
    let gens: Vec<PointSet> = family.members.iter().map(|d| d.complement(t.n())).collect();
    Ideal::from_generators(t.n(), &gens).expect("complements lie in the ground set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealSpace;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    fn sierpinski() -> Topology {
        Topology::from_opens(2, [ps(&[]), ps(&[1]), ps(&[0, 1])]).unwrap()
    }

    fn chain() -> Topology {
        Topology::from_opens(3, [ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 1, 2])]).unwrap()
    }

    fn asg(t: &Topology, a: &[usize], choice: &[(usize, &[usize])]) -> NbhdAssignment {
        let choice = choice.iter().map(|&(x, u)| (x, ps(u))).collect();
        NbhdAssignment::new(t, ps(a), choice).unwrap()
    }

    #[test]
    fn ideal_ia_examples() {
        let s = sierpinski();
        let i = ideal_ia(&s, ps(&[0]), &asg(&s, &[0], &[(0, &[0, 1])])).unwrap();
        assert_eq!(i.maximal(), vec![ps(&[1])]);

        let c = chain();
        let i = ideal_ia(&c, ps(&[0, 2]), &asg(&c, &[0, 2], &[(2, &[0, 1, 2])])).unwrap();
        assert_eq!(i.maximal(), vec![ps(&[1])]);

        for &u in c.opens() {
            let i = ideal_ia(&c, u, &NbhdAssignment::minimal(&c, u)).unwrap();
            assert!(i.is_trivial());
        }
    }

    #[test]
    fn invalid_assignments_are_rejected() {
        let c = chain();
        // domain is {c}; assigning a is wrong
        let bad: BTreeMap<_, _> = [(0, ps(&[0]))].into_iter().collect();
        assert!(NbhdAssignment::new(&c, ps(&[0, 2]), bad).is_err());
        // {b, c} is not open
        let bad: BTreeMap<_, _> = [(2, ps(&[1, 2]))].into_iter().collect();
        assert!(NbhdAssignment::new(&c, ps(&[0, 2]), bad).is_err());
        // assignment for another set
        let other = NbhdAssignment::minimal(&c, ps(&[1]));
        assert!(ideal_ia(&c, ps(&[0, 2]), &other).is_err());
    }

    #[test]
    fn assignment_counts() {
        let c = chain();
        assert_eq!(assignments(&c, ps(&[0, 2])).count(), 1);
        assert_eq!(assignments(&c, ps(&[0, 1])).count(), 1);
        assert!(assignments(&c, ps(&[0, 1]))
            .next()
            .unwrap()
            .choice()
            .is_empty());
        assert_eq!(assignments(&Topology::indiscrete(2), ps(&[0])).count(), 1);
        // {b}: opens containing b are {a,b} and X
        assert_eq!(assignments(&c, ps(&[1])).count(), 2);
        // discrete 3 minus nothing: every set is open
        assert_eq!(assignments(&Topology::discrete(3), ps(&[0, 1])).count(), 1);
    }

    #[test]
    fn assignment_count_matches_product() {
        let t = Topology::from_opens(
            3,
            [ps(&[]), ps(&[0]), ps(&[1]), ps(&[0, 1]), ps(&[0, 1, 2])],
        )
        .unwrap();
        for a in PointSet::full(3).subsets() {
            let it = assignments(&t, a);
            let expected: usize = (a - t.interior(a))
                .points()
                .map(|x| t.opens_containing(x).count())
                .product();
            assert_eq!(it.count_total(), expected);
            let all: Vec<_> = it.collect();
            assert_eq!(all.len(), expected);
            for g in &all {
                NbhdAssignment::new(&t, a, g.choice().clone()).unwrap();
            }
        }
    }

    #[test]
    fn prime_examples() {
        let c = chain();
        assert_eq!(ideal_ia_prime(&c, ps(&[0, 2])).maximal(), vec![ps(&[1])]);
        assert_eq!(
            ideal_ia_prime(&sierpinski(), ps(&[0])).maximal(),
            vec![ps(&[1])]
        );
        assert!(ideal_ia_prime(&c, ps(&[0, 1])).is_trivial());
        assert!(prime_assignment(&c, ps(&[1])).is_minimal(&c));
    }

    #[test]
    fn prime_branches_without_minimal_neighbourhoods() {
        let cands = [ps(&[0, 1, 2, 3]), ps(&[0, 1]), ps(&[0, 3]), ps(&[1, 2])];
        // branch 1
        assert_eq!(
            prime_neighbourhood(0, Some(ps(&[0])), &cands, ps(&[0, 1])),
            Some(ps(&[0]))
        );
        // branch 2: inside the target, canonical tie-break picks {0,1} over {0,3}
        assert_eq!(
            prime_neighbourhood(0, None, &cands, ps(&[0, 1, 3])),
            Some(ps(&[0, 1]))
        );
        assert_eq!(
            prime_neighbourhood(0, None, &cands, ps(&[0, 3])),
            Some(ps(&[0, 3]))
        );
        // branch 3: nothing fits, first candidate around x
        assert_eq!(
            prime_neighbourhood(2, None, &cands, ps(&[0])),
            Some(ps(&[1, 2]))
        );
        assert_eq!(prime_neighbourhood(3, None, &cands[1..2], ps(&[0])), None);
    }

    #[test]
    fn max_examples() {
        let c = chain();
        assert_eq!(
            ideal_ia_max(&c, ps(&[0, 2])).unwrap().maximal(),
            vec![ps(&[1])]
        );
        let d = Topology::discrete(3);
        assert!(ideal_ia_max(&d, ps(&[1])).unwrap().is_trivial());
        assert!(matches!(
            ideal_ia_max(&sierpinski(), ps(&[0])),
            Err(Error::NotPreopen(_))
        ));
        let sp = IdealSpace::new(c.clone(), ideal_ia_max(&c, ps(&[0, 2])).unwrap()).unwrap();
        assert!(sp.is_compatible());
    }

    #[test]
    fn shrink_removes_closed_point() {
        let c = chain();
        // A = {b}, U_b = X, y = c is closed
        let original = asg(&c, &[1], &[(1, &[0, 1, 2])]);
        let shrunk = shrink_assignment(&c, &original, 1, 2).unwrap();
        assert_eq!(shrunk.get(1), Some(ps(&[0, 1])));
        let before = ideal_ia(&c, ps(&[1]), &original).unwrap();
        let after = ideal_ia(&c, ps(&[1]), &shrunk).unwrap();
        assert!(after.is_subideal(&before) && after != before);
        assert!(after.members().all(|m| !m.contains(2)));
        // {a} is not closed
        assert!(matches!(
            shrink_assignment(&c, &original, 1, 0),
            Err(Error::SingletonNotClosed(0))
        ));
        // y must lie in U_x0 \ A
        assert!(matches!(
            shrink_assignment(&c, &original, 1, 1),
            Err(Error::InvalidShrinkPoint { .. })
        ));
    }

    #[test]
    fn shrink_only_touches_neighbourhoods_containing_y() {
        // specialisation order 0 < 1 < 3 and 0 < 2; {2} and {3} are closed
        let t =
            Topology::from_min_nbhds(4, vec![ps(&[0]), ps(&[0, 1]), ps(&[0, 2]), ps(&[0, 1, 3])])
                .unwrap();
        assert!(t.is_closed(ps(&[3])));
        let a = ps(&[1, 2]);
        let original = asg(&t, &[1, 2], &[(1, &[0, 1, 3]), (2, &[0, 2])]);
        let shrunk = shrink_assignment(&t, &original, 1, 3).unwrap();
        assert_eq!(shrunk.get(1), Some(ps(&[0, 1])));
        assert_eq!(shrunk.get(2), original.get(2));
        let before = ideal_ia(&t, a, &original).unwrap();
        let after = ideal_ia(&t, a, &shrunk).unwrap();
        assert_eq!(before.top(), ps(&[0, 3]));
        assert_eq!(after.top(), ps(&[0]));
    }

    #[test]
    fn dense_fip_examples() {
        let c = chain();
        assert!(has_dense_fip(&c, &[ps(&[0]), ps(&[0, 1])]));
        let ind = Topology::indiscrete(2);
        assert!(!has_dense_fip(&ind, &[ps(&[0]), ps(&[1])]));
        assert!(has_dense_fip(&c, &[c.full()]));
        assert!(has_dense_fip(&c, &[]));
    }

    #[test]
    fn greedy_maximal_examples() {
        let c = chain();
        assert_eq!(
            dense_fip_maximal(&c, &[]).unwrap().members(),
            &[ps(&[0]), ps(&[0, 1]), ps(&[0, 2]), ps(&[0, 1, 2])]
        );
        let ind = Topology::indiscrete(2);
        assert_eq!(
            dense_fip_maximal(&ind, &[ps(&[0])]).unwrap().members(),
            &[ps(&[0]), ps(&[0, 1])]
        );
        assert_eq!(
            dense_fip_maximal(&ind, &[ps(&[1])]).unwrap().members(),
            &[ps(&[1]), ps(&[0, 1])]
        );
        assert!(matches!(
            dense_fip_maximal(&ind, &[ps(&[0]), ps(&[1])]),
            Err(Error::NotDenseFip)
        ));
    }

    #[test]
    fn all_maximal_families_indiscrete_pair() {
        let fams = all_maximal_dense_fip(&Topology::indiscrete(2));
        assert_eq!(fams.len(), 2);
        assert_eq!(all_maximal_dense_fip(&chain()).len(), 1);
        assert_eq!(all_maximal_dense_fip(&Topology::discrete(3)).len(), 1);
    }

    #[test]
    fn ideal_id_examples() {
        let c = chain();
        let full = dense_fip_maximal(&c, &[]).unwrap();
        assert_eq!(ideal_id(&c, &full).maximal(), vec![ps(&[1, 2])]);
        let only_x = DenseFamily::new(&c, [c.full()]).unwrap();
        assert!(ideal_id(&c, &only_x).is_trivial());
        let ind = Topology::indiscrete(2);
        let d = DenseFamily::new(&ind, [ps(&[0]), ps(&[0, 1])]).unwrap();
        assert_eq!(ideal_id(&ind, &d).maximal(), vec![ps(&[1])]);
    }
}
