//! One checker per expansion theorem.

use crate::constructions::{has_dense_fip, ideal_ia_max, shrink_assignment, NbhdAssignment};
use crate::ideal::{trace_is_trivial, Ideal, IdealSpace};
use crate::pointset::PointSet;
use crate::topology::Topology;

use super::reference;
use super::{Checker, Instance, Plan, Verdict};

pub(super) fn theorem_checkers() -> Vec<Box<dyn Checker>> {
    vec![
        Box::new(AOpen),
        Box::new(UnionEmptyInterior),
        Box::new(TraceTrivialIffInteriorsEmpty),
        Box::new(ShrinkStrictlySmaller),
        Box::new(SemiregPreserved(SemiregMode::Trace)),
        Box::new(SemiregPreserved(SemiregMode::Dense)),
        Box::new(SemiregPreserved(SemiregMode::Preopen)),
        Box::new(SemiregPreserved(SemiregMode::Id)),
        Box::new(NotPreopenDisconnected),
        Box::new(TraceNontrivialDisconnected),
        Box::new(PrimeTraceIffPreopen),
        Box::new(ConnectedIffPreopen),
        Box::new(IdTraceTrivial),
        Box::new(IdSubmaximal),
    ]
}

/// `(A, assignment, I_A)` from an instance.
fn ia(t: &Topology, inst: &Instance) -> Option<(PointSet, NbhdAssignment, Ideal)> {
    let asg = inst.assignment.clone()?;
    let ideal = Ideal::from_generators(t.n(), &asg.generators()).ok()?;
    Some((asg.set_a(), asg, ideal))
}

fn space(t: &Topology, ideal: Ideal) -> IdealSpace {
    IdealSpace::new(t.clone(), ideal).expect("ideal built on the same ground set")
}

fn star(t: &Topology, ideal: Ideal) -> Topology {
    space(t, ideal).star_topology()
}

fn semireg_preserved(t: &Topology, ideal: Ideal) -> bool {
    t.semiregularization() == star(t, ideal).semiregularization()
}

fn generator_interiors_empty(t: &Topology, asg: &NbhdAssignment) -> bool {
    asg.generators().iter().all(|&g| t.interior(g).is_empty())
}

/// `I_D` for any list of sets, FIP or not.
fn family_ideal(t: &Topology, family: &[PointSet]) -> Ideal {
    Ideal::principal(t.n(), reference::ideal_top_of_complements(t.n(), family))
        .expect("complements lie in the ground set")
}

struct AOpen;

impl Checker for AOpen {
    fn id(&self) -> &'static str {
        "check_A_open"
    }

    fn claim(&self) -> &'static str {
        "A is open in the topology expanded by I_A, for every neighbourhood assignment"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.assignment_instances().to_vec()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (a, _, ideal) = ia(t, inst)?;
        Some(Verdict::holds(space(t, ideal).is_star_open(a)))
    }
}

struct UnionEmptyInterior;

impl Checker for UnionEmptyInterior {
    fn id(&self) -> &'static str {
        "check_union_empty_interior"
    }

    fn claim(&self) -> &'static str {
        "if every U_x \\ A has empty interior then so does their union"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.assignment_instances().to_vec()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (_, asg, ideal) = ia(t, inst)?;
        Some(Verdict::implication(
            generator_interiors_empty(t, &asg),
            t.interior(ideal.top()).is_empty(),
        ))
    }

    /// Pairs of sets with empty interiors. The structure the lemma relies on
    /// is that each `U_x \ A` is cut out of the union by an open set; the
    /// control drops it.
    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        let t = plan.topology;
        let thin: Vec<PointSet> = plan
            .sets()
            .into_iter()
            .filter(|&s| t.interior(s).is_empty())
            .collect();
        let mut out = Vec::new();
        for (i, &p) in thin.iter().enumerate() {
            for &q in &thin[i..] {
                out.push(Instance {
                    pair: Some((p, q)),
                    ..Default::default()
                });
            }
        }
        Some(out)
    }

    fn evaluate_control(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (p, q) = inst.pair?;
        let union = p | q;
        let relatively_open = |s: PointSet| t.opens().iter().any(|&u| u & union == s);
        let thin = t.interior(p).is_empty() && t.interior(q).is_empty();
        Some(Verdict::implication(
            thin && relatively_open(p) && relatively_open(q),
            t.interior(union).is_empty(),
        ))
    }
}

struct TraceTrivialIffInteriorsEmpty;

impl Checker for TraceTrivialIffInteriorsEmpty {
    fn id(&self) -> &'static str {
        "check_trace_trivial_iff_interiors_empty"
    }

    fn claim(&self) -> &'static str {
        "the trace of I_A is trivial iff every U_x \\ A has empty interior"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.assignment_instances().to_vec()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (_, asg, ideal) = ia(t, inst)?;
        Some(Verdict::holds(
            trace_is_trivial(t, &ideal) == generator_interiors_empty(t, &asg),
        ))
    }
}

struct ShrinkStrictlySmaller;

impl Checker for ShrinkStrictlySmaller {
    fn id(&self) -> &'static str {
        "check_shrink_strictly_smaller"
    }

    fn claim(&self) -> &'static str {
        "removing a closed point y of U_x0 \\ A from every U_x gives a strictly smaller ideal that still opens A"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        let t = plan.topology;
        let mut out = Vec::new();
        for base in plan.assignment_instances() {
            let asg = base.assignment.as_ref().expect("assignment instance");
            for (&x0, &u0) in asg.choice() {
                for y in (u0 - asg.set_a()).points() {
                    if t.is_closed(PointSet::singleton(y)) {
                        out.push(Instance {
                            shrink: Some((x0, y)),
                            ..base.clone()
                        });
                    }
                }
            }
        }
        out
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (a, asg, ideal) = ia(t, inst)?;
        let (x0, y) = inst.shrink?;
        let Ok(shrunk) = shrink_assignment(t, &asg, x0, y) else {
            return Some(Verdict::implication(false, true));
        };
        let smaller = Ideal::from_generators(t.n(), &shrunk.generators()).ok()?;
        let strict = smaller.is_subideal(&ideal) && smaller != ideal;
        Some(Verdict::holds(strict && space(t, smaller).is_star_open(a)))
    }

    fn notes(&self) -> Vec<String> {
        vec![
            "finite T1 spaces are discrete, where every A is open; the check runs on non-T1 spaces wherever a closed singleton lies in U_x0 \\ A".to_string(),
        ]
    }
}

#[derive(Clone, Copy)]
enum SemiregMode {
    Trace,
    Dense,
    Preopen,
    Id,
}

struct SemiregPreserved(SemiregMode);

impl Checker for SemiregPreserved {
    fn id(&self) -> &'static str {
        match self.0 {
            SemiregMode::Trace => "check_semireg_preserved.trace",
            SemiregMode::Dense => "check_semireg_preserved.dense",
            SemiregMode::Preopen => "check_semireg_preserved.preopen",
            SemiregMode::Id => "check_semireg_preserved.ID",
        }
    }

    fn claim(&self) -> &'static str {
        match self.0 {
            SemiregMode::Trace => {
                "an ideal with trivial trace leaves the semiregularization unchanged"
            }
            SemiregMode::Dense => "I_A for dense A leaves the semiregularization unchanged",
            SemiregMode::Preopen => "I'_A for preopen A leaves the semiregularization unchanged",
            SemiregMode::Id => {
                "I_D for a maximal dense-FIP family leaves the semiregularization unchanged"
            }
        }
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        match self.0 {
            SemiregMode::Trace => plan
                .ideals()
                .into_iter()
                .map(Instance::with_ideal)
                .collect(),
            SemiregMode::Dense => plan.assignment_instances().to_vec(),
            SemiregMode::Preopen => plan.prime_instances(),
            SemiregMode::Id => plan
                .maximal_families()
                .iter()
                .map(|f| Instance::with_family(f.members().to_vec()))
                .collect(),
        }
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        match self.0 {
            SemiregMode::Trace => {
                let ideal = inst.ideal?;
                Some(Verdict::implication(
                    trace_is_trivial(t, &ideal),
                    semireg_preserved(t, ideal),
                ))
            }
            SemiregMode::Dense => {
                let (a, _, ideal) = ia(t, inst)?;
                Some(Verdict::implication(
                    t.is_dense(a),
                    semireg_preserved(t, ideal),
                ))
            }
            SemiregMode::Preopen => {
                let (a, asg, ideal) = ia(t, inst)?;
                Some(Verdict::implication(
                    t.is_preopen(a) && asg.is_minimal(t),
                    semireg_preserved(t, ideal),
                ))
            }
            SemiregMode::Id => {
                let family = inst.family.as_ref()?;
                Some(Verdict::implication(
                    reference::is_maximal_dense_fip(t, family),
                    semireg_preserved(t, family_ideal(t, family)),
                ))
            }
        }
    }

    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        match self.0 {
            SemiregMode::Trace => Some(self.instances(plan)),
            SemiregMode::Dense => Some(self.instances(plan)),
            SemiregMode::Preopen => Some(plan.assignment_instances().to_vec()),
            SemiregMode::Id => Some(
                plan.small_dense_families()
                    .into_iter()
                    .map(Instance::with_family)
                    .collect(),
            ),
        }
    }

    fn notes(&self) -> Vec<String> {
        match self.0 {
            SemiregMode::Dense => vec![
                "unforced_conclusions counts non-dense A whose expansion still preserves the semiregularization".to_string(),
            ],
            _ => Vec::new(),
        }
    }
}

struct NotPreopenDisconnected;

impl Checker for NotPreopenDisconnected {
    fn id(&self) -> &'static str {
        "check_not_preopen_disconnected"
    }

    fn claim(&self) -> &'static str {
        "if A is not preopen then the topology expanded by I_A is disconnected"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.assignment_instances().to_vec()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (a, _, ideal) = ia(t, inst)?;
        Some(Verdict::implication(
            !t.is_preopen(a),
            !star(t, ideal).is_connected(),
        ))
    }

    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        Some(self.instances(plan))
    }
}

struct TraceNontrivialDisconnected;

impl Checker for TraceNontrivialDisconnected {
    fn id(&self) -> &'static str {
        "check_trace_nontrivial_disconnected"
    }

    fn claim(&self) -> &'static str {
        "if I_A has nontrivial trace then the expanded topology is disconnected"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.assignment_instances().to_vec()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (_, _, ideal) = ia(t, inst)?;
        Some(Verdict::implication(
            !trace_is_trivial(t, &ideal),
            !star(t, ideal).is_connected(),
        ))
    }

    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        Some(self.instances(plan))
    }
}

struct PrimeTraceIffPreopen;

impl Checker for PrimeTraceIffPreopen {
    fn id(&self) -> &'static str {
        "check_IAprime_trace_iff_preopen"
    }

    fn claim(&self) -> &'static str {
        "with minimal neighbourhoods, the trace of I'_A is trivial iff A is preopen"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.prime_instances()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (a, asg, ideal) = ia(t, inst)?;
        Some(Verdict::implication(
            asg.is_minimal(t),
            trace_is_trivial(t, &ideal) == t.is_preopen(a),
        ))
    }

    /// Every assignment, so non-minimal neighbourhoods can break the
    /// equivalence.
    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        Some(plan.assignment_instances().to_vec())
    }
}

struct ConnectedIffPreopen;

impl ConnectedIffPreopen {
    /// The comparison with `I_A^max` used on the way to the theorem:
    /// `I'_A ⊆ I_A^max`, the expansions nest, `I_A^max` is compatible, and
    /// its base is already the whole expanded topology.
    fn max_scaffolding(t: &Topology, a: PointSet, prime: Ideal) -> bool {
        let Ok(max) = ideal_ia_max(t, a) else {
            return false;
        };
        let sp_max = space(t, max);
        let tau_max = sp_max.star_topology();
        prime.is_subideal(&max)
            && star(t, prime).is_coarser_than(&tau_max)
            && sp_max.is_compatible()
            && sp_max.base_beta() == tau_max.opens()
    }
}

impl Checker for ConnectedIffPreopen {
    fn id(&self) -> &'static str {
        "check_connected_iff_preopen"
    }

    fn claim(&self) -> &'static str {
        "for connected T and minimal neighbourhoods, the expansion by I'_A is connected iff A is preopen"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.prime_instances()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let (a, asg, ideal) = ia(t, inst)?;
        let hypothesis = t.is_connected() && asg.is_minimal(t);
        let preopen = t.is_preopen(a);
        let iff = star(t, ideal).is_connected() == preopen;
        let scaffolding = !preopen || Self::max_scaffolding(t, a, ideal);
        Some(Verdict::implication(hypothesis, iff && scaffolding))
    }

    /// Every assignment over every topology, connected or not.
    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        Some(plan.assignment_instances().to_vec())
    }
}

struct IdTraceTrivial;

impl Checker for IdTraceTrivial {
    fn id(&self) -> &'static str {
        "check_ID_trace_trivial"
    }

    fn claim(&self) -> &'static str {
        "I_D has trivial trace for every maximal dense-FIP family"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.maximal_families()
            .iter()
            .map(|f| Instance::with_family(f.members().to_vec()))
            .collect()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let family = inst.family.as_ref()?;
        Some(Verdict::implication(
            has_dense_fip(t, family),
            trace_is_trivial(t, &family_ideal(t, family)),
        ))
    }

    /// One or two dense sets, with or without the dense FIP.
    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        Some(
            plan.small_dense_families()
                .into_iter()
                .map(Instance::with_family)
                .collect(),
        )
    }

    fn notes(&self) -> Vec<String> {
        vec!["the hypothesis checked is the dense FIP alone; maximality is not needed for a trivial trace".to_string()]
    }
}

struct IdSubmaximal;

impl Checker for IdSubmaximal {
    fn id(&self) -> &'static str {
        "check_ID_submaximal"
    }

    fn claim(&self) -> &'static str {
        "the expansion by I_D of a maximal dense-FIP family is submaximal, by both characterizations"
    }

    fn instances(&self, plan: &Plan) -> Vec<Instance> {
        plan.maximal_families()
            .iter()
            .map(|f| Instance::with_family(f.members().to_vec()))
            .collect()
    }

    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        let family = inst.family.as_ref()?;
        let expanded = star(t, family_ideal(t, family));
        Some(Verdict::implication(
            reference::is_maximal_dense_fip(t, family),
            expanded.is_submaximal() && expanded.is_submaximal_by_dense(),
        ))
    }

    /// Families of one or two dense sets, most of them not maximal.
    fn control_instances(&self, plan: &Plan) -> Option<Vec<Instance>> {
        Some(
            plan.small_dense_families()
                .into_iter()
                .map(Instance::with_family)
                .collect(),
        )
    }
}
