//! Exhaustive checking of the expansion theorems over enumerated instances.
//!
//! Each [`Checker`] turns a topology into a list of [`Instance`]s and judges
//! each one with a [`Verdict`]: whether the statement's hypothesis held and
//! whether its conclusion held. A violation is a hypothesis without its
//! conclusion. Checkers that define negative controls are also searched for
//! instances where the hypothesis fails *and* the conclusion fails, which
//! shows the hypothesis is needed at this scale.

mod checkers;
mod invariants;
pub mod reference;
mod report;

use std::cell::OnceCell;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{
    all_maximal_dense_fip, assignments, dense_fip_maximal, prime_assignment, DenseFamily,
    NbhdAssignment,
};
use crate::enumeration::{
    ideals, random_topology, topology_chunks, EnumerationBudget, MAX_ENUMERATION_POINTS,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::pointset::{all_subsets, PointSet};
use crate::topology::Topology;

pub use report::{
    ControlDesc, ControlReport, Counterexample, Instance, PropertyReport, ReportDesc, ShrinkDesc,
    SuiteDesc, SuiteReport, WitnessDesc, WitnessKind, MAX_WITNESSES,
};

/// Outcome of evaluating one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Verdict {
    /// A statement without hypothesis.
    pub fn holds(conclusion: bool) -> Self {
        Verdict {
            hypothesis: true,
            conclusion,
        }
    }

    pub fn implication(hypothesis: bool, conclusion: bool) -> Self {
        Verdict {
            hypothesis,
            conclusion,
        }
    }
}

pub trait Checker: Send + Sync {
    fn id(&self) -> &'static str;

    /// One-line statement of what is checked.
    fn claim(&self) -> &'static str;

    fn instances(&self, plan: &Plan) -> Vec<Instance>;

    /// `None` when the instance lacks a field this checker needs.
    fn evaluate(&self, t: &Topology, inst: &Instance) -> Option<Verdict>;

    /// Instances searched in negative-control mode; `None` means the checker
    /// has no hypothesis worth dropping.
    fn control_instances(&self, _plan: &Plan) -> Option<Vec<Instance>> {
        None
    }

    fn evaluate_control(&self, t: &Topology, inst: &Instance) -> Option<Verdict> {
        self.evaluate(t, inst)
    }

    /// Exploratory reports never affect the exit status.
    fn exploratory(&self) -> bool {
        false
    }

    fn notes(&self) -> Vec<String> {
        Vec::new()
    }
}

/// Every checker, in report order.
pub fn all_checkers() -> Vec<Box<dyn Checker>> {
    let mut v = checkers::theorem_checkers();
    v.extend(invariants::invariant_checkers());
    v
}

pub fn statement_ids() -> Vec<&'static str> {
    all_checkers().iter().map(|c| c.id()).collect()
}

/// Checkers whose id equals `selector`, or starts with `selector.` (so
/// `check_semireg_preserved` selects every mode).
pub fn select_checkers(selector: Option<&str>) -> Result<Vec<Box<dyn Checker>>> {
    let all = all_checkers();
    let Some(sel) = selector else {
        return Ok(all);
    };
    let chosen: Vec<_> = all
        .into_iter()
        .filter(|c| c.id() == sel || c.id().strip_prefix(sel).is_some_and(|r| r.starts_with('.')))
        .collect();
    if chosen.is_empty() {
        return Err(Error::UnknownStatement(sel.to_string()));
    }
    Ok(chosen)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub budget: EnumerationBudget,
    /// Up to this ground-set size every neighbourhood assignment is checked;
    /// above it the minimal assignment plus `assignment_samples` random ones.
    pub full_assignment_max_n: usize,
    pub assignment_samples: usize,
    /// Up to this size every maximal dense-FIP family is enumerated; above it
    /// greedy completions seeded by each dense set.
    pub family_enum_max_n: usize,
    pub negative_controls: bool,
    pub only: Option<String>,
    /// Flip the conclusion of this checker (harness self-test).
    pub mutate: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            budget: EnumerationBudget::default(),
            full_assignment_max_n: 3,
            assignment_samples: 4,
            family_enum_max_n: 4,
            negative_controls: false,
            only: None,
            mutate: None,
        }
    }
}

impl SuiteConfig {
    pub fn exhaustive(n_max: usize) -> Self {
        SuiteConfig {
            budget: EnumerationBudget {
                n_max_exhaustive: n_max,
                ..Default::default()
            },
            ..Default::default()
        }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn topology_seed(seed: u64, t: &Topology) -> u64 {
    t.min_nbhds()
        .iter()
        .fold(splitmix(seed ^ t.n() as u64), |h, s| {
            splitmix(h ^ s.bits() as u64)
        })
}

/// Per-topology view of the instance space, shared by all checkers.
pub struct Plan<'a> {
    pub topology: &'a Topology,
    config: &'a SuiteConfig,
    assignment_instances: OnceCell<Vec<Instance>>,
    families: OnceCell<Vec<DenseFamily>>,
}

impl<'a> Plan<'a> {
    pub fn new(topology: &'a Topology, config: &'a SuiteConfig) -> Self {
        Plan {
            topology,
            config,
            assignment_instances: OnceCell::new(),
            families: OnceCell::new(),
        }
    }

    pub fn sets(&self) -> Vec<PointSet> {
        all_subsets(self.topology.n())
    }

    /// Assignments for `a` under the configured policy, deterministic in the
    /// seed, the topology and `a`.
    pub fn assignments_for(&self, a: PointSet) -> Vec<NbhdAssignment> {
        let t = self.topology;
        if t.n() <= self.config.full_assignment_max_n {
            return assignments(t, a).collect();
        }
        let mut out = vec![NbhdAssignment::minimal(t, a)];
        let domain = a - t.interior(a);
        if domain.is_empty() {
            return out;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(splitmix(
            topology_seed(self.config.budget.rng_seed, t) ^ a.bits() as u64,
        ));
        let options: Vec<(usize, Vec<PointSet>)> = domain
            .points()
            .map(|x| (x, t.opens_containing(x).collect()))
            .collect();
        for _ in 0..self.config.assignment_samples {
            let choice = options
                .iter()
                .map(|(x, opts)| (*x, opts[rng.gen_range(0..opts.len())]))
                .collect();
            let asg = NbhdAssignment::new(t, a, choice).expect("sampled from opens around x");
            if !out.contains(&asg) {
                out.push(asg);
            }
        }
        out
    }

    /// `(A, assignment)` for every `A` and every planned assignment.
    pub fn assignment_instances(&self) -> &[Instance] {
        self.assignment_instances.get_or_init(|| {
            self.sets()
                .into_iter()
                .flat_map(|a| self.assignments_for(a))
                .map(Instance::with_assignment)
                .collect()
        })
    }

    /// `(A, minimal assignment)` for every `A`.
    pub fn prime_instances(&self) -> Vec<Instance> {
        self.sets()
            .into_iter()
            .map(|a| Instance::with_assignment(prime_assignment(self.topology, a)))
            .collect()
    }

    pub fn ideals(&self) -> Vec<Ideal> {
        ideals(self.topology.n()).collect()
    }

    pub fn maximal_families(&self) -> &[DenseFamily] {
        self.families.get_or_init(|| {
            let t = self.topology;
            if t.n() <= self.config.family_enum_max_n {
                return all_maximal_dense_fip(t);
            }
            let mut fams: Vec<DenseFamily> = Vec::new();
            let seeds = std::iter::once(None).chain(t.dense_sets().into_iter().map(Some));
            for seed in seeds {
                let seed: Vec<PointSet> = seed.into_iter().collect();
                let f = dense_fip_maximal(t, &seed).expect("a single dense set has the dense FIP");
                if !fams.contains(&f) {
                    fams.push(f);
                }
            }
            fams
        })
    }

    /// Families of one or two dense sets, with or without the dense FIP.
    pub fn small_dense_families(&self) -> Vec<Vec<PointSet>> {
        let dense = self.topology.dense_sets();
        let mut out = Vec::new();
        for (i, &d) in dense.iter().enumerate() {
            out.push(vec![d]);
            for &e in &dense[i + 1..] {
                out.push(vec![d, e]);
            }
        }
        out
    }
}

struct Accumulator {
    reports: Vec<PropertyReport>,
    controls: Vec<ControlReport>,
}

impl Accumulator {
    fn new(checkers: &[Box<dyn Checker>]) -> Self {
        Accumulator {
            reports: checkers
                .iter()
                .map(|c| {
                    let mut r = PropertyReport::empty(c.id());
                    r.exploratory = c.exploratory();
                    r.notes = c.notes();
                    r
                })
                .collect(),
            controls: checkers
                .iter()
                .map(|c| ControlReport::empty(c.id()))
                .collect(),
        }
    }

    fn merge(self, other: Accumulator) -> Accumulator {
        Accumulator {
            reports: self
                .reports
                .into_iter()
                .zip(other.reports)
                .map(|(a, b)| a.merge(b))
                .collect(),
            controls: self
                .controls
                .into_iter()
                .zip(other.controls)
                .map(|(a, b)| a.merge(b))
                .collect(),
        }
    }
}

fn is_violation(v: Verdict, mutated: bool) -> bool {
    v.hypothesis && (v.conclusion == mutated)
}

fn check_topology(
    checkers: &[Box<dyn Checker>],
    config: &SuiteConfig,
    t: &Topology,
    acc: &mut Accumulator,
) {
    let plan = Plan::new(t, config);
    for (i, c) in checkers.iter().enumerate() {
        let started = Instant::now();
        let mutated = config.mutate.as_deref() == Some(c.id());
        let report = &mut acc.reports[i];
        for inst in c.instances(&plan) {
            let v = c
                .evaluate(t, &inst)
                .unwrap_or_else(|| panic!("{} produced an incomplete instance", c.id()));
            report.instances_checked += 1;
            if v.hypothesis {
                report.hypothesis_held += 1;
            } else if v.conclusion {
                report.unforced_conclusions += 1;
            }
            if is_violation(v, mutated) {
                report.violation_count += 1;
                if report.violations.len() < 4 * MAX_WITNESSES {
                    report.violations.push(Counterexample {
                        statement_id: c.id().to_string(),
                        kind: if mutated {
                            WitnessKind::MutatedViolation
                        } else {
                            WitnessKind::Violation
                        },
                        topology: t.clone(),
                        instance: inst,
                        note: format!("violation: {}", c.claim()),
                    });
                }
            }
        }
        report::keep_smallest(&mut report.violations);
        if config.negative_controls {
            if let Some(controls) = c.control_instances(&plan) {
                let cr = &mut acc.controls[i];
                for inst in controls {
                    let v = c
                        .evaluate_control(t, &inst)
                        .unwrap_or_else(|| panic!("{} produced an incomplete control", c.id()));
                    cr.instances_checked += 1;
                    if !v.hypothesis && !v.conclusion {
                        cr.witnesses_found += 1;
                        let w = Counterexample {
                            statement_id: c.id().to_string(),
                            kind: WitnessKind::NegativeControl,
                            topology: t.clone(),
                            instance: inst,
                            note: format!(
                                "negative control: hypothesis and conclusion both fail for: {}",
                                c.claim()
                            ),
                        };
                        let better = cr
                            .witness
                            .as_ref()
                            .is_none_or(|cur| w.sort_key() < cur.sort_key());
                        if better {
                            cr.witness = Some(w);
                        }
                    }
                }
            }
        }
        acc.reports[i].elapsed += started.elapsed();
    }
}

/// Runs every selected checker over every topology on `1..=n_max_exhaustive`
/// points, plus `sample_count` random topologies on `sample_n` points.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let checkers = select_checkers(config.only.as_deref())?;
    if let Some(m) = &config.mutate {
        select_checkers(Some(m))?;
    }
    let budget = config.budget;
    if budget.n_max_exhaustive > MAX_ENUMERATION_POINTS {
        return Err(Error::GroundSetTooLarge(budget.n_max_exhaustive));
    }
    if budget.sample_count > 0 && budget.sample_n > crate::pointset::MAX_POINTS {
        return Err(Error::GroundSetTooLarge(budget.sample_n));
    }

    let mut total = Accumulator::new(&checkers);
    for n in 1..=budget.n_max_exhaustive {
        let part = topology_chunks(n)
            .into_par_iter()
            .map(|chunk| {
                let mut acc = Accumulator::new(&checkers);
                for t in chunk {
                    check_topology(&checkers, config, &t, &mut acc);
                }
                acc
            })
            .reduce(|| Accumulator::new(&checkers), Accumulator::merge);
        total = total.merge(part);
    }
    if budget.sample_count > 0 {
        let part = (0..budget.sample_count as u64)
            .into_par_iter()
            .map(|i| {
                let t = random_topology(budget.sample_n, splitmix(budget.rng_seed.wrapping_add(i)));
                let mut acc = Accumulator::new(&checkers);
                check_topology(&checkers, config, &t, &mut acc);
                acc
            })
            .reduce(|| Accumulator::new(&checkers), Accumulator::merge);
        total = total.merge(part);
    }

    let controls = if config.negative_controls {
        checkers
            .iter()
            .zip(total.controls)
            .filter(|(c, _)| {
                c.control_instances(&Plan::new(&Topology::discrete(1), config))
                    .is_some()
            })
            .map(|(_, r)| r)
            .collect()
    } else {
        Vec::new()
    };
    Ok(SuiteReport {
        n_max: budget.n_max_exhaustive,
        sample_count: budget.sample_count,
        seed: budget.rng_seed,
        mutated: config.mutate.clone(),
        reports: total.reports,
        controls,
    })
}

/// Re-evaluates a witness and reports whether it still shows what its kind
/// says: a failed conclusion under the hypothesis (a held one for mutated
/// runs), or for negative controls a failed hypothesis with a failed
/// conclusion.
pub fn replay(cex: &Counterexample) -> Result<bool> {
    let checker = all_checkers()
        .into_iter()
        .find(|c| c.id() == cex.statement_id)
        .ok_or_else(|| Error::UnknownStatement(cex.statement_id.clone()))?;
    let verdict = match cex.kind {
        WitnessKind::NegativeControl => checker.evaluate_control(&cex.topology, &cex.instance),
        _ => checker.evaluate(&cex.topology, &cex.instance),
    }
    .ok_or_else(|| {
        Error::Malformed(format!(
            "witness lacks fields needed by {}",
            cex.statement_id
        ))
    })?;
    Ok(match cex.kind {
        WitnessKind::Violation => is_violation(verdict, false),
        WitnessKind::MutatedViolation => is_violation(verdict, true),
        WitnessKind::NegativeControl => !verdict.hypothesis && !verdict.conclusion,
    })
}
