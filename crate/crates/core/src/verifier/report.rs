use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::constructions::NbhdAssignment;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::json::{AssignmentDesc, FamilyDesc, IdealDesc, Labels, SpaceDesc};
use crate::pointset::PointSet;
use crate::topology::Topology;

/// How many witnesses a report keeps; the total is always counted.
pub const MAX_WITNESSES: usize = 16;

/// The data one checker evaluates against a topology.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instance {
    pub set_a: Option<PointSet>,
    pub assignment: Option<NbhdAssignment>,
    pub ideal: Option<Ideal>,
    pub second_ideal: Option<Ideal>,
    pub family: Option<Vec<PointSet>>,
    /// `(x0, y)` for the shrinking step.
    pub shrink: Option<(usize, usize)>,
    pub pair: Option<(PointSet, PointSet)>,
}

impl Instance {
    pub fn with_set(a: PointSet) -> Self {
        Instance {
            set_a: Some(a),
            ..Default::default()
        }
    }

    pub fn with_assignment(asg: NbhdAssignment) -> Self {
        Instance {
            set_a: Some(asg.set_a()),
            assignment: Some(asg),
            ..Default::default()
        }
    }

    pub fn with_ideal(ideal: Ideal) -> Self {
        Instance {
            ideal: Some(ideal),
            ..Default::default()
        }
    }

    pub fn with_family(family: Vec<PointSet>) -> Self {
        Instance {
            family: Some(family),
            ..Default::default()
        }
    }

    fn key(&self) -> Vec<u32> {
        let mut k = Vec::new();
        let opt = |k: &mut Vec<u32>, s: Option<PointSet>| match s {
            Some(s) => {
                k.push(1);
                k.push(s.bits());
            }
            None => k.push(0),
        };
        opt(&mut k, self.set_a);
        if let Some(asg) = &self.assignment {
            for (&x, &u) in asg.choice() {
                k.push(x as u32);
                k.push(u.bits());
            }
        }
        opt(&mut k, self.ideal.map(|i| i.top()));
        opt(&mut k, self.second_ideal.map(|i| i.top()));
        if let Some(f) = &self.family {
            k.push(f.len() as u32);
            k.extend(f.iter().map(|s| s.bits()));
        }
        if let Some((x0, y)) = self.shrink {
            k.push(x0 as u32);
            k.push(y as u32);
        }
        if let Some((p, q)) = self.pair {
            k.push(p.bits());
            k.push(q.bits());
        }
        k
    }
}

/// What a witness demonstrates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// Hypothesis held, conclusion failed.
    Violation,
    /// Hypothesis held and the conclusion held, recorded while that
    /// checker's conclusion was flipped for the harness self-test.
    MutatedViolation,
    /// Hypothesis failed and the conclusion failed with it.
    NegativeControl,
}

/// A topology plus the instance on which a checker's verdict went wrong
/// (or, for negative controls, the instance showing a hypothesis matters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub statement_id: String,
    pub kind: WitnessKind,
    pub topology: Topology,
    pub instance: Instance,
    pub note: String,
}

impl Counterexample {
    pub(crate) fn sort_key(&self) -> (usize, Vec<u32>, Vec<u32>) {
        (
            self.topology.n(),
            self.topology.min_nbhds().iter().map(|s| s.bits()).collect(),
            self.instance.key(),
        )
    }

    pub fn to_json(&self) -> WitnessDesc {
        let inst = &self.instance;
        WitnessDesc {
            statement_id: self.statement_id.clone(),
            kind: self.kind,
            topology: SpaceDesc::from_topology(&self.topology),
            set_a: inst.set_a.map(PointSet::to_vec),
            assignment: inst
                .assignment
                .as_ref()
                .map(AssignmentDesc::from_assignment),
            ideal: inst.ideal.as_ref().map(IdealDesc::from_ideal),
            second_ideal: inst.second_ideal.as_ref().map(IdealDesc::from_ideal),
            family: inst.family.as_deref().map(FamilyDesc::from_sets),
            shrink: inst.shrink.map(|(x0, y)| ShrinkDesc { x0, y }),
            pair: inst.pair.map(|(p, q)| [p.to_vec(), q.to_vec()]),
            note: self.note.clone(),
        }
    }

    pub fn from_json(w: &WitnessDesc) -> Result<Self> {
        let (topology, labels) = w.topology.to_topology()?;
        let n = topology.n();
        let set = |v: &Vec<usize>| crate::json::set_from_json(v, n);
        let instance = Instance {
            set_a: w.set_a.as_ref().map(set).transpose()?,
            assignment: w
                .assignment
                .as_ref()
                .map(|a| a.to_assignment(&topology, &labels))
                .transpose()?,
            ideal: w
                .ideal
                .as_ref()
                .map(|i| i.to_ideal(n, &labels))
                .transpose()?,
            second_ideal: w
                .second_ideal
                .as_ref()
                .map(|i| i.to_ideal(n, &Labels::default()))
                .transpose()?,
            family: w
                .family
                .as_ref()
                .map(|f| f.to_sets(n, &labels))
                .transpose()?,
            shrink: match w.shrink {
                Some(ShrinkDesc { x0, y }) if x0 < n && y < n => Some((x0, y)),
                Some(ShrinkDesc { x0, y }) => {
                    return Err(Error::PointOutOfRange {
                        point: x0.max(y),
                        n,
                    })
                }
                None => None,
            },
            pair: w
                .pair
                .as_ref()
                .map(|[p, q]| Ok::<_, Error>((set(p)?, set(q)?)))
                .transpose()?,
        };
        Ok(Counterexample {
            statement_id: w.statement_id.clone(),
            kind: w.kind,
            topology,
            instance,
            note: w.note.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkDesc {
    pub x0: usize,
    pub y: usize,
}

/// JSON form of a [`Counterexample`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDesc {
    pub statement_id: String,
    pub kind: WitnessKind,
    pub topology: SpaceDesc,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub set_a: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<AssignmentDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second_ideal: Option<IdealDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shrink: Option<ShrinkDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<[Vec<usize>; 2]>,
    pub note: String,
}

/// Outcome of one checker over every instance it was given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub statement_id: String,
    pub instances_checked: u64,
    /// Instances on which the hypothesis held.
    pub hypothesis_held: u64,
    /// Instances where the hypothesis failed and the conclusion held anyway.
    pub unforced_conclusions: u64,
    pub violation_count: u64,
    /// The first [`MAX_WITNESSES`] violations in canonical order.
    pub violations: Vec<Counterexample>,
    pub elapsed: Duration,
    pub exploratory: bool,
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn empty(statement_id: &str) -> Self {
        PropertyReport {
            statement_id: statement_id.to_string(),
            instances_checked: 0,
            hypothesis_held: 0,
            unforced_conclusions: 0,
            violation_count: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
            exploratory: false,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Sums counts and keeps the canonically smallest witnesses, so merging
    /// is associative and independent of argument order.
    pub fn merge(mut self, other: PropertyReport) -> PropertyReport {
        debug_assert_eq!(self.statement_id, other.statement_id);
        self.instances_checked += other.instances_checked;
        self.hypothesis_held += other.hypothesis_held;
        self.unforced_conclusions += other.unforced_conclusions;
        self.violation_count += other.violation_count;
        self.elapsed += other.elapsed;
        self.exploratory |= other.exploratory;
        self.violations.extend(other.violations);
        keep_smallest(&mut self.violations);
        for note in other.notes {
            if !self.notes.contains(&note) {
                self.notes.push(note);
            }
        }
        self
    }

    pub fn to_json(&self) -> ReportDesc {
        ReportDesc {
            statement_id: self.statement_id.clone(),
            instances: self.instances_checked,
            hypothesis_held: self.hypothesis_held,
            unforced_conclusions: self.unforced_conclusions,
            violation_count: self.violation_count,
            violations: self
                .violations
                .iter()
                .map(Counterexample::to_json)
                .collect(),
            elapsed_ms: self.elapsed.as_millis() as u64,
            exploratory: self.exploratory,
            notes: self.notes.clone(),
        }
    }
}

pub(crate) fn keep_smallest(v: &mut Vec<Counterexample>) {
    v.sort_by_cached_key(Counterexample::sort_key);
    v.dedup_by(|a, b| a.sort_key() == b.sort_key());
    v.truncate(MAX_WITNESSES);
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDesc {
    pub statement_id: String,
    pub instances: u64,
    pub hypothesis_held: u64,
    pub unforced_conclusions: u64,
    pub violation_count: u64,
    pub violations: Vec<WitnessDesc>,
    pub elapsed_ms: u64,
    #[serde(default)]
    pub exploratory: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Result of searching for an instance where a statement's hypothesis fails
/// and its conclusion fails with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlReport {
    pub statement_id: String,
    pub instances_checked: u64,
    pub witnesses_found: u64,
    pub witness: Option<Counterexample>,
}

impl ControlReport {
    pub fn empty(statement_id: &str) -> Self {
        ControlReport {
            statement_id: statement_id.to_string(),
            instances_checked: 0,
            witnesses_found: 0,
            witness: None,
        }
    }

    pub fn merge(mut self, other: ControlReport) -> ControlReport {
        self.instances_checked += other.instances_checked;
        self.witnesses_found += other.witnesses_found;
        self.witness = match (self.witness, other.witness) {
            (Some(a), Some(b)) => Some(if b.sort_key() < a.sort_key() { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn note(&self) -> String {
        match &self.witness {
            Some(_) => "hypothesis-false/conclusion-false witness found".to_string(),
            None => "no witness at this scale".to_string(),
        }
    }

    pub fn to_json(&self) -> ControlDesc {
        ControlDesc {
            statement_id: self.statement_id.clone(),
            instances: self.instances_checked,
            witnesses_found: self.witnesses_found,
            witness: self.witness.as_ref().map(Counterexample::to_json),
            note: self.note(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControlDesc {
    pub statement_id: String,
    pub instances: u64,
    pub witnesses_found: u64,
    pub witness: Option<WitnessDesc>,
    pub note: String,
}

/// Everything one suite run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub n_max: usize,
    pub sample_count: usize,
    pub seed: u64,
    pub mutated: Option<String>,
    pub reports: Vec<PropertyReport>,
    pub controls: Vec<ControlReport>,
}

impl SuiteReport {
    /// No non-exploratory report has a violation.
    pub fn passed(&self) -> bool {
        self.reports
            .iter()
            .filter(|r| !r.exploratory)
            .all(PropertyReport::passed)
    }

    pub fn report(&self, id: &str) -> Option<&PropertyReport> {
        self.reports.iter().find(|r| r.statement_id == id)
    }

    pub fn control(&self, id: &str) -> Option<&ControlReport> {
        self.controls.iter().find(|r| r.statement_id == id)
    }

    pub fn to_json(&self) -> SuiteDesc {
        SuiteDesc {
            n_max: self.n_max,
            sample_count: self.sample_count,
            seed: self.seed,
            mutated: self.mutated.clone(),
            passed: self.passed(),
            reports: self.reports.iter().map(PropertyReport::to_json).collect(),
            negative_controls: self.controls.iter().map(ControlReport::to_json).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteDesc {
    pub n_max: usize,
    pub sample_count: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutated: Option<String>,
    pub passed: bool,
    pub reports: Vec<ReportDesc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub negative_controls: Vec<ControlDesc>,
}
