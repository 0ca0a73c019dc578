//! JSON descriptors for spaces, ideals, assignments and dense families.
//!
//! Points are 0-based indices. Input files may instead name points through a
//! `"labels"` array and refer to them by label; everything is resolved to
//! indices on load. Output always uses indices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::NbhdAssignment;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::topology::Topology;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRef {
    Index(usize),
    Label(String),
}

/// Optional names for the points of a space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels(Option<Vec<String>>);

impl Labels {
    pub fn new(names: Option<Vec<String>>) -> Self {
        Labels(names)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.0.as_deref()
    }

    pub fn resolve(&self, p: &PointRef, n: usize) -> Result<usize> {
        let idx = match p {
            PointRef::Index(i) => *i,
            PointRef::Label(s) => self.resolve_str(s)?,
        };
        if idx >= n {
            return Err(Error::PointOutOfRange { point: idx, n });
        }
        Ok(idx)
    }

    /// Resolves a label, falling back to a decimal index.
    pub fn resolve_str(&self, s: &str) -> Result<usize> {
        if let Some(names) = &self.0 {
            if let Some(i) = names.iter().position(|l| l == s) {
                return Ok(i);
            }
        }
        s.trim()
            .parse()
            .map_err(|_| Error::UnknownLabel(s.to_string()))
    }

    pub fn set(&self, points: &[PointRef], n: usize) -> Result<PointSet> {
        points
            .iter()
            .map(|p| self.resolve(p, n))
            .collect::<Result<Vec<_>>>()
            .map(PointSet::from_points)
    }

    /// Comma-separated list such as `a,c` or `0,2`; empty string is `∅`.
    pub fn parse_list(&self, spec: &str, n: usize) -> Result<PointSet> {
        let mut s = PointSet::EMPTY;
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i = self.resolve_str(part)?;
            if i >= n {
                return Err(Error::PointOutOfRange { point: i, n });
            }
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn name(&self, x: usize) -> String {
        match &self.0 {
            Some(names) if x < names.len() => names[x].clone(),
            _ => x.to_string(),
        }
    }

    pub fn format(&self, s: PointSet) -> String {
        let inner: Vec<String> = s.points().map(|x| self.name(x)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

fn indices(s: PointSet) -> Vec<PointRef> {
    s.points().map(PointRef::Index).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDesc {
    pub n: usize,
    pub opens: Vec<Vec<PointRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl SpaceDesc {
    pub fn from_topology(t: &Topology) -> Self {
        SpaceDesc {
            n: t.n(),
            opens: t.opens().iter().map(|&u| indices(u)).collect(),
            labels: None,
        }
    }

    pub fn to_topology(&self) -> Result<(Topology, Labels)> {
        if self.n > MAX_POINTS {
            return Err(Error::GroundSetTooLarge(self.n));
        }
        if let Some(l) = &self.labels {
            if l.len() != self.n {
                return Err(Error::Malformed(format!(
                    "{} labels for {} points",
                    l.len(),
                    self.n
                )));
            }
        }
        let labels = Labels::new(self.labels.clone());
        let opens = self
            .opens
            .iter()
            .map(|u| labels.set(u, self.n))
            .collect::<Result<Vec<_>>>()?;
        Ok((Topology::from_opens(self.n, opens)?, labels))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDesc {
    pub maximal: Vec<Vec<PointRef>>,
}

impl IdealDesc {
    pub fn from_ideal(i: &Ideal) -> Self {
        IdealDesc {
            maximal: i.maximal().into_iter().map(indices).collect(),
        }
    }

    /// Listed sets are treated as generators, so a non-antichain or a list
    /// that is not union-closed still describes the ideal it generates.
    pub fn to_ideal(&self, n: usize, labels: &Labels) -> Result<Ideal> {
        let gens = self
            .maximal
            .iter()
            .map(|m| labels.set(m, n))
            .collect::<Result<Vec<_>>>()?;
        Ideal::from_generators(n, &gens)
    }
}

/// A topology and an ideal in one document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpaceDesc {
    #[serde(flatten)]
    pub space: SpaceDesc,
    #[serde(flatten)]
    pub ideal: IdealDesc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentDesc {
    #[serde(rename = "A")]
    pub set_a: Vec<PointRef>,
    pub choice: BTreeMap<String, Vec<PointRef>>,
}

impl AssignmentDesc {
    pub fn from_assignment(asg: &NbhdAssignment) -> Self {
        AssignmentDesc {
            set_a: indices(asg.set_a()),
            choice: asg
                .choice()
                .iter()
                .map(|(&x, &u)| (x.to_string(), indices(u)))
                .collect(),
        }
    }

    pub fn to_assignment(&self, t: &Topology, labels: &Labels) -> Result<NbhdAssignment> {
        let n = t.n();
        let a = labels.set(&self.set_a, n)?;
        let mut choice = BTreeMap::new();
        for (k, u) in &self.choice {
            let x = labels.resolve_str(k)?;
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, n });
            }
            choice.insert(x, labels.set(u, n)?);
        }
        NbhdAssignment::new(t, a, choice)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDesc {
    pub members: Vec<Vec<PointRef>>,
}

impl FamilyDesc {
    pub fn from_sets(sets: &[PointSet]) -> Self {
        FamilyDesc {
            members: sets.iter().map(|&s| indices(s)).collect(),
        }
    }

    pub fn to_sets(&self, n: usize, labels: &Labels) -> Result<Vec<PointSet>> {
        self.members.iter().map(|m| labels.set(m, n)).collect()
    }
}

pub fn set_to_json(s: PointSet) -> Vec<usize> {
    s.to_vec()
}

pub fn set_from_json(points: &[usize], n: usize) -> Result<PointSet> {
    if let Some(&p) = points.iter().find(|&&p| p >= n) {
        return Err(Error::PointOutOfRange { point: p, n });
    }
    Ok(PointSet::from_points(points.iter().copied()))
}
