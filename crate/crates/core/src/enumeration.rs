//! Streams of finite topologies, subsets and ideals.
//!
//! Labeled topologies on `n` points correspond one-to-one with preorders on
//! `n` points. The convention here: `y ≤ x` iff `y ∈ min_nbhd[x]`, so the
//! minimal open set of `x` is its down-set. Enumeration picks `min_nbhd[x]` for
//! `x = 0, 1, ..` in turn and backtracks as soon as the pairwise condition
//! `y ∈ min_nbhd[x] ⇒ min_nbhd[y] ⊆ min_nbhd[x]` fails between two chosen rows.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::Ideal;
use crate::pointset::{all_subsets, PointSet, MAX_POINTS};
use crate::topology::Topology;

/// Largest `n` accepted by [`topologies`]; beyond it the counts stop being
/// useful for exhaustive runs.
pub const MAX_ENUMERATION_POINTS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Every topology on `1..=n_max_exhaustive` points is checked.
    pub n_max_exhaustive: usize,
    /// Additional random topologies on `sample_n` points.
    pub sample_count: usize,
    pub sample_n: usize,
    pub rng_seed: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            n_max_exhaustive: 4,
            sample_count: 0,
            sample_n: 6,
            rng_seed: 0,
        }
    }
}

/// Every labeled topology on `n` points, exactly once.
///
/// # Panics
///
/// If `n > MAX_ENUMERATION_POINTS`.
pub fn topologies(n: usize) -> Topologies {
    assert!(
        n <= MAX_ENUMERATION_POINTS,
        "enumeration supports at most {MAX_ENUMERATION_POINTS} points"
    );
    let candidates = (0..n)
        .map(|x| {
            PointSet::full(n)
                .subsets()
                .filter(|s| s.contains(x))
                .collect()
        })
        .collect();
    Topologies {
        n,
        candidates,
        stack: Vec::with_capacity(n),
        started: false,
        finished: false,
    }
}

/// [`topologies`] split by the minimal neighbourhood of point 0. The chunks
/// are disjoint, cover everything, and can be consumed independently.
pub fn topology_chunks(n: usize) -> Vec<Topologies> {
    let whole = topologies(n);
    if n == 0 {
        return vec![whole];
    }
    whole.candidates[0]
        .iter()
        .map(|&first| {
            let mut part = whole.clone();
            part.candidates[0] = vec![first];
            part
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Topologies {
    n: usize,
    candidates: Vec<Vec<PointSet>>,
    stack: Vec<usize>,
    started: bool,
    finished: bool,
}

impl Topologies {
    fn fits(&self, x: usize, nx: PointSet) -> bool {
        self.stack.iter().enumerate().all(|(y, &i)| {
            let ny = self.candidates[y][i];
            (!nx.contains(y) || ny.is_subset(nx)) && (!ny.contains(x) || nx.is_subset(ny))
        })
    }

    /// Moves the stack to the next complete consistent table.
    fn advance(&mut self) -> bool {
        let mut start = match self.stack.pop() {
            Some(i) if self.started => i + 1,
            _ => 0,
        };
        self.started = true;
        loop {
            let x = self.stack.len();
            let found =
                (start..self.candidates[x].len()).find(|&i| self.fits(x, self.candidates[x][i]));
            match found {
                Some(i) => {
                    self.stack.push(i);
                    if self.stack.len() == self.n {
                        return true;
                    }
                    start = 0;
                }
                None => match self.stack.pop() {
                    Some(i) => start = i + 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for Topologies {
    type Item = Topology;

    fn next(&mut self) -> Option<Topology> {
        if self.finished {
            return None;
        }
        if self.n == 0 {
            self.finished = true;
            return Some(Topology::discrete(0));
        }
        if !self.advance() {
            self.finished = true;
            return None;
        }
        let table = self
            .stack
            .iter()
            .enumerate()
            .map(|(x, &i)| self.candidates[x][i])
            .collect();
        Some(Topology::from_table_unchecked(self.n, table))
    }
}

/// A random topology: a random relation (edge density itself drawn at
/// random), closed reflexively and transitively. Deterministic in `seed`.
pub fn random_topology(n: usize, seed: u64) -> Topology {
    assert!(n <= MAX_POINTS);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.gen_range(0.0..0.6);
    // below[x] = points related below x
    let mut below: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
    for (x, row) in below.iter_mut().enumerate() {
        for y in 0..n {
            if x != y && rng.gen_bool(density) {
                *row = row.with(y);
            }
        }
    }
    // Warshall over bit rows
    for k in 0..n {
        for x in 0..n {
            if below[x].contains(k) {
                below[x] = below[x] | below[k];
            }
        }
    }
    Topology::from_table_unchecked(n, below)
}

/// All `2^n` subsets in canonical order.
pub fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    all_subsets(n).into_iter()
}

/// Every ideal on `n` points. Finite ideals are principal, so these are the
/// powersets of the `2^n` subsets, in canonical order of their tops.
pub fn ideals(n: usize) -> impl Iterator<Item = Ideal> {
    subsets(n).map(move |s| Ideal::principal(n, s).expect("subset of the ground set"))
}

/// Ideal generated by a few random sets.
pub fn random_ideal<R: Rng>(n: usize, rng: &mut R) -> Ideal {
    let k = rng.gen_range(0..=3);
    let full = PointSet::full(n).bits();
    let gens: Vec<PointSet> = (0..k)
        .map(|_| {
            // sparse sets so small ideals are common
            let a = rng.gen::<u32>() & full;
            let b = rng.gen::<u32>() & full;
            PointSet::from_bits(a & b)
        })
        .collect();
    Ideal::from_generators(n, &gens).expect("bits masked to the ground set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        assert_eq!(topologies(0).count(), 1);
        assert_eq!(topologies(1).count(), 1);
        assert_eq!(topologies(2).count(), 4);
        assert_eq!(topologies(3).count(), 29);
    }

    #[test]
    fn chunks_partition_the_stream() {
        for n in 0..=4 {
            let all: HashSet<Topology> = topologies(n).collect();
            let mut from_chunks = HashSet::new();
            let mut total = 0;
            for chunk in topology_chunks(n) {
                for t in chunk {
                    total += 1;
                    from_chunks.insert(t);
                }
            }
            assert_eq!(total, all.len());
            assert_eq!(from_chunks, all);
        }
    }

    #[test]
    fn every_yield_is_a_topology() {
        for n in 0..=3 {
            for t in topologies(n) {
                t.check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn random_topology_is_deterministic() {
        for seed in 0..20 {
            let a = random_topology(6, seed);
            assert_eq!(a, random_topology(6, seed));
            a.check_invariants().unwrap();
        }
    }

    #[test]
    fn subsets_counts() {
        assert_eq!(subsets(0).collect::<Vec<_>>(), vec![PointSet::EMPTY]);
        assert_eq!(subsets(2).count(), 4);
        assert_eq!(subsets(4).count(), 16);
    }

    #[test]
    fn ideals_cover_every_top() {
        let tops: HashSet<PointSet> = ideals(3).map(|i| i.top()).collect();
        assert_eq!(tops.len(), 8);
    }
}
