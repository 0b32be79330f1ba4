//! Exact integer potentials of vertices and vertex sets, global minima by
//! pruned subset enumeration, and the submodularity identity.
//!
//! All arithmetic is exact: the potential of a vertex is
//! `i - j + 1 + c1 + c2`, the potential of a set subtracts `i + 1` per
//! induced edge.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{CapacityMap, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PotentialError {
    /// The vertex count exceeds the subset-enumeration limit.
    LimitExceeded { n: usize, limit: u32 },
    /// Capacity map sized differently from the graph.
    SizeMismatch { expected: usize, actual: usize },
}

impl fmt::Display for PotentialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PotentialError::LimitExceeded { n, limit } => {
                write!(f, "{n} vertices exceed the subset enumeration limit {limit}")
            }
            PotentialError::SizeMismatch { expected, actual } => {
                write!(f, "size mismatch: expected {expected}, got {actual}")
            }
        }
    }
}

impl core::error::Error for PotentialError {}

/// `i - j + 1 + c1(u) + c2(u)`, exact.
pub fn vertex_potential(cap: &CapacityMap, u: usize) -> i64 {
    let (i, j) = cap.params();
    let (c1, c2) = cap.cap(u);
    i as i64 - j as i64 + 1 + c1 as i64 + c2 as i64
}

/// Sum of vertex potentials over `s` minus `i + 1` per edge induced by `s`.
/// Duplicate entries in `s` are ignored.
pub fn set_potential(g: &SimpleGraph, cap: &CapacityMap, s: &[usize]) -> i64 {
    let (i, _) = cap.params();
    let mut in_set = alloc::vec![false; g.n()];
    let mut total = 0i64;
    for &v in s {
        if !in_set[v] {
            in_set[v] = true;
            total += vertex_potential(cap, v);
        }
    }
    let inner = g
        .edges()
        .iter()
        .filter(|&&(u, v)| in_set[u] && in_set[v])
        .count();
    total - (i as i64 + 1) * inner as i64
}

/// Both sides of the submodularity identity
/// `rho(A) + rho(B) = rho(A u B) + rho(A n B) + (i+1) |E(A \ B, B \ A)|`,
/// which must agree exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubmodularityIdentity {
    pub lhs: i64,
    pub rhs: i64,
    /// Edges with one endpoint in `A \ B` and the other in `B \ A`.
    pub cross_edges: usize,
}

impl SubmodularityIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn submodularity_identity(
    g: &SimpleGraph,
    cap: &CapacityMap,
    a: &[usize],
    b: &[usize],
) -> SubmodularityIdentity {
    let (i, _) = cap.params();
    let mut in_a = alloc::vec![false; g.n()];
    let mut in_b = alloc::vec![false; g.n()];
    for &v in a {
        in_a[v] = true;
    }
    for &v in b {
        in_b[v] = true;
    }
    let union: Vec<usize> = (0..g.n()).filter(|&v| in_a[v] || in_b[v]).collect();
    let inter: Vec<usize> = (0..g.n()).filter(|&v| in_a[v] && in_b[v]).collect();
    let cross_edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            (in_a[u] && !in_b[u] && in_b[v] && !in_a[v])
                || (in_a[v] && !in_b[v] && in_b[u] && !in_a[u])
        })
        .count();
    let lhs = set_potential(g, cap, a) + set_potential(g, cap, b);
    let rhs = set_potential(g, cap, &union)
        + set_potential(g, cap, &inter)
        + (i as i64 + 1) * cross_edges as i64;
    SubmodularityIdentity {
        lhs,
        rhs,
        cross_edges,
    }
}

/// Exact minima of the set potential, over all sets and over nonempty sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialReport {
    /// Minimum over every subset, the empty set included (so at most 0).
    pub min_all: i64,
    /// A set attaining `min_all`.
    pub min_all_witness: Vec<usize>,
    /// Minimum over nonempty subsets, absent only on the empty graph.
    pub min_nonempty: Option<i64>,
    pub min_nonempty_witness: Vec<usize>,
}

/// Exact minimum potential by subset enumeration with an admissible pruning
/// bound crediting `i + 1` per still-includable edge.
pub fn min_potential(
    g: &SimpleGraph,
    cap: &CapacityMap,
    limit: u32,
) -> Result<PotentialReport, PotentialError> {
    if cap.len() != g.n() {
        return Err(PotentialError::SizeMismatch {
            expected: g.n(),
            actual: cap.len(),
        });
    }
    if g.n() > limit as usize || g.n() >= 63 {
        return Err(PotentialError::LimitExceeded {
            n: g.n(),
            limit,
        });
    }
    let n = g.n();
    let (i, _) = cap.params();
    let penalty = i as i64 + 1;
    let rho: Vec<i64> = (0..n).map(|v| vertex_potential(cap, v)).collect();
    // neg_suffix[k] = sum over u >= k of min(0, rho(u)).
    let mut neg_suffix = alloc::vec![0i64; n + 1];
    for k in (0..n).rev() {
        neg_suffix[k] = neg_suffix[k + 1] + rho[k].min(0);
    }

    struct State<'a> {
        g: &'a SimpleGraph,
        rho: &'a [i64],
        neg_suffix: &'a [i64],
        penalty: i64,
        in_set: Vec<bool>,
        excluded: Vec<bool>,
        dead_edge: Vec<bool>,
        chosen: Vec<usize>,
        best_all: (i64, Vec<usize>),
        best_nonempty: Option<(i64, Vec<usize>)>,
    }

    impl State<'_> {
        fn record(&mut self, value: i64) {
            if value < self.best_all.0 {
                self.best_all = (value, self.chosen.clone());
            }
            if !self.chosen.is_empty()
                && self.best_nonempty.as_ref().is_none_or(|(b, _)| value < *b)
            {
                self.best_nonempty = Some((value, self.chosen.clone()));
            }
        }

        fn descend(&mut self, k: usize, current: i64, alive_edges: usize) {
            if k == self.g.n() {
                self.record(current);
                return;
            }
            // Lowest value any completion could reach: include every
            // remaining vertex with negative potential and credit the full
            // penalty for every edge not yet excluded.
            let bound = current + self.neg_suffix[k] - self.penalty * alive_edges as i64;
            let improves_all = bound < self.best_all.0;
            let improves_nonempty = self
                .best_nonempty
                .as_ref()
                .is_none_or(|(b, _)| bound < *b);
            if !improves_all && !improves_nonempty {
                return;
            }

            // Exclude k first: kills its incident still-alive edges.
            self.excluded[k] = true;
            let mut killed = Vec::new();
            for &(_, e) in self.g.adjacency(k) {
                if !self.dead_edge[e] {
                    self.dead_edge[e] = true;
                    killed.push(e);
                }
            }
            self.descend(k + 1, current, alive_edges - killed.len());
            for e in killed {
                self.dead_edge[e] = false;
            }
            self.excluded[k] = false;

            // Include k: pay its potential, subtract per edge to the chosen.
            let to_chosen = self
                .g
                .adjacency(k)
                .iter()
                .filter(|&&(u, _)| self.in_set[u])
                .count();
            self.in_set[k] = true;
            self.chosen.push(k);
            self.descend(
                k + 1,
                current + self.rho[k] - self.penalty * to_chosen as i64,
                alive_edges,
            );
            self.chosen.pop();
            self.in_set[k] = false;
        }
    }

    let mut state = State {
        g,
        rho: &rho,
        neg_suffix: &neg_suffix,
        penalty,
        in_set: alloc::vec![false; n],
        excluded: alloc::vec![false; n],
        dead_edge: alloc::vec![false; g.edge_count()],
        chosen: Vec::new(),
        best_all: (0, Vec::new()),
        best_nonempty: None,
    };
    state.descend(0, 0, g.edge_count());

    Ok(PotentialReport {
        min_all: state.best_all.0,
        min_all_witness: state.best_all.1,
        min_nonempty: state.best_nonempty.as_ref().map(|(v, _)| *v),
        min_nonempty_witness: state
            .best_nonempty
            .map(|(_, w)| w)
            .unwrap_or_default(),
    })
}
