//! Orientation of auxiliary multigraphs under per-vertex out-degree bounds,
//! decided by bipartite matching between edges and expanded vertex slots.
//!
//! An orientation with `outdeg(x) <= w(x)` for every `x` exists iff every
//! vertex set `A` satisfies `|E(Q[A])| <= sum of w over A`; when none
//! exists, a violating set falls out of the matching's alternating
//! reachability structure.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphError, MultiGraph, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallError {
    /// Bounds sized differently from the multigraph's vertex count.
    BoundsMismatch { expected: usize, actual: usize },
    /// An outside vertex does not have degree 2 with both neighbors in the
    /// designated set (strict mode only).
    UnqualifiedVertex { vertex: usize },
    Graph(GraphError),
}

impl fmt::Display for HallError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HallError::BoundsMismatch { expected, actual } => {
                write!(f, "bounds: expected {expected} entries, got {actual}")
            }
            HallError::UnqualifiedVertex { vertex } => write!(
                f,
                "vertex {vertex} is outside the designated set but is not a degree-2 vertex with both neighbors inside it"
            ),
            HallError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for HallError {}

impl From<GraphError> for HallError {
    fn from(e: GraphError) -> Self {
        HallError::Graph(e)
    }
}

/// Auxiliary multigraph built from a host graph: one vertex per member of
/// the designated set, one edge per outside degree-2 vertex joining two
/// members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryBuild {
    pub q: MultiGraph,
    /// Original vertex id of each multigraph vertex.
    pub members: Vec<usize>,
    /// Original degree-2 vertex that each multigraph edge stands for.
    pub edge_sources: Vec<usize>,
    /// Outside vertices that did not qualify (reported, not modeled).
    pub skipped: Vec<usize>,
}

/// Contracts every qualifying outside vertex (degree 2, both neighbors in
/// `x`) into one multigraph edge between its neighbors. With `strict` set,
/// a non-qualifying outside vertex is an error instead of a skip.
pub fn build_auxiliary(
    g: &SimpleGraph,
    x: &[usize],
    strict: bool,
) -> Result<AuxiliaryBuild, HallError> {
    let mut in_x = alloc::vec![false; g.n()];
    let mut members = Vec::new();
    for &v in x {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
        if !in_x[v] {
            in_x[v] = true;
            members.push(v);
        }
    }
    members.sort_unstable();
    let mut index_of = alloc::vec![usize::MAX; g.n()];
    for (idx, &v) in members.iter().enumerate() {
        index_of[v] = idx;
    }
    let mut edges = Vec::new();
    let mut edge_sources = Vec::new();
    let mut skipped = Vec::new();
    for y in 0..g.n() {
        if in_x[y] {
            continue;
        }
        let adj = g.adjacency(y);
        let qualifies = adj.len() == 2 && adj.iter().all(|&(u, _)| in_x[u]);
        if qualifies {
            edges.push((index_of[adj[0].0], index_of[adj[1].0]));
            edge_sources.push(y);
        } else if strict {
            return Err(HallError::UnqualifiedVertex { vertex: y });
        } else {
            skipped.push(y);
        }
    }
    Ok(AuxiliaryBuild {
        q: MultiGraph::new(members.len(), &edges)?,
        members,
        edge_sources,
        skipped,
    })
}

/// A multigraph together with the per-vertex out-degree bounds to orient
/// under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryInstance {
    q: MultiGraph,
    bounds: Vec<u32>,
}

impl AuxiliaryInstance {
    pub fn new(q: MultiGraph, bounds: Vec<u32>) -> Result<Self, HallError> {
        if bounds.len() != q.n() {
            return Err(HallError::BoundsMismatch {
                expected: q.n(),
                actual: bounds.len(),
            });
        }
        Ok(Self { q, bounds })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.q
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }
}

/// Per-edge head assignment with every out-degree within its bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    /// `heads[e]` is the head vertex of edge `e`; the tail is its other
    /// endpoint.
    pub heads: Vec<usize>,
}

impl Orientation {
    /// Out-degree profile under a given multigraph.
    pub fn out_degrees(&self, q: &MultiGraph) -> Vec<usize> {
        let mut out = alloc::vec![0usize; q.n()];
        for (e, &(a, b)) in q.edges().iter().enumerate() {
            let tail = if self.heads[e] == a { b } else { a };
            out[tail] += 1;
        }
        out
    }
}

/// Matching state over the bipartite graph whose left side is the edge set
/// and whose right side has `w(x)` slots per vertex `x`; an edge is adjacent
/// to every slot of both endpoints. A matching saturating the left side
/// yields the orientation: a matched slot's owner becomes the tail.
struct SlotMatcher<'a> {
    q: &'a MultiGraph,
    /// Slot range of vertex `x` is `offsets[x]..offsets[x + 1]`.
    offsets: Vec<usize>,
    slot_to_edge: Vec<Option<usize>>,
    edge_to_slot: Vec<Option<usize>>,
}

impl<'a> SlotMatcher<'a> {
    fn new(q: &'a MultiGraph, bounds: &[u32]) -> Self {
        let mut offsets = Vec::with_capacity(q.n() + 1);
        offsets.push(0);
        for &w in bounds {
            offsets.push(offsets.last().unwrap() + w as usize);
        }
        let total = *offsets.last().unwrap();
        Self {
            q,
            offsets,
            slot_to_edge: alloc::vec![None; total],
            edge_to_slot: alloc::vec![None; q.edge_count()],
        }
    }

    fn slot_owner(&self, slot: usize) -> usize {
        self.offsets.partition_point(|&o| o <= slot) - 1
    }

    fn try_augment(&mut self, e: usize, visited: &mut [bool]) -> bool {
        let (a, b) = self.q.edges()[e];
        for x in [a, b] {
            for slot in self.offsets[x]..self.offsets[x + 1] {
                if visited[slot] {
                    continue;
                }
                visited[slot] = true;
                let free = match self.slot_to_edge[slot] {
                    None => true,
                    Some(other) => self.try_augment(other, visited),
                };
                if free {
                    self.slot_to_edge[slot] = Some(e);
                    self.edge_to_slot[e] = Some(slot);
                    return true;
                }
            }
        }
        false
    }

    /// Runs the augmenting search from every edge; returns the unmatched
    /// edges.
    fn run(&mut self) -> Vec<usize> {
        let total = self.slot_to_edge.len();
        let mut unmatched = Vec::new();
        for e in 0..self.q.edge_count() {
            let mut visited = alloc::vec![false; total];
            if !self.try_augment(e, &mut visited) {
                unmatched.push(e);
            }
        }
        unmatched
    }
}

/// Orientation with `outdeg(x) <= w(x)` for all `x`, if one exists.
pub fn orient_with_bounds(inst: &AuxiliaryInstance) -> Option<Orientation> {
    let mut matcher = SlotMatcher::new(&inst.q, &inst.bounds);
    if !matcher.run().is_empty() {
        return None;
    }
    let heads = (0..inst.q.edge_count())
        .map(|e| {
            let slot = matcher.edge_to_slot[e].expect("saturated matching");
            let tail = matcher.slot_owner(slot);
            let (a, b) = inst.q.edges()[e];
            if tail == a {
                b
            } else {
                a
            }
        })
        .collect();
    let orientation = Orientation { heads };
    debug_assert!(orientation
        .out_degrees(&inst.q)
        .iter()
        .zip(&inst.bounds)
        .all(|(&d, &w)| d <= w as usize));
    Some(orientation)
}

/// A set `A` with more induced edges than total bound, present exactly when
/// no bounded orientation exists. Extracted from alternating reachability
/// out of the unmatched edges.
pub fn hall_violator(inst: &AuxiliaryInstance) -> Option<Vec<usize>> {
    let mut matcher = SlotMatcher::new(&inst.q, &inst.bounds);
    let unmatched = matcher.run();
    if unmatched.is_empty() {
        return None;
    }
    let mut edge_reached = alloc::vec![false; inst.q.edge_count()];
    let mut slot_reached = alloc::vec![false; matcher.slot_to_edge.len()];
    let mut queue: Vec<usize> = unmatched;
    for &e in &queue {
        edge_reached[e] = true;
    }
    while let Some(e) = queue.pop() {
        let (a, b) = inst.q.edges()[e];
        for x in [a, b] {
            let (lo, hi) = (matcher.offsets[x], matcher.offsets[x + 1]);
            for (offset, reached) in slot_reached[lo..hi].iter_mut().enumerate() {
                if *reached {
                    continue;
                }
                *reached = true;
                if let Some(next) = matcher.slot_to_edge[lo + offset] {
                    if !edge_reached[next] {
                        edge_reached[next] = true;
                        queue.push(next);
                    }
                }
            }
        }
    }
    let mut in_a = alloc::vec![false; inst.q.n()];
    for (e, &(a, b)) in inst.q.edges().iter().enumerate() {
        if edge_reached[e] {
            in_a[a] = true;
            in_a[b] = true;
        }
    }
    let violator: Vec<usize> = (0..inst.q.n()).filter(|&x| in_a[x]).collect();
    // The returned set genuinely violates the counting inequality.
    let bound: u64 = violator.iter().map(|&x| inst.bounds[x] as u64).sum();
    let induced = inst
        .q
        .edges()
        .iter()
        .filter(|&&(a, b)| in_a[a] && in_a[b])
        .count() as u64;
    assert!(bound < induced, "extracted set must violate the bound");
    Some(violator)
}
