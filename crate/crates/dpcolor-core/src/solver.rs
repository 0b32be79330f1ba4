//! Exact decision procedures: coloring existence for one cover, colorability
//! across all covers, criticality, and the defective-partition
//! specialization.

use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::cover::{linked, Color, CoverError, HMap, Signing, SigningEnumeration};
use crate::graph::{CapacityMap, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    /// Signing or capacity map sized differently from the graph.
    SizeMismatch { expected: usize, actual: usize },
    /// The edge count exceeds the exhaustive-enumeration limit.
    LimitExceeded { edges: usize, limit: u32 },
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SolverError::SizeMismatch { expected, actual } => {
                write!(f, "size mismatch: expected {expected}, got {actual}")
            }
            SolverError::LimitExceeded { edges, limit } => {
                write!(f, "{edges} edges exceed the enumeration limit {limit}")
            }
        }
    }
}

impl core::error::Error for SolverError {}

impl From<CoverError> for SolverError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::LengthMismatch { expected, actual } => {
                SolverError::SizeMismatch { expected, actual }
            }
            CoverError::LimitExceeded { edges, limit } => {
                SolverError::LimitExceeded { edges, limit }
            }
            CoverError::DegreeNotTwo { .. } => unreachable!("solver never queries parity"),
        }
    }
}

fn cap_of(cap: &CapacityMap, v: usize, color: Color) -> i32 {
    match color {
        Color::Poor => cap.poor(v),
        Color::Rich => cap.rich(v),
    }
}

fn check_sizes(g: &SimpleGraph, cap: &CapacityMap, s: &Signing) -> Result<(), SolverError> {
    if cap.len() != g.n() {
        return Err(SolverError::SizeMismatch {
            expected: g.n(),
            actual: cap.len(),
        });
    }
    if s.len() != g.edge_count() {
        return Err(SolverError::SizeMismatch {
            expected: g.edge_count(),
            actual: s.len(),
        });
    }
    Ok(())
}

/// First vertex (lowest index) whose chosen cover vertex exceeds its
/// capacity, or `None` when `phi` is a valid coloring.
pub fn coloring_violation(
    g: &SimpleGraph,
    cap: &CapacityMap,
    s: &Signing,
    phi: &HMap,
) -> Result<Option<usize>, SolverError> {
    check_sizes(g, cap, s)?;
    let deg = crate::cover::phi_degrees(g, s, phi)?;
    for (v, &d) in deg.iter().enumerate() {
        if d as i64 > cap_of(cap, v, phi.get(v)) as i64 {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Whether `phi` is a valid coloring: every chosen poor vertex has induced
/// degree at most its poor capacity, every chosen rich vertex at most its
/// rich capacity. A capacity of `-1` makes that choice unusable.
pub fn check_coloring(
    g: &SimpleGraph,
    cap: &CapacityMap,
    s: &Signing,
    phi: &HMap,
) -> Result<bool, SolverError> {
    Ok(coloring_violation(g, cap, s, phi)?.is_none())
}

/// Backtracking search for a valid coloring under one signing.
///
/// Deterministic: vertices are assigned in descending-degree order (ties by
/// index), colors tried poor before rich, and the first complete assignment
/// found is returned.
pub fn find_coloring(
    g: &SimpleGraph,
    cap: &CapacityMap,
    s: &Signing,
) -> Result<Option<HMap>, SolverError> {
    check_sizes(g, cap, s)?;
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));

    let mut assigned: Vec<Option<Color>> = alloc::vec![None; n];
    let mut committed: Vec<i64> = alloc::vec![0; n];

    fn descend(
        g: &SimpleGraph,
        cap: &CapacityMap,
        s: &Signing,
        order: &[usize],
        k: usize,
        assigned: &mut [Option<Color>],
        committed: &mut [i64],
    ) -> bool {
        let Some(&v) = order.get(k) else {
            return true;
        };
        'colors: for color in [Color::Poor, Color::Rich] {
            let budget = cap_of(cap, v, color) as i64;
            if budget < 0 {
                continue;
            }
            // Degree committed by already-assigned neighbors, with headroom
            // checks on their side before anything is mutated.
            let mut own = 0i64;
            for &(u, e) in g.adjacency(v) {
                if let Some(cu) = assigned[u] {
                    if linked(s.get(e), color, cu) {
                        own += 1;
                        if own > budget || committed[u] + 1 > cap_of(cap, u, cu) as i64 {
                            continue 'colors;
                        }
                    }
                }
            }
            assigned[v] = Some(color);
            committed[v] = own;
            for &(u, e) in g.adjacency(v) {
                if let Some(cu) = assigned[u] {
                    if u != v && linked(s.get(e), color, cu) {
                        committed[u] += 1;
                    }
                }
            }
            if descend(g, cap, s, order, k + 1, assigned, committed) {
                return true;
            }
            for &(u, e) in g.adjacency(v) {
                if let Some(cu) = assigned[u] {
                    if u != v && linked(s.get(e), color, cu) {
                        committed[u] -= 1;
                    }
                }
            }
            assigned[v] = None;
            committed[v] = 0;
        }
        false
    }

    if descend(g, cap, s, &order, 0, &mut assigned, &mut committed) {
        let colors = assigned.into_iter().map(|c| c.unwrap()).collect();
        Ok(Some(HMap::new(colors)))
    } else {
        Ok(None)
    }
}

/// Outcome of quantifying over every full cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AllCoversVerdict {
    Colorable,
    /// Lexicographically first signing admitting no coloring.
    Witness(Signing),
}

impl AllCoversVerdict {
    pub fn is_colorable(&self) -> bool {
        matches!(self, AllCoversVerdict::Colorable)
    }
}

/// Decides colorability across all `2^|E|` signings by exhaustive
/// enumeration in lexicographic order.
pub fn is_colorable_all_covers(
    g: &SimpleGraph,
    cap: &CapacityMap,
    limit: u32,
) -> Result<AllCoversVerdict, SolverError> {
    let en = SigningEnumeration::new(g, limit)?;
    for s in en.iter() {
        if find_coloring(g, cap, &s)?.is_none() {
            return Ok(AllCoversVerdict::Witness(s));
        }
    }
    Ok(AllCoversVerdict::Colorable)
}

/// Per-maximal-subgraph verdicts backing a criticality decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    /// Witness cover showing the graph itself is not colorable, if any.
    pub witness: Option<Signing>,
    /// `(edge index, verdict)` for every single-edge deletion.
    pub edge_verdicts: Vec<(usize, AllCoversVerdict)>,
    /// `(vertex, verdict)` for every isolated-vertex deletion. Deleting an
    /// isolated vertex is a maximal proper subgraph no edge deletion covers.
    pub isolated_verdicts: Vec<(usize, AllCoversVerdict)>,
    pub critical: bool,
}

/// Whether the graph is not colorable while every maximal proper subgraph
/// is. Colorability is monotone under subgraphs, so checking single-edge
/// deletions plus isolated-vertex deletions covers all proper subgraphs.
pub fn is_critical(
    g: &SimpleGraph,
    cap: &CapacityMap,
    limit: u32,
) -> Result<CriticalityReport, SolverError> {
    let witness = match is_colorable_all_covers(g, cap, limit)? {
        AllCoversVerdict::Colorable => None,
        AllCoversVerdict::Witness(s) => Some(s),
    };
    let mut edge_verdicts = Vec::with_capacity(g.edge_count());
    let mut all_subgraphs_colorable = true;
    for e in 0..g.edge_count() {
        let sub = g.delete_edge(e).expect("index in range");
        let verdict = is_colorable_all_covers(&sub, cap, limit)?;
        all_subgraphs_colorable &= verdict.is_colorable();
        edge_verdicts.push((e, verdict));
    }
    let mut isolated_verdicts = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
            let (sub, maps) = g.induced_subgraph(&keep).expect("vertices in range");
            let sub_caps: Vec<(i32, i32)> =
                maps.to_super.iter().map(|&old| cap.cap(old)).collect();
            let (ci, cj) = cap.params();
            let sub_cap = CapacityMap::new(ci, cj, sub_caps).expect("restriction stays valid");
            let verdict = is_colorable_all_covers(&sub, &sub_cap, limit)?;
            all_subgraphs_colorable &= verdict.is_colorable();
            isolated_verdicts.push((v, verdict));
        }
    }
    let critical = witness.is_some() && all_subgraphs_colorable;
    Ok(CriticalityReport {
        witness,
        edge_verdicts,
        isolated_verdicts,
        critical,
    })
}

/// Two-part defective partition: every vertex in the first part has at most
/// `i` neighbors inside it, every vertex in the second at most `j`.
///
/// This is coloring under the all-parallel signing with uniform capacities,
/// reinterpreted: the poor part induces max degree `i`, the rich part `j`.
pub fn defective_partition(
    g: &SimpleGraph,
    i: i32,
    j: i32,
) -> Option<(Vec<usize>, Vec<usize>)> {
    if i > j {
        let (rich, poor) = defective_partition(g, j, i)?;
        return Some((poor, rich));
    }
    if i < 0 || j < 0 {
        return (g.n() == 0).then(|| (Vec::new(), Vec::new()));
    }
    let cap = CapacityMap::uniform(i, j, g.n()).expect("0 <= i <= j");
    let s = Signing::all_parallel(g.edge_count());
    let phi = find_coloring(g, &cap, &s).expect("sizes consistent")?;
    let mut poor = Vec::new();
    let mut rich = Vec::new();
    for v in 0..g.n() {
        match phi.get(v) {
            Color::Poor => poor.push(v),
            Color::Rich => rich.push(v),
        }
    }
    Some((poor, rich))
}
