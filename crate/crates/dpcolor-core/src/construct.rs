//! Flag gadgets and the extremal flagged-path family, with their bad covers
//! and the exact density bound the family attains.
//!
//! A flag at a base vertex `v` has a top vertex `x` adjacent to `v` and to
//! `i + 1` middle vertices, each of which is also adjacent to `v`: `i + 2`
//! vertices and `2i + 3` edges per flag. The extremal graph on `m` path
//! vertices carries `i + 1` flags at the first vertex, `i` at each interior
//! vertex, and `i + j + 1` at the last (for `m = 1`, a single vertex with
//! `i + j + 2` flags).

use alloc::vec::Vec;
use core::fmt;

use crate::cover::{Sign, Signing};
use crate::graph::{CapacityMap, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    /// Parameters must satisfy `i >= 1`, `j >= i`, `m >= 1`.
    BadParams { i: i32, j: i32, m: usize },
    /// The spec's flag counts are not those of the extremal family.
    NotExtremalCounts,
    /// A built graph failed a structural self-check.
    Structure(&'static str),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructError::BadParams { i, j, m } => {
                write!(f, "parameters out of domain: i={i}, j={j}, m={m} (need 1 <= i <= j, m >= 1)")
            }
            ConstructError::NotExtremalCounts => {
                write!(f, "flag counts do not match the extremal family")
            }
            ConstructError::Structure(msg) => write!(f, "structural check failed: {msg}"),
        }
    }
}

impl core::error::Error for ConstructError {}

/// Vertex and edge indices of one flag inside a built graph.
///
/// The flag's local edge order is `(base, top)`, then for each middle `u`:
/// `(base, u)`, `(top, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagLayout {
    pub base: usize,
    pub top: usize,
    pub middles: Vec<usize>,
    pub base_top_edge: usize,
    pub base_middle_edges: Vec<usize>,
    pub top_middle_edges: Vec<usize>,
}

impl FlagLayout {
    /// Number of edges in the flag, `2i + 3`.
    pub fn edge_count(&self) -> usize {
        1 + 2 * self.middles.len()
    }

    /// All edge indices of the flag, in local order.
    pub fn edge_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.edge_count());
        out.push(self.base_top_edge);
        for t in 0..self.middles.len() {
            out.push(self.base_middle_edges[t]);
            out.push(self.top_middle_edges[t]);
        }
        out
    }

    /// The flag's signs extracted from a whole-graph signing, in local order.
    pub fn local_signs(&self, s: &Signing) -> Vec<Sign> {
        self.edge_indices().iter().map(|&e| s.get(e)).collect()
    }

    /// Local position of a graph edge inside this flag, if it belongs to it.
    pub fn local_position(&self, edge: usize) -> Option<usize> {
        self.edge_indices().iter().position(|&e| e == edge)
    }
}

/// Behavior class of a flag under a signing. A parallel flag pins the base's
/// rich choice to one forced neighbor, a twisted flag the poor choice;
/// anything else forces nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagRole {
    Parallel,
    Twisted,
    Other,
}

/// Classification from the flag's local sign vector: parallel iff the
/// base-top edge is parallel and every middle's two incident signs agree,
/// twisted iff the base-top edge is twisted and every middle's signs differ.
pub fn classify_flag_signs(signs: &[Sign]) -> FlagRole {
    debug_assert!(signs.len() >= 3 && signs.len() % 2 == 1);
    let middles = (signs.len() - 1) / 2;
    let mut all_even = true;
    let mut all_odd = true;
    for t in 0..middles {
        if signs[1 + 2 * t] == signs[2 + 2 * t] {
            all_odd = false;
        } else {
            all_even = false;
        }
    }
    match signs[0] {
        Sign::Parallel if all_even => FlagRole::Parallel,
        Sign::Twisted if all_odd => FlagRole::Twisted,
        _ => FlagRole::Other,
    }
}

/// Classification of one flag of a construction under a whole-graph signing.
pub fn classify_flag(flag: &FlagLayout, s: &Signing) -> FlagRole {
    classify_flag_signs(&flag.local_signs(s))
}

/// Layout of a path decorated with flags: parameters, per-flag indices, and
/// the path's own edge indices. Built only by the constructors here, so the
/// structural invariants (flags pairwise disjoint, attached only at their
/// base) hold by construction and are re-checked when built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    i: i32,
    j: i32,
    m: usize,
    vertex_count: usize,
    edge_count: usize,
    path_edges: Vec<usize>,
    flags: Vec<FlagLayout>,
    flags_at: Vec<Vec<usize>>,
}

impl ConstructionSpec {
    pub fn params(&self) -> (i32, i32) {
        (self.i, self.j)
    }

    /// Number of path (base) vertices.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Edge indices of the path edges, in path order.
    pub fn path_edges(&self) -> &[usize] {
        &self.path_edges
    }

    pub fn flags(&self) -> &[FlagLayout] {
        &self.flags
    }

    /// Indices into [`ConstructionSpec::flags`] of the flags based at each
    /// path vertex.
    pub fn flags_at(&self, base: usize) -> &[usize] {
        &self.flags_at[base]
    }

    /// Flag containing the given edge, if it is not a path edge.
    pub fn flag_of_edge(&self, edge: usize) -> Option<usize> {
        if edge < self.path_edges.len() {
            return None;
        }
        // Flags occupy consecutive blocks of 2i + 3 edges after the path.
        let per_flag = 2 * self.i as usize + 3;
        let f = (edge - self.path_edges.len()) / per_flag;
        (f < self.flags.len()).then_some(f)
    }

    /// Whether the parameters lie in the regime where the family is known
    /// to be extremal.
    pub fn in_theorem_domain(&self) -> bool {
        self.i >= 3 && self.j > 2 * self.i
    }

    /// Re-checks the structural invariants against the built graph: every
    /// flag's vertices are internal to the flag except the base, tops have
    /// degree `i + 2`, middles degree 2, and every edge is either a path
    /// edge or belongs to exactly one flag.
    pub fn validate(&self, g: &SimpleGraph) -> Result<(), ConstructError> {
        if g.n() != self.vertex_count || g.edge_count() != self.edge_count {
            return Err(ConstructError::Structure("graph size mismatch"));
        }
        let mut edge_seen = alloc::vec![false; g.edge_count()];
        for &e in &self.path_edges {
            edge_seen[e] = true;
        }
        let mut vertex_owner = alloc::vec![usize::MAX; g.n()];
        for (f, flag) in self.flags.iter().enumerate() {
            if flag.base >= self.m {
                return Err(ConstructError::Structure("flag based off the path"));
            }
            for &v in core::iter::once(&flag.top).chain(flag.middles.iter()) {
                if vertex_owner[v] != usize::MAX {
                    return Err(ConstructError::Structure("flags share a vertex"));
                }
                vertex_owner[v] = f;
            }
            if g.degree(flag.top) != self.i as usize + 2 {
                return Err(ConstructError::Structure("top degree is not i + 2"));
            }
            for &u in &flag.middles {
                if g.degree(u) != 2 {
                    return Err(ConstructError::Structure("middle degree is not 2"));
                }
            }
            for &e in flag.edge_indices().iter() {
                if edge_seen[e] {
                    return Err(ConstructError::Structure("edge claimed twice"));
                }
                edge_seen[e] = true;
                let (a, b) = g.endpoints(e).map_err(|_| ConstructError::Structure("bad edge index"))?;
                let inside = |v: usize| v == flag.base || vertex_owner[v] == f;
                if !inside(a) || !inside(b) {
                    return Err(ConstructError::Structure("flag edge leaves the flag"));
                }
            }
        }
        if edge_seen.iter().any(|&seen| !seen) {
            return Err(ConstructError::Structure("unclaimed edge"));
        }
        Ok(())
    }
}

/// Flag counts of the extremal family: `i + j + 2` on a single vertex for
/// `m = 1`; otherwise `i + 1` at the first vertex, `i` at interior vertices,
/// `i + j + 1` at the last.
pub fn extremal_flag_counts(i: i32, j: i32, m: usize) -> Vec<usize> {
    let (i, j) = (i as usize, j as usize);
    if m == 1 {
        return alloc::vec![i + j + 2];
    }
    let mut counts = alloc::vec![i; m];
    counts[0] = i + 1;
    counts[m - 1] = i + j + 1;
    counts
}

/// Builds a path on `flags_per_vertex.len()` vertices with the prescribed
/// number of flags at each, numbering path vertices first and then each
/// flag as top followed by its middles.
pub fn build_flagged_path(
    i: i32,
    j: i32,
    flags_per_vertex: &[usize],
) -> Result<(SimpleGraph, ConstructionSpec), ConstructError> {
    let m = flags_per_vertex.len();
    if i < 1 || j < i || m < 1 {
        return Err(ConstructError::BadParams { i, j, m });
    }
    let middles_per_flag = i as usize + 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut path_edges = Vec::with_capacity(m - 1);
    for t in 0..m - 1 {
        path_edges.push(edges.len());
        edges.push((t, t + 1));
    }
    let mut flags = Vec::new();
    let mut flags_at = alloc::vec![Vec::new(); m];
    let mut next_vertex = m;
    for (base, &count) in flags_per_vertex.iter().enumerate() {
        for _ in 0..count {
            let top = next_vertex;
            let middles: Vec<usize> =
                (next_vertex + 1..next_vertex + 1 + middles_per_flag).collect();
            next_vertex += 1 + middles_per_flag;
            let base_top_edge = edges.len();
            edges.push((base, top));
            let mut base_middle_edges = Vec::with_capacity(middles_per_flag);
            let mut top_middle_edges = Vec::with_capacity(middles_per_flag);
            for &u in &middles {
                base_middle_edges.push(edges.len());
                edges.push((base, u));
                top_middle_edges.push(edges.len());
                edges.push((top, u));
            }
            flags_at[base].push(flags.len());
            flags.push(FlagLayout {
                base,
                top,
                middles,
                base_top_edge,
                base_middle_edges,
                top_middle_edges,
            });
        }
    }
    let g = SimpleGraph::new(next_vertex, &edges)
        .map_err(|_| ConstructError::Structure("builder produced a non-simple graph"))?;
    let spec = ConstructionSpec {
        i,
        j,
        m,
        vertex_count: g.n(),
        edge_count: g.edge_count(),
        path_edges,
        flags,
        flags_at,
    };
    spec.validate(&g)?;
    Ok((g, spec))
}

/// Builds the extremal graph for `(i, j, m)` with uniform capacities.
///
/// The counts satisfy `|V| = (i+2)(mi+j+2) + m` and
/// `|E| = (2i+3)(mi+j+2) + m - 1`, hence the exact density identity
/// `(i+1)|E| = (2i+1)|V| + j - i + 1`.
pub fn build_gm(
    i: i32,
    j: i32,
    m: usize,
) -> Result<(SimpleGraph, ConstructionSpec, CapacityMap), ConstructError> {
    let (g, spec) = build_flagged_path(i, j, &extremal_flag_counts(i, j, m))?;
    let block = m * i as usize + j as usize + 2;
    if g.n() != (i as usize + 2) * block + m
        || g.edge_count() != (2 * i as usize + 3) * block + m - 1
    {
        return Err(ConstructError::Structure("extremal counts violated"));
    }
    let cap = CapacityMap::uniform(i, j, g.n())
        .map_err(|_| ConstructError::BadParams { i, j, m })?;
    Ok((g, spec, cap))
}

/// The cover under which the extremal graph admits no coloring. For `m = 1`
/// the first `i + 1` flags are twisted and the rest parallel; for `m >= 2`
/// the first `j` flags at the last vertex are parallel and every other flag
/// twisted, path edges twisted except the last, which is parallel.
///
/// Realizations are canonical: a parallel flag signs every edge parallel; a
/// twisted flag signs base-top and top-middle edges twisted, base-middle
/// edges parallel.
pub fn build_bad_cover(spec: &ConstructionSpec) -> Result<Signing, ConstructError> {
    let (i, j) = spec.params();
    let m = spec.m();
    let expected = extremal_flag_counts(i, j, m);
    for (base, &count) in expected.iter().enumerate() {
        if spec.flags_at(base).len() != count {
            return Err(ConstructError::NotExtremalCounts);
        }
    }
    let mut signs = alloc::vec![Sign::Parallel; spec.edge_count()];
    for (t, &e) in spec.path_edges().iter().enumerate() {
        signs[e] = if t + 2 == m { Sign::Parallel } else { Sign::Twisted };
    }
    let mut twisted_flags: Vec<usize> = Vec::new();
    if m == 1 {
        twisted_flags.extend(&spec.flags_at(0)[..i as usize + 1]);
    } else {
        for base in 0..m - 1 {
            twisted_flags.extend(spec.flags_at(base));
        }
        twisted_flags.extend(&spec.flags_at(m - 1)[j as usize..]);
    }
    for &f in &twisted_flags {
        let flag = &spec.flags()[f];
        signs[flag.base_top_edge] = Sign::Twisted;
        for &e in &flag.top_middle_edges {
            signs[e] = Sign::Twisted;
        }
        // Base-middle edges stay parallel: each middle sees differing signs.
    }
    let signing = Signing::new(signs);
    debug_assert!(spec.flags().iter().enumerate().all(|(f, flag)| {
        let expected = if twisted_flags.contains(&f) {
            FlagRole::Twisted
        } else {
            FlagRole::Parallel
        };
        classify_flag(flag, &signing) == expected
    }));
    Ok(signing)
}

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Self {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.num)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// The edge-count lower bound `((2i+1) n + j - i + 1) / (i + 1)` as an exact
/// rational, with a flag telling whether `(i, j, n)` lies in the regime the
/// bound is proved for (`i >= 3`, `j >= 2i + 1`, `n >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityBound {
    pub value: Rational,
    pub in_domain: bool,
}

pub fn density_bound(i: i32, j: i32, n: u64) -> DensityBound {
    let value = Rational::new(
        (2 * i as i64 + 1) * n as i64 + j as i64 - i as i64 + 1,
        i as i64 + 1,
    );
    DensityBound {
        value,
        in_domain: i >= 3 && j > 2 * i && n >= 1,
    }
}

/// One edge per symmetry class: every path edge, plus for each base vertex
/// with flags the first flag's base-top, base-middle, and top-middle edges
/// (flags at a base are interchangeable, as are middles within a flag).
pub fn edge_orbit_representatives(spec: &ConstructionSpec) -> Vec<usize> {
    let mut reps: Vec<usize> = spec.path_edges().to_vec();
    for base in 0..spec.m() {
        if let Some(&f) = spec.flags_at(base).first() {
            let flag = &spec.flags()[f];
            reps.push(flag.base_top_edge);
            reps.push(flag.base_middle_edges[0]);
            reps.push(flag.top_middle_edges[0]);
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn extremal_counts_match_formulas() {
        for (i, j, m, n, e) in [
            (3, 7, 1, 61, 108),
            (3, 7, 2, 77, 136),
            (4, 9, 1, 91, 165),
        ] {
            let (g, spec, cap) = build_gm(i, j, m).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), e);
            assert_eq!(spec.vertex_count(), n);
            assert_eq!(cap.len(), n);
            assert_eq!(cap.params(), (i, j));
        }
    }

    #[test]
    fn density_identity_holds_exactly() {
        for i in 3..=5 {
            for j in [2 * i + 1, 2 * i + 2, 2 * i + 3] {
                for m in 1..=4 {
                    let (g, _, _) = build_gm(i, j, m).unwrap();
                    let lhs = (i as i64 + 1) * g.edge_count() as i64;
                    let rhs = (2 * i as i64 + 1) * g.n() as i64 + (j - i) as i64 + 1;
                    assert_eq!(lhs, rhs, "identity failed at ({i},{j},{m})");
                }
            }
        }
    }

    #[test]
    fn degrees_of_construction_vertices() {
        let (i, j, m) = (3, 7, 3);
        let (g, spec, _) = build_gm(i, j, m).unwrap();
        for flag in spec.flags() {
            assert_eq!(g.degree(flag.top), i as usize + 2);
            for &u in &flag.middles {
                assert_eq!(g.degree(u), 2);
            }
        }
        // Each flag contributes i + 2 incident edges to its base.
        assert_eq!(g.degree(0), (i as usize + 2) * (i as usize + 1) + 1);
        assert_eq!(g.degree(1), (i as usize + 2) * i as usize + 2);
        assert_eq!(
            g.degree(m - 1),
            (i as usize + 2) * (i as usize + j as usize + 1) + 1
        );
    }

    #[test]
    fn flag_with_base_induces_expected_subgraph() {
        let (g, spec, _) = build_gm(3, 7, 1).unwrap();
        let flag = &spec.flags()[0];
        let mut s = vec![flag.base, flag.top];
        s.extend(&flag.middles);
        let (sub, _) = g.induced_subgraph(&s).unwrap();
        assert_eq!(sub.n(), 6);
        assert_eq!(sub.edge_count(), 9);
    }

    #[test]
    fn gm_minus_edge_counts() {
        let (g, _, _) = build_gm(3, 7, 1).unwrap();
        let sub = g.delete_edge(42).unwrap();
        assert_eq!(sub.n(), 61);
        assert_eq!(sub.edge_count(), 107);
    }

    #[test]
    fn gm_is_out_of_reach_for_direct_enumeration() {
        use crate::cover::{CoverError, SigningEnumeration};
        let (g, _, _) = build_gm(3, 7, 1).unwrap();
        assert!(matches!(
            SigningEnumeration::new(&g, crate::DEFAULT_ENUM_LIMIT),
            Err(CoverError::LimitExceeded { edges: 108, .. })
        ));
    }

    #[test]
    fn bad_cover_flag_classes() {
        let (_, spec, _) = build_gm(3, 7, 1).unwrap();
        let s = build_bad_cover(&spec).unwrap();
        let roles: Vec<FlagRole> = spec.flags().iter().map(|f| classify_flag(f, &s)).collect();
        let twisted = roles.iter().filter(|r| **r == FlagRole::Twisted).count();
        let parallel = roles.iter().filter(|r| **r == FlagRole::Parallel).count();
        assert_eq!((twisted, parallel), (4, 8));
        assert!(!roles.contains(&FlagRole::Other));
    }

    #[test]
    fn bad_cover_path_signs() {
        let (_, spec, _) = build_gm(3, 7, 3).unwrap();
        let s = build_bad_cover(&spec).unwrap();
        let path: Vec<Sign> = spec.path_edges().iter().map(|&e| s.get(e)).collect();
        assert_eq!(path, vec![Sign::Twisted, Sign::Parallel]);
        // At the last vertex: j parallel plus i + 1 twisted flags.
        let last = spec.m() - 1;
        let roles: Vec<FlagRole> = spec
            .flags_at(last)
            .iter()
            .map(|&f| classify_flag(&spec.flags()[f], &s))
            .collect();
        assert_eq!(roles.iter().filter(|r| **r == FlagRole::Parallel).count(), 7);
        assert_eq!(roles.iter().filter(|r| **r == FlagRole::Twisted).count(), 4);
        // Interior and first vertices carry only twisted flags.
        for base in 0..last {
            for &f in spec.flags_at(base) {
                assert_eq!(classify_flag(&spec.flags()[f], &s), FlagRole::Twisted);
            }
        }
    }

    #[test]
    fn density_bound_examples() {
        assert_eq!(density_bound(3, 7, 61).value.to_string(), "108");
        assert_eq!(density_bound(3, 7, 77).value.to_string(), "136");
        assert_eq!(density_bound(3, 7, 62).value.to_string(), "439/4");
        assert!(density_bound(3, 7, 61).in_domain);
        assert!(!density_bound(2, 5, 10).in_domain);
        assert!(!density_bound(3, 6, 10).in_domain);
    }

    #[test]
    fn bad_params_rejected() {
        assert!(build_gm(0, 7, 1).is_err());
        assert!(build_gm(3, 2, 1).is_err());
        assert!(build_flagged_path(3, 7, &[]).is_err());
    }

    #[test]
    fn orbit_representatives_cover_every_class() {
        let (_, spec, _) = build_gm(3, 7, 2).unwrap();
        let reps = edge_orbit_representatives(&spec);
        assert_eq!(reps.len(), 1 + 3 + 3);
        // Class sizes: per base, flags x {1 base-top, i+1 base-middle,
        // i+1 top-middle} edges, plus one class per path edge.
        let class_total: usize = (0..spec.m())
            .map(|b| spec.flags_at(b).len() * (2 * 3 + 3))
            .sum::<usize>()
            + spec.path_edges().len();
        assert_eq!(class_total, spec.edge_count());
    }

    #[test]
    fn flag_of_edge_resolves_blocks() {
        let (_, spec, _) = build_gm(3, 7, 2).unwrap();
        assert_eq!(spec.flag_of_edge(spec.path_edges()[0]), None);
        for (f, flag) in spec.flags().iter().enumerate() {
            for e in flag.edge_indices() {
                assert_eq!(spec.flag_of_edge(e), Some(f));
            }
        }
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(Rational::new(432, 4).to_string(), "108");
        assert_eq!(Rational::new(-6, 4).to_string(), "-3/2");
        assert_eq!(Rational::new(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::new(0, 5).to_string(), "0");
    }
}
