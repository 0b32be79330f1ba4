//! Full 2-fold covers as edge signings, map degree accounting, even/odd
//! classification of degree-2 vertices, and exhaustive signing enumeration.
//!
//! A *parallel* edge sign links poor-to-poor and rich-to-rich across the
//! edge; a *twisted* sign links poor-to-rich and rich-to-poor. A signing of
//! the whole edge list is a canonical encoding of a full 2-fold cover: every
//! edge's matching has exactly two cover edges.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::SimpleGraph;

/// Matching type of one covered edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Parallel,
    Twisted,
}

/// The two cover vertices available at a graph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Poor,
    Rich,
}

impl Color {
    pub fn flip(self) -> Self {
        match self {
            Color::Poor => Color::Rich,
            Color::Rich => Color::Poor,
        }
    }
}

/// Parity of a degree-2 vertex: `Even` when its two incident edge signs are
/// equal, so each of its cover vertices sees two same-type neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Errors from cover operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    /// A signing or map did not match the graph's edge or vertex count.
    LengthMismatch { expected: usize, actual: usize },
    /// Parity is only defined at degree-2 vertices.
    DegreeNotTwo { vertex: usize, degree: usize },
    /// The edge count exceeds the exhaustive-enumeration limit.
    LimitExceeded { edges: usize, limit: u32 },
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoverError::LengthMismatch { expected, actual } => {
                write!(f, "length mismatch: expected {expected}, got {actual}")
            }
            CoverError::DegreeNotTwo { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, parity needs degree 2")
            }
            CoverError::LimitExceeded { edges, limit } => {
                write!(f, "{edges} edges exceed the enumeration limit {limit}")
            }
        }
    }
}

impl core::error::Error for CoverError {}

/// Per-edge sign vector, indexed by the graph's canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signing {
    signs: Vec<Sign>,
}

impl Signing {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    pub fn all_parallel(edge_count: usize) -> Self {
        Self {
            signs: alloc::vec![Sign::Parallel; edge_count],
        }
    }

    /// Signing at position `index` in lexicographic order of the sign vector
    /// (`Parallel` = 0 before `Twisted` = 1, edge 0 most significant).
    pub fn from_index(edge_count: usize, index: u64) -> Self {
        debug_assert!(edge_count < 64);
        let signs = (0..edge_count)
            .map(|e| {
                if index >> (edge_count - 1 - e) & 1 == 1 {
                    Sign::Twisted
                } else {
                    Sign::Parallel
                }
            })
            .collect();
        Self { signs }
    }

    /// Inverse of [`Signing::from_index`].
    pub fn index(&self) -> u64 {
        debug_assert!(self.signs.len() < 64);
        self.signs.iter().fold(0, |acc, &s| {
            acc << 1 | u64::from(s == Sign::Twisted)
        })
    }

    pub fn get(&self, e: usize) -> Sign {
        self.signs[e]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

/// Choice of one cover vertex per graph vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HMap {
    colors: Vec<Color>,
}

impl HMap {
    pub fn new(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    pub fn all_poor(n: usize) -> Self {
        Self {
            colors: alloc::vec![Color::Poor; n],
        }
    }

    /// Map at position `index` with vertex 0 most significant and
    /// `Poor` = 0 before `Rich` = 1.
    pub fn from_index(n: usize, index: u64) -> Self {
        debug_assert!(n < 64);
        let colors = (0..n)
            .map(|v| {
                if index >> (n - 1 - v) & 1 == 1 {
                    Color::Rich
                } else {
                    Color::Poor
                }
            })
            .collect();
        Self { colors }
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Mirror map with every vertex's choice flipped.
    pub fn flipped(&self) -> Self {
        Self {
            colors: self.colors.iter().map(|c| c.flip()).collect(),
        }
    }
}

/// Whether the cover vertices chosen at the two endpoints of an edge with
/// sign `sign` are adjacent in the cover graph.
#[inline]
pub fn linked(sign: Sign, a: Color, b: Color) -> bool {
    match sign {
        Sign::Parallel => a == b,
        Sign::Twisted => a != b,
    }
}

/// Induced degree of every chosen cover vertex: `deg(u)` counts the
/// neighbors `v` of `u` whose chosen vertex is linked to `u`'s under the
/// edge sign.
pub fn phi_degrees(g: &SimpleGraph, s: &Signing, phi: &HMap) -> Result<Vec<usize>, CoverError> {
    check_len(g.edge_count(), s.len())?;
    check_len(g.n(), phi.len())?;
    let mut deg = alloc::vec![0usize; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if linked(s.get(e), phi.get(u), phi.get(v)) {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Ok(deg)
}

/// Even/odd classification of a degree-2 vertex under a signing.
pub fn vertex_parity(g: &SimpleGraph, s: &Signing, y: usize) -> Result<Parity, CoverError> {
    check_len(g.edge_count(), s.len())?;
    let adj = g.adjacency(y);
    if adj.len() != 2 {
        return Err(CoverError::DegreeNotTwo {
            vertex: y,
            degree: adj.len(),
        });
    }
    if s.get(adj[0].1) == s.get(adj[1].1) {
        Ok(Parity::Even)
    } else {
        Ok(Parity::Odd)
    }
}

/// Exhaustive enumeration of all `2^|E|` signings in lexicographic order,
/// shardable by index range for parallel consumption.
#[derive(Debug, Clone)]
pub struct SigningEnumeration {
    edge_count: usize,
}

impl SigningEnumeration {
    pub fn new(g: &SimpleGraph, limit: u32) -> Result<Self, CoverError> {
        if g.edge_count() > limit as usize || g.edge_count() >= 63 {
            return Err(CoverError::LimitExceeded {
                edges: g.edge_count(),
                limit,
            });
        }
        Ok(Self {
            edge_count: g.edge_count(),
        })
    }

    /// Total number of signings, `2^|E|`.
    pub fn count(&self) -> u64 {
        1u64 << self.edge_count
    }

    /// All signings in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Signing> + '_ {
        self.range(0, self.count())
    }

    /// Signings with indices in `lo..hi`, clamped to the valid range.
    pub fn range(&self, lo: u64, hi: u64) -> impl Iterator<Item = Signing> + '_ {
        let hi = hi.min(self.count());
        (lo..hi).map(move |k| Signing::from_index(self.edge_count, k))
    }
}

/// Explicit cover graph on `2n` vertices for debugging and DOT export:
/// vertex `v`'s poor copy is `2v`, its rich copy `2v + 1`. Each vertex
/// contributes its intra-pair edge, each graph edge its two matching edges.
pub fn expand_cover(g: &SimpleGraph, s: &Signing) -> Result<SimpleGraph, CoverError> {
    check_len(g.edge_count(), s.len())?;
    let mut edges = Vec::with_capacity(g.n() + 2 * g.edge_count());
    for v in 0..g.n() {
        edges.push((2 * v, 2 * v + 1));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match s.get(e) {
            Sign::Parallel => {
                edges.push((2 * u, 2 * v));
                edges.push((2 * u + 1, 2 * v + 1));
            }
            Sign::Twisted => {
                edges.push((2 * u, 2 * v + 1));
                edges.push((2 * u + 1, 2 * v));
            }
        }
    }
    Ok(SimpleGraph::new(2 * g.n(), &edges).expect("expanded cover is simple"))
}

fn check_len(expected: usize, actual: usize) -> Result<(), CoverError> {
    if expected != actual {
        return Err(CoverError::LengthMismatch { expected, actual });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn triangle() -> SimpleGraph {
        SimpleGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn linked_truth_table() {
        assert!(linked(Sign::Parallel, Color::Poor, Color::Poor));
        assert!(linked(Sign::Parallel, Color::Rich, Color::Rich));
        assert!(!linked(Sign::Parallel, Color::Poor, Color::Rich));
        assert!(!linked(Sign::Twisted, Color::Poor, Color::Poor));
        assert!(linked(Sign::Twisted, Color::Poor, Color::Rich));
        assert!(linked(Sign::Twisted, Color::Rich, Color::Poor));
    }

    #[test]
    fn degrees_on_triangle() {
        let g = triangle();
        let s = Signing::all_parallel(3);
        let all_poor = HMap::all_poor(3);
        assert_eq!(phi_degrees(&g, &s, &all_poor).unwrap(), vec![2, 2, 2]);

        let mixed = HMap::new(vec![Color::Poor, Color::Rich, Color::Rich]);
        assert_eq!(phi_degrees(&g, &s, &mixed).unwrap(), vec![0, 1, 1]);
    }

    #[test]
    fn degrees_on_k2_twisted() {
        let g = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        let s = Signing::new(vec![Sign::Twisted]);
        let phi = HMap::new(vec![Color::Poor, Color::Rich]);
        assert_eq!(phi_degrees(&g, &s, &phi).unwrap(), vec![1, 1]);
    }

    #[test]
    fn degree_sum_is_even() {
        let g = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        for k in 0..1u64 << 5 {
            let s = Signing::from_index(5, k);
            for m in 0..1u64 << 4 {
                let phi = HMap::from_index(4, m);
                let total: usize = phi_degrees(&g, &s, &phi).unwrap().iter().sum();
                assert_eq!(total % 2, 0);
            }
        }
    }

    #[test]
    fn parity_of_middle_vertex() {
        let path = SimpleGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cases = [
            (Sign::Parallel, Sign::Parallel, Parity::Even),
            (Sign::Parallel, Sign::Twisted, Parity::Odd),
            (Sign::Twisted, Sign::Twisted, Parity::Even),
        ];
        for (a, b, expect) in cases {
            let s = Signing::new(vec![a, b]);
            assert_eq!(vertex_parity(&path, &s, 1).unwrap(), expect);
        }
        assert!(matches!(
            vertex_parity(&path, &Signing::all_parallel(2), 0),
            Err(CoverError::DegreeNotTwo { .. })
        ));
    }

    #[test]
    fn enumeration_counts_and_order() {
        let k2 = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        let en = SigningEnumeration::new(&k2, 24).unwrap();
        assert_eq!(en.count(), 2);

        let g = triangle();
        let en = SigningEnumeration::new(&g, 24).unwrap();
        let all: Vec<Signing> = en.iter().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], Signing::all_parallel(3));
        assert_eq!(
            all[1].signs(),
            &[Sign::Parallel, Sign::Parallel, Sign::Twisted]
        );
        assert_eq!(all[7].signs(), &[Sign::Twisted; 3]);
        for (k, s) in all.iter().enumerate() {
            assert_eq!(s.index(), k as u64);
        }

        let shard: Vec<Signing> = en.range(3, 5).collect();
        assert_eq!(shard, all[3..5].to_vec());
    }

    #[test]
    fn enumeration_limit_enforced() {
        let g = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(
            SigningEnumeration::new(&g, 2),
            Err(CoverError::LimitExceeded { edges: 3, limit: 2 })
        ));
    }

    #[test]
    fn expanded_cover_shape() {
        let g = triangle();
        let s = Signing::new(vec![Sign::Parallel, Sign::Twisted, Sign::Parallel]);
        let h = expand_cover(&g, &s).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.edge_count(), 3 + 6);
        // Twisted edge (1,2): poor(1) ~ rich(2).
        assert!(h.edge_index(2, 5).is_some());
        assert!(h.edge_index(2, 4).is_none());
    }

    #[test]
    fn global_flip_preserves_degrees() {
        let g = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for k in 0..1u64 << 4 {
            let s = Signing::from_index(4, k);
            for m in 0..1u64 << 4 {
                let phi = HMap::from_index(4, m);
                assert_eq!(
                    phi_degrees(&g, &s, &phi).unwrap(),
                    phi_degrees(&g, &s, &phi.flipped()).unwrap()
                );
            }
        }
    }
}
