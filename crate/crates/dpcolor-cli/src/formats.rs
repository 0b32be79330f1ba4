//! On-disk formats: graph/signing/map/bounds JSON, DOT exports, and the CSV
//! tables. All writers produce byte-identical output for identical inputs.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;

use dpcolor_core::construct::ConstructionSpec;
use dpcolor_core::cover::{Color, HMap, Sign, Signing};
use dpcolor_core::graph::{CapacityMap, MultiGraph, SimpleGraph};
use dpcolor_core::hall::Orientation;

/// Graph JSON: `{"n": int, "edges": [[u,v],...]}` with optional per-vertex
/// `"capacities": [[c1,c2],...]` and optional global `"i"`/`"j"` parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capacities: Option<Vec<(i32, i32)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i32>,
}

impl GraphFile {
    pub fn read(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn to_graph(&self) -> Result<SimpleGraph> {
        SimpleGraph::new(self.n, &self.edges).map_err(|e| anyhow::anyhow!("invalid graph: {e}"))
    }

    /// Capacity map from the file plus optional flag overrides. Coloring
    /// verdicts never depend on `(i, j)` beyond range checks, so when the
    /// parameters are absent they are inferred as the smallest valid pair;
    /// potential queries must pass `require_params` and get an error
    /// instead.
    pub fn to_capacities(
        &self,
        file_caps: Option<Vec<(i32, i32)>>,
        flag_i: Option<i32>,
        flag_j: Option<i32>,
        require_params: bool,
    ) -> Result<CapacityMap> {
        let params = match (flag_i.or(self.i), flag_j.or(self.j)) {
            (Some(i), Some(j)) => Some((i, j)),
            (None, None) => None,
            _ => bail!("provide both --i and --j (or neither)"),
        };
        let caps = file_caps.or_else(|| self.capacities.clone());
        match (caps, params) {
            (Some(caps), Some((i, j))) => {
                if caps.len() != self.n {
                    bail!("capacities cover {} vertices, graph has {}", caps.len(), self.n);
                }
                CapacityMap::new(i, j, caps).map_err(|e| anyhow::anyhow!("{e}"))
            }
            (Some(caps), None) => {
                if require_params {
                    bail!("this query needs the global parameters: pass --i and --j");
                }
                if caps.len() != self.n {
                    bail!("capacities cover {} vertices, graph has {}", caps.len(), self.n);
                }
                let i = caps.iter().map(|c| c.0).max().unwrap_or(0).max(0);
                let j = caps.iter().map(|c| c.1).max().unwrap_or(0).max(i);
                CapacityMap::new(i, j, caps).map_err(|e| anyhow::anyhow!("{e}"))
            }
            (None, Some((i, j))) => {
                CapacityMap::uniform(i, j, self.n).map_err(|e| anyhow::anyhow!("{e}"))
            }
            (None, None) => bail!("no capacities in the file: pass --i and --j"),
        }
    }
}

pub fn graph_file(g: &SimpleGraph, cap: Option<&CapacityMap>) -> GraphFile {
    GraphFile {
        n: g.n(),
        edges: g.edges().to_vec(),
        capacities: cap.map(|c| c.caps().to_vec()),
        i: cap.map(|c| c.params().0),
        j: cap.map(|c| c.params().1),
    }
}

/// Multigraph JSON: same shape as graph JSON, duplicate edges allowed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiGraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl MultiGraphFile {
    pub fn read(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn to_multigraph(&self) -> Result<MultiGraph> {
        MultiGraph::new(self.n, &self.edges).map_err(|e| anyhow::anyhow!("invalid multigraph: {e}"))
    }
}

/// Signing files: canonical form is a JSON array of `"P"`/`"T"` aligned with
/// the edge index; a bitstring (`PT..`, `01..`, JSON-quoted or raw) is also
/// accepted.
pub fn parse_signing(raw: &str) -> Result<Signing> {
    let parse_char = |c: char| -> Result<Sign> {
        match c.to_ascii_uppercase() {
            'P' | '0' => Ok(Sign::Parallel),
            'T' | '1' => Ok(Sign::Twisted),
            other => bail!("unknown sign {other:?}, expected P/T or 0/1"),
        }
    };
    let trimmed = raw.trim();
    if let Ok(value) = serde_json::from_str::<serde_json::Value>(trimmed) {
        match value {
            serde_json::Value::Array(items) => {
                let mut signs = Vec::with_capacity(items.len());
                for item in items {
                    let token = item
                        .as_str()
                        .map(str::to_owned)
                        .unwrap_or_else(|| item.to_string());
                    let mut chars = token.chars();
                    let (Some(c), None) = (chars.next(), chars.next()) else {
                        bail!("unknown sign {token:?}, expected P/T or 0/1");
                    };
                    signs.push(parse_char(c)?);
                }
                return Ok(Signing::new(signs));
            }
            serde_json::Value::String(s) => {
                return s.chars().map(parse_char).collect::<Result<Vec<_>>>().map(Signing::new);
            }
            _ => bail!("signing file must be an array of P/T or a bitstring"),
        }
    }
    trimmed
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(parse_char)
        .collect::<Result<Vec<_>>>()
        .map(Signing::new)
}

pub fn read_signing(path: &Path) -> Result<Signing> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_signing(&raw).with_context(|| format!("parsing {}", path.display()))
}

pub fn signing_json(s: &Signing) -> String {
    let tokens: Vec<&str> = s
        .signs()
        .iter()
        .map(|sign| match sign {
            Sign::Parallel => "P",
            Sign::Twisted => "T",
        })
        .collect();
    let mut out = serde_json::to_string(&tokens).expect("strings serialize");
    out.push('\n');
    out
}

/// Map files: JSON array of `"P"` (poor) / `"R"` (rich) aligned with the
/// vertex index.
pub fn parse_hmap(raw: &str) -> Result<HMap> {
    let tokens: Vec<String> = serde_json::from_str(raw.trim())
        .context("map file must be a JSON array of \"P\"/\"R\"")?;
    let mut colors = Vec::with_capacity(tokens.len());
    for token in tokens {
        match token.to_ascii_uppercase().as_str() {
            "P" | "POOR" => colors.push(Color::Poor),
            "R" | "RICH" => colors.push(Color::Rich),
            other => bail!("unknown color {other:?}, expected P or R"),
        }
    }
    Ok(HMap::new(colors))
}

pub fn read_hmap(path: &Path) -> Result<HMap> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_hmap(&raw).with_context(|| format!("parsing {}", path.display()))
}

pub fn hmap_json(phi: &HMap) -> String {
    let tokens: Vec<&str> = phi
        .colors()
        .iter()
        .map(|c| match c {
            Color::Poor => "P",
            Color::Rich => "R",
        })
        .collect();
    let mut out = serde_json::to_string(&tokens).expect("strings serialize");
    out.push('\n');
    out
}

/// Bounds files: JSON array of nonnegative integers.
pub fn read_bounds(path: &Path) -> Result<Vec<u32>> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))
}

/// Flag layout JSON mirrored from the construction spec.
#[derive(Debug, Clone, Serialize)]
pub struct SpecFile {
    pub i: i32,
    pub j: i32,
    pub m: usize,
    pub vertices: usize,
    pub edges: usize,
    pub path_edges: Vec<usize>,
    pub flags: Vec<SpecFlag>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecFlag {
    pub base: usize,
    pub top: usize,
    pub middles: Vec<usize>,
    pub base_top_edge: usize,
    pub base_middle_edges: Vec<usize>,
    pub top_middle_edges: Vec<usize>,
}

pub fn spec_file(spec: &ConstructionSpec) -> SpecFile {
    let (i, j) = spec.params();
    SpecFile {
        i,
        j,
        m: spec.m(),
        vertices: spec.vertex_count(),
        edges: spec.edge_count(),
        path_edges: spec.path_edges().to_vec(),
        flags: spec
            .flags()
            .iter()
            .map(|f| SpecFlag {
                base: f.base,
                top: f.top,
                middles: f.middles.clone(),
                base_top_edge: f.base_top_edge,
                base_middle_edges: f.base_middle_edges.clone(),
                top_middle_edges: f.top_middle_edges.clone(),
            })
            .collect(),
    }
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

/// Plain DOT export of an undirected graph.
pub fn graph_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            let _ = writeln!(out, "  {v};");
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT export of a construction with one cluster per flag.
pub fn construction_dot(g: &SimpleGraph, spec: &ConstructionSpec) -> String {
    let mut out = String::from("graph g {\n");
    for (k, flag) in spec.flags().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_flag_{k} {{");
        let _ = writeln!(out, "    label=\"flag {k}\";");
        let _ = writeln!(out, "    {};", flag.top);
        for &u in &flag.middles {
            let _ = writeln!(out, "    {u};");
        }
        let _ = writeln!(out, "  }}");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT export of the expanded cover graph: vertex `v` contributes `p{v}`
/// and `r{v}`.
pub fn cover_dot(g: &SimpleGraph, s: &Signing) -> Result<String> {
    let h = dpcolor_core::cover::expand_cover(g, s).map_err(|e| anyhow::anyhow!("{e}"))?;
    let name = |x: usize| {
        if x.is_multiple_of(2) {
            format!("p{}", x / 2)
        } else {
            format!("r{}", x / 2)
        }
    };
    let mut out = String::from("graph h {\n");
    for &(a, b) in h.edges() {
        let _ = writeln!(out, "  {} -- {};", name(a), name(b));
    }
    out.push_str("}\n");
    Ok(out)
}

/// DOT export of an orientation as a digraph.
pub fn orientation_dot(q: &MultiGraph, orientation: &Orientation) -> String {
    let mut out = String::from("digraph d {\n");
    for (e, &(a, b)) in q.edges().iter().enumerate() {
        let head = orientation.heads[e];
        let tail = if head == a { b } else { a };
        let _ = writeln!(out, "  {tail} -> {head};");
    }
    out.push_str("}\n");
    out
}

/// Hex bitmask of a vertex set (vertex `v` is bit `v`).
pub fn set_to_hex(set: &[usize]) -> Result<String> {
    let mut mask: u128 = 0;
    for &v in set {
        if v >= 128 {
            bail!("vertex {v} does not fit a 128-bit set mask");
        }
        mask |= 1 << v;
    }
    Ok(format!("{mask:#x}"))
}

/// Parses `FULL`, `EMPTY`, or a hex bitmask into a vertex set.
pub fn parse_set(token: &str, n: usize) -> Result<Vec<usize>> {
    match token.to_ascii_uppercase().as_str() {
        "FULL" => Ok((0..n).collect()),
        "EMPTY" => Ok(Vec::new()),
        _ => {
            let digits = token
                .strip_prefix("0x")
                .or_else(|| token.strip_prefix("0X"))
                .unwrap_or(token);
            let mask = u128::from_str_radix(digits, 16)
                .with_context(|| format!("set {token:?} is not FULL, EMPTY, or a hex mask"))?;
            let set: Vec<usize> = (0..128).filter(|&v| mask >> v & 1 == 1).collect();
            if let Some(&high) = set.last() {
                if high >= n {
                    bail!("set contains vertex {high}, graph has {n} vertices");
                }
            }
            Ok(set)
        }
    }
}
