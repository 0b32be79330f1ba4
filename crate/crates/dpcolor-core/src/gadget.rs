//! Exhaustive flag oracle and the compositional all-covers checker.
//!
//! A flag's effect on its base is summarized by the minimum number of
//! neighbors it forces onto the base's chosen cover vertex, for each base
//! choice; the minimum is taken over all internal extensions that keep the
//! flag's own vertices within uniform `(i, j)` capacities. The oracle
//! establishes by exhaustion that this profile depends only on the flag's
//! syntactic class — parallel `(0, 1)`, twisted `(1, 0)`, anything else
//! `(0, 0)` — and that a flag missing any edge always profiles `(0, 0)`.
//!
//! With that certificate in hand, colorability of a flagged path across all
//! `2^|E|` covers reduces to per-base class counts times the path signings:
//! flags attach only at their base, so their minimal contributions add, and
//! each reduced instance is a path with decremented capacities solved
//! exactly. This turns an infeasible enumeration into a polynomial one.

use alloc::vec::Vec;
use core::fmt;

use crate::construct::{classify_flag_signs, ConstructionSpec, FlagRole};
use crate::cover::{linked, Color, HMap, Sign, Signing};
use crate::graph::CapacityMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetError {
    /// The oracle domain is `i >= 3`, `j >= 2i + 1`.
    DomainViolation { i: i32, j: i32 },
    /// A flag signing had the wrong number of signs.
    WrongSignCount { expected: usize, actual: usize },
    /// A deleted-edge position was out of range.
    BadDeletedEdge { position: usize, edge_count: usize },
    /// The composed checker ran without a certificate for these parameters.
    NotCertified {
        want: (i32, i32),
        have: (i32, i32),
    },
    /// Base capacities sized or parameterized differently from the spec.
    CapacityMismatch { expected: usize, actual: usize },
    /// A signing did not cover the construction's edge index space.
    SigningMismatch { expected: usize, actual: usize },
    /// Flag claims failed exhaustive verification.
    ClaimsFailed {
        trichotomy_failures: usize,
        deleted_failures: usize,
    },
}

impl fmt::Display for GadgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GadgetError::DomainViolation { i, j } => {
                write!(f, "flag oracle needs i >= 3 and j >= 2i + 1, got ({i}, {j})")
            }
            GadgetError::WrongSignCount { expected, actual } => {
                write!(f, "flag signing needs {expected} signs, got {actual}")
            }
            GadgetError::BadDeletedEdge { position, edge_count } => {
                write!(f, "deleted edge {position} out of range for {edge_count} edges")
            }
            GadgetError::NotCertified { want, have } => write!(
                f,
                "flag claims not certified: need ({}, {}), certificate covers ({}, {})",
                want.0, want.1, have.0, have.1
            ),
            GadgetError::CapacityMismatch { expected, actual } => {
                write!(f, "base capacities: expected {expected} entries, got {actual}")
            }
            GadgetError::SigningMismatch { expected, actual } => {
                write!(f, "signing: expected {expected} signs, got {actual}")
            }
            GadgetError::ClaimsFailed {
                trichotomy_failures,
                deleted_failures,
            } => write!(
                f,
                "flag claims failed: {trichotomy_failures} trichotomy and {deleted_failures} deleted-edge counterexamples"
            ),
        }
    }
}

impl core::error::Error for GadgetError {}

/// Minimum achievable contribution of a flag to its base's induced degree,
/// per base color choice. `None` means no internal extension keeps the
/// flag's own vertices within capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlagProfile {
    pub poor: Option<u32>,
    pub rich: Option<u32>,
}

impl FlagProfile {
    pub fn pair(&self) -> Option<(u32, u32)> {
        Some((self.poor?, self.rich?))
    }
}

fn check_domain(i: i32, j: i32) -> Result<(), GadgetError> {
    if i < 3 || j < 2 * i + 1 {
        return Err(GadgetError::DomainViolation { i, j });
    }
    Ok(())
}

fn check_flag_signs(i: i32, signs: &[Sign], deleted: Option<usize>) -> Result<(), GadgetError> {
    let expected = 2 * i as usize + 3;
    if signs.len() != expected {
        return Err(GadgetError::WrongSignCount {
            expected,
            actual: signs.len(),
        });
    }
    if let Some(p) = deleted {
        if p >= expected {
            return Err(GadgetError::BadDeletedEdge {
                position: p,
                edge_count: expected,
            });
        }
    }
    Ok(())
}

fn color_of_bit(bit: u64) -> Color {
    if bit == 1 {
        Color::Rich
    } else {
        Color::Poor
    }
}

/// Exhaustive extension search over one flag: minimum contribution to the
/// base for the given base color, together with the first internal
/// assignment attaining it (`[top, middle_0, ..]`). Signs are in the flag's
/// local edge order; `deleted` removes one local edge position.
fn flag_extension(
    i: i32,
    j: i32,
    signs: &[Sign],
    deleted: Option<usize>,
    base: Color,
) -> Option<(u32, Vec<Color>)> {
    let middles = i as usize + 1;
    let cap = |c: Color| -> i64 {
        match c {
            Color::Poor => i as i64,
            Color::Rich => j as i64,
        }
    };
    let present = |p: usize| deleted != Some(p);
    let mut best: Option<(u32, Vec<Color>)> = None;
    'assignments: for a in 0..1u64 << (middles + 1) {
        let top = color_of_bit(a & 1);
        let mut top_deg = 0i64;
        let mut contribution = 0u32;
        if present(0) && linked(signs[0], base, top) {
            top_deg += 1;
            contribution += 1;
        }
        for t in 0..middles {
            let mid = color_of_bit(a >> (t + 1) & 1);
            let mut mid_deg = 0i64;
            if present(1 + 2 * t) && linked(signs[1 + 2 * t], base, mid) {
                mid_deg += 1;
                contribution += 1;
            }
            if present(2 + 2 * t) && linked(signs[2 + 2 * t], top, mid) {
                mid_deg += 1;
                top_deg += 1;
            }
            if mid_deg > cap(mid) {
                continue 'assignments;
            }
        }
        if top_deg > cap(top) {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _)| contribution < *b) {
            let colors = core::iter::once(top)
                .chain((0..middles).map(|t| color_of_bit(a >> (t + 1) & 1)))
                .collect();
            best = Some((contribution, colors));
            if contribution == 0 {
                break;
            }
        }
    }
    best
}

/// Exact minimum contributions of one flag signing by exhaustive search over
/// all `2^(i+2)` internal extensions.
pub fn flag_profile(
    i: i32,
    j: i32,
    signs: &[Sign],
    deleted: Option<usize>,
) -> Result<FlagProfile, GadgetError> {
    check_domain(i, j)?;
    check_flag_signs(i, signs, deleted)?;
    Ok(FlagProfile {
        poor: flag_extension(i, j, signs, deleted, Color::Poor).map(|(c, _)| c),
        rich: flag_extension(i, j, signs, deleted, Color::Rich).map(|(c, _)| c),
    })
}

/// Expected profile per syntactic class.
pub fn expected_profile(role: FlagRole) -> (u32, u32) {
    match role {
        FlagRole::Parallel => (0, 1),
        FlagRole::Twisted => (1, 0),
        FlagRole::Other => (0, 0),
    }
}

/// One counterexample found by the oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileMismatch {
    /// Lexicographic index of the flag signing.
    pub signing_index: u64,
    /// Deleted local edge position, when the deleted-edge claim is at stake.
    pub deleted: Option<usize>,
    pub role: FlagRole,
    pub expected: (u32, u32),
    pub got: FlagProfile,
}

/// Result of exhausting all intact flag signings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrichotomyReport {
    pub i: i32,
    pub j: i32,
    pub cases: u64,
    pub failures: Vec<ProfileMismatch>,
}

impl TrichotomyReport {
    pub fn conforms(&self) -> bool {
        self.failures.is_empty()
    }
}

fn local_signs(edge_count: usize, index: u64) -> Vec<Sign> {
    Signing::from_index(edge_count, index).signs().to_vec()
}

/// Checks, over all `2^(2i+3)` flag signings, that the profile is exactly
/// `(0, 1)` for syntactically parallel flags, `(1, 0)` for twisted ones,
/// and `(0, 0)` otherwise.
pub fn verify_flag_trichotomy(i: i32, j: i32) -> Result<TrichotomyReport, GadgetError> {
    check_domain(i, j)?;
    let edge_count = 2 * i as usize + 3;
    let cases = 1u64 << edge_count;
    let mut failures = Vec::new();
    for k in 0..cases {
        let signs = local_signs(edge_count, k);
        let role = classify_flag_signs(&signs);
        let expected = expected_profile(role);
        let got = flag_profile(i, j, &signs, None)?;
        if got.pair() != Some(expected) {
            failures.push(ProfileMismatch {
                signing_index: k,
                deleted: None,
                role,
                expected,
                got,
            });
        }
    }
    Ok(TrichotomyReport {
        i,
        j,
        cases,
        failures,
    })
}

/// Result of exhausting all deleted-edge positions and residual signings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletedEdgeReport {
    pub i: i32,
    pub j: i32,
    pub cases: u64,
    pub failures: Vec<ProfileMismatch>,
}

impl DeletedEdgeReport {
    pub fn conforms(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that a flag missing any one edge profiles `(0, 0)` for every
/// residual signing: `(2i+3) * 2^(2i+2)` cases.
pub fn verify_deleted_edge_claim(i: i32, j: i32) -> Result<DeletedEdgeReport, GadgetError> {
    check_domain(i, j)?;
    let edge_count = 2 * i as usize + 3;
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for position in 0..edge_count {
        for k in 0..1u64 << (edge_count - 1) {
            cases += 1;
            let residual = local_signs(edge_count - 1, k);
            let mut signs = Vec::with_capacity(edge_count);
            signs.extend_from_slice(&residual[..position]);
            signs.push(Sign::Parallel); // ignored: the edge is deleted
            signs.extend_from_slice(&residual[position..]);
            let got = flag_profile(i, j, &signs, Some(position))?;
            if got.pair() != Some((0, 0)) {
                failures.push(ProfileMismatch {
                    signing_index: k,
                    deleted: Some(position),
                    role: classify_flag_signs(&signs),
                    expected: (0, 0),
                    got,
                });
            }
        }
    }
    Ok(DeletedEdgeReport {
        i,
        j,
        cases,
        failures,
    })
}

/// Proof token that both flag claims were exhaustively verified for
/// `(i, j)`. The composed checker refuses to run without one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrichotomyCertificate {
    i: i32,
    j: i32,
    intact_cases: u64,
    deleted_cases: u64,
}

impl TrichotomyCertificate {
    pub fn params(&self) -> (i32, i32) {
        (self.i, self.j)
    }

    pub fn intact_cases(&self) -> u64 {
        self.intact_cases
    }

    pub fn deleted_cases(&self) -> u64 {
        self.deleted_cases
    }

    /// Reconstitutes a certificate from an already-validated cache record.
    /// The caller is responsible for having checked the record's integrity;
    /// fresh verification goes through [`certify_flags`].
    pub fn from_verified_parts(i: i32, j: i32, intact_cases: u64, deleted_cases: u64) -> Self {
        Self {
            i,
            j,
            intact_cases,
            deleted_cases,
        }
    }
}

/// Runs both flag oracles and issues a certificate iff every case conforms.
pub fn certify_flags(i: i32, j: i32) -> Result<TrichotomyCertificate, GadgetError> {
    let trichotomy = verify_flag_trichotomy(i, j)?;
    let deleted = verify_deleted_edge_claim(i, j)?;
    if !trichotomy.conforms() || !deleted.conforms() {
        return Err(GadgetError::ClaimsFailed {
            trichotomy_failures: trichotomy.failures.len(),
            deleted_failures: deleted.failures.len(),
        });
    }
    Ok(TrichotomyCertificate {
        i,
        j,
        intact_cases: trichotomy.cases,
        deleted_cases: deleted.cases,
    })
}

/// Weighted path instance left after absorbing every flag into its base's
/// capacities. `links[t]` is the sign of the path edge from vertex `t` to
/// `t + 1`, or `None` when that edge is deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathInstance {
    pub caps: Vec<(i32, i32)>,
    pub links: Vec<Option<Sign>>,
}

fn clamp_cap(c: i64) -> i32 {
    c.max(-1) as i32
}

fn check_composed_inputs(
    spec: &ConstructionSpec,
    base_caps: &CapacityMap,
    cert: &TrichotomyCertificate,
    deleted: Option<usize>,
) -> Result<(), GadgetError> {
    let params = spec.params();
    check_domain(params.0, params.1)?;
    if cert.params() != params {
        return Err(GadgetError::NotCertified {
            want: params,
            have: cert.params(),
        });
    }
    if base_caps.len() != spec.m() || base_caps.params() != params {
        return Err(GadgetError::CapacityMismatch {
            expected: spec.m(),
            actual: base_caps.len(),
        });
    }
    if let Some(e) = deleted {
        if e >= spec.edge_count() {
            return Err(GadgetError::BadDeletedEdge {
                position: e,
                edge_count: spec.edge_count(),
            });
        }
    }
    Ok(())
}

/// Absorbs each flag of a concrete signing into its base: every twisted
/// flag lowers the base's poor capacity by one, every parallel flag the
/// rich capacity, both clamped at `-1`; other flags (and the flag holding a
/// deleted edge) contribute nothing. Path edge signs carry over; a deleted
/// path edge leaves a gap.
pub fn reduce_to_path(
    spec: &ConstructionSpec,
    base_caps: &CapacityMap,
    s: &Signing,
    cert: &TrichotomyCertificate,
    deleted: Option<usize>,
) -> Result<PathInstance, GadgetError> {
    check_composed_inputs(spec, base_caps, cert, deleted)?;
    if s.len() != spec.edge_count() {
        return Err(GadgetError::SigningMismatch {
            expected: spec.edge_count(),
            actual: s.len(),
        });
    }
    let damaged = deleted.and_then(|e| spec.flag_of_edge(e));
    let mut caps = Vec::with_capacity(spec.m());
    for base in 0..spec.m() {
        let mut twisted = 0i64;
        let mut parallel = 0i64;
        for &f in spec.flags_at(base) {
            if damaged == Some(f) {
                continue;
            }
            match crate::construct::classify_flag(&spec.flags()[f], s) {
                FlagRole::Twisted => twisted += 1,
                FlagRole::Parallel => parallel += 1,
                FlagRole::Other => {}
            }
        }
        let (c1, c2) = base_caps.cap(base);
        caps.push((clamp_cap(c1 as i64 - twisted), clamp_cap(c2 as i64 - parallel)));
    }
    let links = spec
        .path_edges()
        .iter()
        .map(|&e| (deleted != Some(e)).then(|| s.get(e)))
        .collect();
    Ok(PathInstance { caps, links })
}

/// Exact feasibility of a reduced path instance. Returns the first valid
/// base-color sequence in poor-before-rich order, or `None`.
pub fn path_feasible(inst: &PathInstance) -> Option<Vec<Color>> {
    let m = inst.caps.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let cap = |t: usize, c: Color| -> i64 {
        match c {
            Color::Poor => inst.caps[t].0 as i64,
            Color::Rich => inst.caps[t].1 as i64,
        }
    };
    // One state per (color, incoming-link) pair; parents reconstruct the
    // first witness in enumeration order.
    const STATES: [(Color, bool); 4] = [
        (Color::Poor, false),
        (Color::Poor, true),
        (Color::Rich, false),
        (Color::Rich, true),
    ];
    let idx = |c: Color, left: bool| -> usize {
        (matches!(c, Color::Rich) as usize) * 2 + left as usize
    };
    let mut reachable = alloc::vec![[false; 4]; m];
    let mut parent = alloc::vec![[usize::MAX; 4]; m];
    for c in [Color::Poor, Color::Rich] {
        if cap(0, c) >= 0 {
            reachable[0][idx(c, false)] = true;
        }
    }
    for t in 0..m - 1 {
        for &(c, left) in STATES.iter() {
            if !reachable[t][idx(c, left)] {
                continue;
            }
            for c_next in [Color::Poor, Color::Rich] {
                let link = inst.links[t].is_some_and(|sg| linked(sg, c, c_next));
                if cap(t, c) < left as i64 + link as i64 {
                    continue;
                }
                if cap(t + 1, c_next) < link as i64 {
                    continue;
                }
                let to = idx(c_next, link);
                if !reachable[t + 1][to] {
                    reachable[t + 1][to] = true;
                    parent[t + 1][to] = idx(c, left);
                }
            }
        }
    }
    let last = STATES
        .iter()
        .position(|&(c, left)| reachable[m - 1][idx(c, left)])?;
    let mut colors = alloc::vec![Color::Poor; m];
    let mut state = last;
    for t in (0..m).rev() {
        colors[t] = STATES[state].0;
        if t > 0 {
            state = parent[t][state];
        }
    }
    Some(colors)
}

/// Witness that a family of covers admits no coloring: per-base counts of
/// twisted and parallel flags plus the path edge signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessClassCounts {
    /// `(twisted, parallel)` per base vertex; remaining flags are other.
    pub counts: Vec<(usize, usize)>,
    /// Path edge signs; `None` marks a deleted path edge.
    pub path_signs: Vec<Option<Sign>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComposedVerdict {
    Colorable,
    Witness(WitnessClassCounts),
}

impl ComposedVerdict {
    pub fn is_colorable(&self) -> bool {
        matches!(self, ComposedVerdict::Colorable)
    }
}

/// Decides colorability across all covers of a flagged path by enumerating,
/// per base vertex, every (twisted, parallel) class-count pair, times every
/// signing of the surviving path edges. Sound because flag behavior depends
/// only on its class and flags meet only at their base, so minimal
/// contributions add; both facts are what the certificate attests.
///
/// The witness, if any, is minimal in (class-count vector, path signing)
/// lexicographic order.
pub fn colorable_all_covers_composed(
    spec: &ConstructionSpec,
    base_caps: &CapacityMap,
    cert: &TrichotomyCertificate,
    deleted: Option<usize>,
) -> Result<ComposedVerdict, GadgetError> {
    check_composed_inputs(spec, base_caps, cert, deleted)?;
    let m = spec.m();
    let damaged = deleted.and_then(|e| spec.flag_of_edge(e));
    let available: Vec<usize> = (0..m)
        .map(|base| {
            let total = spec.flags_at(base).len();
            match damaged {
                Some(f) if spec.flags()[f].base == base => total - 1,
                _ => total,
            }
        })
        .collect();
    let free_links: Vec<usize> = (0..m.saturating_sub(1))
        .filter(|&t| deleted != Some(spec.path_edges()[t]))
        .collect();

    let mut counts: Vec<(usize, usize)> = alloc::vec![(0, 0); m];
    let mut caps: Vec<(i32, i32)> = alloc::vec![(0, 0); m];

    fn descend(
        spec: &ConstructionSpec,
        base_caps: &CapacityMap,
        available: &[usize],
        free_links: &[usize],
        counts: &mut Vec<(usize, usize)>,
        caps: &mut Vec<(i32, i32)>,
        base: usize,
    ) -> Option<WitnessClassCounts> {
        let m = spec.m();
        if base == m {
            for bits in 0..1u64 << free_links.len() {
                let mut links = alloc::vec![None; m - 1];
                for (pos, &t) in free_links.iter().enumerate() {
                    let sign = if bits >> (free_links.len() - 1 - pos) & 1 == 1 {
                        Sign::Twisted
                    } else {
                        Sign::Parallel
                    };
                    links[t] = Some(sign);
                }
                let inst = PathInstance {
                    caps: caps.clone(),
                    links: links.clone(),
                };
                if path_feasible(&inst).is_none() {
                    return Some(WitnessClassCounts {
                        counts: counts.clone(),
                        path_signs: links,
                    });
                }
            }
            return None;
        }
        for twisted in 0..=available[base] {
            for parallel in 0..=available[base] - twisted {
                counts[base] = (twisted, parallel);
                let (c1, c2) = base_caps.cap(base);
                caps[base] = (
                    clamp_cap(c1 as i64 - twisted as i64),
                    clamp_cap(c2 as i64 - parallel as i64),
                );
                if let Some(w) = descend(
                    spec,
                    base_caps,
                    available,
                    free_links,
                    counts,
                    caps,
                    base + 1,
                ) {
                    return Some(w);
                }
            }
        }
        None
    }

    let witness = descend(
        spec,
        base_caps,
        &available,
        &free_links,
        &mut counts,
        &mut caps,
        0,
    );
    Ok(match witness {
        Some(w) => ComposedVerdict::Witness(w),
        None => ComposedVerdict::Colorable,
    })
}

/// Coloring decision for one concrete cover of a flagged path, through the
/// reduction. On success the path solution is extended through every flag
/// by the oracle's minimal extensions, yielding a complete map over the
/// whole construction.
pub fn find_coloring_composed(
    spec: &ConstructionSpec,
    base_caps: &CapacityMap,
    s: &Signing,
    cert: &TrichotomyCertificate,
    deleted: Option<usize>,
) -> Result<Option<HMap>, GadgetError> {
    let inst = reduce_to_path(spec, base_caps, s, cert, deleted)?;
    let Some(path_colors) = path_feasible(&inst) else {
        return Ok(None);
    };
    let (i, j) = spec.params();
    let mut colors = alloc::vec![Color::Poor; spec.vertex_count()];
    colors[..spec.m()].copy_from_slice(&path_colors);
    for flag in spec.flags() {
        let local_deleted = deleted.and_then(|e| flag.local_position(e));
        let signs = flag.local_signs(s);
        let base_color = colors[flag.base];
        let (_, internal) = flag_extension(i, j, &signs, local_deleted, base_color)
            .expect("certified flags always extend");
        colors[flag.top] = internal[0];
        for (t, &u) in flag.middles.iter().enumerate() {
            colors[u] = internal[t + 1];
        }
    }
    Ok(Some(HMap::new(colors)))
}

/// Criticality verdict for a flagged path: the intact graph must fail on
/// some cover while every single-edge deletion is colorable for all covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedCriticalityReport {
    pub witness: Option<WitnessClassCounts>,
    pub edge_verdicts: Vec<(usize, ComposedVerdict)>,
    pub critical: bool,
}

pub fn is_critical_composed(
    spec: &ConstructionSpec,
    cert: &TrichotomyCertificate,
) -> Result<ComposedCriticalityReport, GadgetError> {
    let (i, j) = spec.params();
    let base_caps = CapacityMap::uniform(i, j, spec.m())
        .expect("spec parameters form valid capacities");
    let witness = match colorable_all_covers_composed(spec, &base_caps, cert, None)? {
        ComposedVerdict::Colorable => None,
        ComposedVerdict::Witness(w) => Some(w),
    };
    let mut edge_verdicts = Vec::with_capacity(spec.edge_count());
    let mut all_colorable = true;
    for e in 0..spec.edge_count() {
        let verdict = colorable_all_covers_composed(spec, &base_caps, cert, Some(e))?;
        all_colorable &= verdict.is_colorable();
        edge_verdicts.push((e, verdict));
    }
    Ok(ComposedCriticalityReport {
        critical: witness.is_some() && all_colorable,
        witness,
        edge_verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_bad_cover, build_gm};
    use crate::solver::check_coloring;
    use alloc::vec;

    fn canonical_parallel(i: i32) -> Vec<Sign> {
        vec![Sign::Parallel; 2 * i as usize + 3]
    }

    fn canonical_twisted(i: i32) -> Vec<Sign> {
        let middles = i as usize + 1;
        let mut signs = vec![Sign::Twisted];
        for _ in 0..middles {
            signs.push(Sign::Parallel);
            signs.push(Sign::Twisted);
        }
        signs
    }

    #[test]
    fn canonical_profiles() {
        let p = flag_profile(3, 7, &canonical_parallel(3), None).unwrap();
        assert_eq!(p.pair(), Some((0, 1)));
        let t = flag_profile(3, 7, &canonical_twisted(3), None).unwrap();
        assert_eq!(t.pair(), Some((1, 0)));
    }

    #[test]
    fn deleted_edge_profiles_are_free() {
        for position in [0, 1, 2, 8] {
            let p = flag_profile(3, 7, &canonical_parallel(3), Some(position)).unwrap();
            assert_eq!(p.pair(), Some((0, 0)), "position {position}");
            let t = flag_profile(3, 7, &canonical_twisted(3), Some(position)).unwrap();
            assert_eq!(t.pair(), Some((0, 0)), "position {position}");
        }
    }

    #[test]
    fn domain_and_length_checks() {
        assert!(matches!(
            flag_profile(2, 5, &canonical_parallel(2), None),
            Err(GadgetError::DomainViolation { .. })
        ));
        assert!(matches!(
            flag_profile(3, 7, &[Sign::Parallel; 5], None),
            Err(GadgetError::WrongSignCount { .. })
        ));
        assert!(matches!(
            flag_profile(3, 7, &canonical_parallel(3), Some(9)),
            Err(GadgetError::BadDeletedEdge { .. })
        ));
    }

    #[test]
    fn trichotomy_conforms_for_smallest_parameters() {
        let report = verify_flag_trichotomy(3, 7).unwrap();
        assert_eq!(report.cases, 512);
        assert!(report.conforms(), "failures: {:?}", report.failures);
    }

    #[test]
    fn reduce_g1_bad_cover_to_dead_vertex() {
        let (_, spec, _) = build_gm(3, 7, 1).unwrap();
        let s = build_bad_cover(&spec).unwrap();
        let cert = certify_flags(3, 7).unwrap();
        let base = CapacityMap::uniform(3, 7, 1).unwrap();
        let inst = reduce_to_path(&spec, &base, &s, &cert, None).unwrap();
        assert_eq!(inst.caps, vec![(-1, -1)]);
        assert!(inst.links.is_empty());
        assert!(path_feasible(&inst).is_none());
    }

    #[test]
    fn reduce_g2_bad_cover_to_forced_rich_conflict() {
        let (_, spec, _) = build_gm(3, 7, 2).unwrap();
        let s = build_bad_cover(&spec).unwrap();
        let cert = certify_flags(3, 7).unwrap();
        let base = CapacityMap::uniform(3, 7, 2).unwrap();
        let inst = reduce_to_path(&spec, &base, &s, &cert, None).unwrap();
        assert_eq!(inst.caps, vec![(-1, 7), (-1, 0)]);
        assert_eq!(inst.links, vec![Some(Sign::Parallel)]);
        assert!(path_feasible(&inst).is_none());
    }

    #[test]
    fn composed_witness_for_g1_is_the_bad_class_split() {
        let (_, spec, _) = build_gm(3, 7, 1).unwrap();
        let cert = certify_flags(3, 7).unwrap();
        let base = CapacityMap::uniform(3, 7, 1).unwrap();
        match colorable_all_covers_composed(&spec, &base, &cert, None).unwrap() {
            ComposedVerdict::Witness(w) => {
                assert_eq!(w.counts, vec![(4, 8)]);
                assert!(w.path_signs.is_empty());
            }
            ComposedVerdict::Colorable => panic!("the intact construction must fail"),
        }
    }

    #[test]
    fn composed_deleted_edges_on_g1_are_colorable() {
        let (_, spec, _) = build_gm(3, 7, 1).unwrap();
        let cert = certify_flags(3, 7).unwrap();
        let base = CapacityMap::uniform(3, 7, 1).unwrap();
        for e in [0usize, 5, 17, 107] {
            assert!(colorable_all_covers_composed(&spec, &base, &cert, Some(e))
                .unwrap()
                .is_colorable());
        }
    }

    #[test]
    fn composed_coloring_extends_and_validates() {
        let (g, spec, cap) = build_gm(3, 7, 1).unwrap();
        let cert = certify_flags(3, 7).unwrap();
        let base = CapacityMap::uniform(3, 7, 1).unwrap();

        let bad = build_bad_cover(&spec).unwrap();
        assert!(find_coloring_composed(&spec, &base, &bad, &cert, None)
            .unwrap()
            .is_none());

        let all_parallel = Signing::all_parallel(spec.edge_count());
        let phi = find_coloring_composed(&spec, &base, &all_parallel, &cert, None)
            .unwrap()
            .expect("twelve parallel flags leave the poor choice open");
        assert!(check_coloring(&g, &cap, &all_parallel, &phi).unwrap());
    }

    #[test]
    fn composed_survives_a_deleted_path_edge_on_g3() {
        let (_, spec, _) = build_gm(3, 7, 3).unwrap();
        let cert = certify_flags(3, 7).unwrap();
        let base = CapacityMap::uniform(3, 7, 3).unwrap();
        for &path_edge in spec.path_edges() {
            assert!(
                colorable_all_covers_composed(&spec, &base, &cert, Some(path_edge))
                    .unwrap()
                    .is_colorable(),
                "dropping path edge {path_edge} must leave the graph colorable"
            );
        }
        assert!(
            !colorable_all_covers_composed(&spec, &base, &cert, None)
                .unwrap()
                .is_colorable()
        );
    }

    #[test]
    fn composed_requires_matching_certificate() {
        let (_, spec, _) = build_gm(4, 9, 1).unwrap();
        let cert = certify_flags(3, 7).unwrap();
        let base = CapacityMap::uniform(4, 9, 1).unwrap();
        assert!(matches!(
            colorable_all_covers_composed(&spec, &base, &cert, None),
            Err(GadgetError::NotCertified { .. })
        ));
    }

    #[test]
    fn path_feasibility_cases() {
        // Two rich-forced vertices joined by a parallel edge, one of them
        // with no rich headroom.
        let inst = PathInstance {
            caps: vec![(-1, 7), (-1, 0)],
            links: vec![Some(Sign::Parallel)],
        };
        assert!(path_feasible(&inst).is_none());
        // A twisted link decouples the two rich choices.
        let inst = PathInstance {
            caps: vec![(-1, 7), (-1, 0)],
            links: vec![Some(Sign::Twisted)],
        };
        assert_eq!(
            path_feasible(&inst),
            Some(vec![Color::Rich, Color::Rich])
        );
        // A deleted link always decouples.
        let inst = PathInstance {
            caps: vec![(-1, 0), (-1, 0)],
            links: vec![None],
        };
        assert!(path_feasible(&inst).is_some());
        // Chain across three vertices: both ends rich-forced, middle poor.
        let inst = PathInstance {
            caps: vec![(-1, 0), (0, 0), (-1, 0)],
            links: vec![Some(Sign::Parallel), Some(Sign::Parallel)],
        };
        assert_eq!(
            path_feasible(&inst),
            Some(vec![Color::Rich, Color::Poor, Color::Rich])
        );
        // Tight middle: any neighbor it links to overruns somebody.
        let inst = PathInstance {
            caps: vec![(-1, 0), (0, 0), (0, -1)],
            links: vec![Some(Sign::Parallel), Some(Sign::Parallel)],
        };
        assert!(path_feasible(&inst).is_none());
    }
}
