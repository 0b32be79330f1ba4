//! Defective DP-coloring of simple graphs under full 2-fold covers.
//!
//! Every vertex of a covered graph owns a *poor* and a *rich* cover vertex;
//! every edge carries one of two matchings between the endpoint pairs,
//! encoded as an edge sign ([`cover::Sign`]). A map picks one cover vertex
//! per graph vertex and is a coloring when each chosen poor vertex keeps its
//! induced degree within the poor capacity and each chosen rich vertex within
//! the rich capacity ([`graph::CapacityMap`]).
//!
//! Modules:
//! - [`graph`]: simple graphs, multigraphs, capacity maps.
//! - [`cover`]: edge signings, map degree accounting, signing enumeration.
//! - [`solver`]: exact backtracking solver and all-covers decisions.
//! - [`potential`]: exact integer potentials and submodularity accounting.
//! - [`construct`]: flag gadgets and the extremal flagged-path family.
//! - [`gadget`]: exhaustive flag oracle and the compositional all-covers
//!   checker that makes criticality verification of the large constructions
//!   feasible.
//! - [`hall`]: bounded-out-degree orientation of auxiliary multigraphs via
//!   bipartite matching.
//!
//! The crate is `no_std` (requires `alloc`). IO, file formats, parallel
//! drivers, and the CLI live in the companion `dpcolor-cli` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod construct;
pub mod cover;
pub mod gadget;
pub mod graph;
pub mod hall;
pub mod potential;
pub mod solver;

/// Default ceiling for exhaustive enumerations: signings are enumerated for
/// at most this many edges, potential minima for at most this many vertices.
pub const DEFAULT_ENUM_LIMIT: u32 = 24;
