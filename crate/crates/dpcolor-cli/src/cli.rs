//! Command-line surface. Exit codes: 0 when the property checked holds (or
//! plain output succeeded), 1 when a checked property fails (invalid
//! coloring, witness found, not critical, claims refuted, no orientation),
//! 2 for usage errors and exceeded limits.

use clap::{Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "dpcolor",
    version,
    about = "Defective DP-coloring toolkit: extremal constructions, all-covers colorability, flag-claim verification, potentials, and bounded orientations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate the extremal construction for (i, j, m): graph, bad-cover
    /// signing, and layout JSON plus DOT exports.
    Gen {
        #[arg(long)]
        i: i32,
        #[arg(long)]
        j: i32,
        #[arg(long)]
        m: usize,
        /// Output directory for graph.json, signing.json, spec.json,
        /// graph.dot, cover.dot.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Validate a map file against a cover; reports the first vertex over
    /// capacity.
    CheckColoring {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        signing: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        /// Per-vertex capacity pairs; defaults to the graph file's, else
        /// uniform (i, j).
        #[arg(long)]
        capacities: Option<PathBuf>,
        #[arg(long)]
        i: Option<i32>,
        #[arg(long)]
        j: Option<i32>,
    },
    /// Search for a coloring under one cover.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        signing: PathBuf,
        #[arg(long)]
        capacities: Option<PathBuf>,
        #[arg(long)]
        i: Option<i32>,
        #[arg(long)]
        j: Option<i32>,
    },
    /// Decide colorability across all covers by exhaustive enumeration.
    CheckColorable {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        capacities: Option<PathBuf>,
        #[arg(long)]
        i: Option<i32>,
        #[arg(long)]
        j: Option<i32>,
        /// Edge-count ceiling for enumeration (default 24, or
        /// DPCOLOR_ENUM_LIMIT).
        #[arg(long)]
        limit: Option<u32>,
        /// Worker threads for the sharded scan (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Verify criticality of the (i, j, m) construction through the
    /// composed checker.
    CheckCritical {
        #[arg(long)]
        i: i32,
        #[arg(long)]
        j: i32,
        #[arg(long)]
        m: usize,
        /// Reuse a verified-claims cache instead of re-running the oracle.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Exhaustively verify the flag claims for (i, j) and write a cache.
    VerifyClaims {
        #[arg(long)]
        i: i32,
        #[arg(long)]
        j: i32,
        /// Cache path (default claims_I_J.json in the working directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact potential queries: one set, or the global minima.
    Potential {
        #[arg(long)]
        graph: PathBuf,
        /// FULL, EMPTY, or a hex bitmask of the vertex set.
        #[arg(long, conflicts_with = "min")]
        set: Option<String>,
        /// Report the minimum over all sets and over nonempty sets.
        #[arg(long)]
        min: bool,
        #[arg(long)]
        i: Option<i32>,
        #[arg(long)]
        j: Option<i32>,
        /// Vertex-count ceiling for minimization (default 24, or
        /// DPCOLOR_ENUM_LIMIT).
        #[arg(long)]
        limit: Option<u32>,
    },
    /// Orient a multigraph under per-vertex out-degree bounds.
    Orient {
        #[arg(long)]
        multigraph: PathBuf,
        /// JSON array of nonnegative bounds, one per vertex.
        #[arg(long)]
        bounds: PathBuf,
    },
    /// CSV of construction counts against the density bound over a grid,
    /// e.g. "i=3..5,j=2i+1..2i+3,m=1..4".
    Report {
        #[arg(long)]
        grid: String,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
