//! IO companion to `dpcolor-core`: JSON/DOT/CSV formats, the verified-claims
//! cache, a worker-pool driver for all-covers enumeration, and the CLI
//! command implementations.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod formats;
pub mod grid;
pub mod parallel;

/// Environment variable overriding the default enumeration limit (edges for
/// signing enumeration, vertices for potential minimization).
pub const ENUM_LIMIT_ENV: &str = "DPCOLOR_ENUM_LIMIT";

/// Enumeration limit from the environment, falling back to the library
/// default; an explicit flag beats both.
pub fn enum_limit(flag: Option<u32>) -> u32 {
    if let Some(limit) = flag {
        return limit;
    }
    std::env::var(ENUM_LIMIT_ENV)
        .ok()
        .and_then(|raw| raw.parse().ok())
        .unwrap_or(dpcolor_core::DEFAULT_ENUM_LIMIT)
}
