//! Cache of exhaustively verified flag claims. A record is accepted only if
//! its checksum matches the canonical digest of its fields, its case count
//! matches what exhaustion over `(i, j)` must have produced, and it is
//! marked verified; anything else falls back to fresh verification.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

use dpcolor_core::gadget::TrichotomyCertificate;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimsCache {
    pub i: i32,
    pub j: i32,
    pub verified: bool,
    pub case_count: u64,
    pub checksum: String,
}

/// Intact and deleted-edge case counts that exhaustion must produce:
/// `2^(2i+3)` flag signings plus `(2i+3) * 2^(2i+2)` deleted-edge cases.
fn expected_cases(i: i32) -> (u64, u64) {
    let edges = 2 * i as u64 + 3;
    (1 << edges, edges << (edges - 1))
}

fn digest(i: i32, j: i32, case_count: u64, verified: bool) -> String {
    let canonical = format!("dpcolor-flag-claims-v1:i={i};j={j};cases={case_count};verified={verified}");
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    format!("{:x}", hasher.finalize())
}

pub fn cache_record(cert: &TrichotomyCertificate) -> ClaimsCache {
    let (i, j) = cert.params();
    let case_count = cert.intact_cases() + cert.deleted_cases();
    ClaimsCache {
        i,
        j,
        verified: true,
        case_count,
        checksum: digest(i, j, case_count, true),
    }
}

pub fn write_cache(path: &Path, cert: &TrichotomyCertificate) -> Result<()> {
    let mut raw = serde_json::to_string_pretty(&cache_record(cert)).expect("serializable");
    raw.push('\n');
    std::fs::write(path, raw).with_context(|| format!("writing {}", path.display()))
}

/// Loads and validates a cache record into a certificate.
pub fn load_cache(path: &Path, i: i32, j: i32) -> Result<TrichotomyCertificate> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let record: ClaimsCache =
        serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))?;
    if (record.i, record.j) != (i, j) {
        bail!(
            "cache covers ({}, {}), need ({i}, {j})",
            record.i,
            record.j
        );
    }
    if !record.verified {
        bail!("cache records a failed verification");
    }
    let (intact, deleted) = expected_cases(i);
    if record.case_count != intact + deleted {
        bail!(
            "cache case count {} does not match the {} cases exhaustion produces",
            record.case_count,
            intact + deleted
        );
    }
    let expected = digest(record.i, record.j, record.case_count, record.verified);
    if record.checksum != expected {
        bail!("cache checksum mismatch: file corrupted or hand-edited");
    }
    Ok(TrichotomyCertificate::from_verified_parts(i, j, intact, deleted))
}
