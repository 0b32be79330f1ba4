//! Worker-pool driver for the all-covers decision: the signing index space
//! is split into contiguous shards, each worker scans its shard in order,
//! and the reducer keeps the smallest failing index. The verdict is the
//! lexicographically first failing signing regardless of scheduling.

use std::sync::atomic::{AtomicU64, Ordering};

use dpcolor_core::cover::{Signing, SigningEnumeration};
use dpcolor_core::graph::{CapacityMap, SimpleGraph};
use dpcolor_core::solver::{find_coloring, is_colorable_all_covers, AllCoversVerdict, SolverError};

pub fn is_colorable_all_covers_parallel(
    g: &SimpleGraph,
    cap: &CapacityMap,
    limit: u32,
    workers: usize,
) -> Result<AllCoversVerdict, SolverError> {
    let en = SigningEnumeration::new(g, limit).map_err(SolverError::from)?;
    if cap.len() != g.n() {
        return Err(SolverError::SizeMismatch {
            expected: g.n(),
            actual: cap.len(),
        });
    }
    let total = en.count();
    let workers = workers.max(1).min(total.max(1) as usize);
    if workers == 1 {
        return is_colorable_all_covers(g, cap, limit);
    }

    let best = AtomicU64::new(u64::MAX);
    let chunk = total.div_ceil(workers as u64);
    std::thread::scope(|scope| {
        for w in 0..workers {
            let best = &best;
            let lo = w as u64 * chunk;
            let hi = total.min(lo + chunk);
            scope.spawn(move || {
                for k in lo..hi {
                    // Anything at or below k already failed elsewhere: this
                    // shard cannot improve the minimum any more.
                    if best.load(Ordering::Relaxed) <= k {
                        return;
                    }
                    let s = Signing::from_index(g.edge_count(), k);
                    if find_coloring(g, cap, &s)
                        .expect("sizes validated upfront")
                        .is_none()
                    {
                        best.fetch_min(k, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });

    Ok(match best.into_inner() {
        u64::MAX => AllCoversVerdict::Colorable,
        k => AllCoversVerdict::Witness(Signing::from_index(g.edge_count(), k)),
    })
}
