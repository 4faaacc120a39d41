//! Multi-threaded quasicrystal enumeration.

use std::env::{self, VarError};
use std::thread;

use framekit_core::cutproject::{
    assemble, check_enumeration, scan_slab, CutProjectScheme, PointSet, SlabScan, Window,
};

use crate::{Error, Result};

pub const THREADS_VAR: &str = "FRAMEKIT_THREADS";

/// Worker count from `FRAMEKIT_THREADS`, else the available parallelism.
pub fn thread_count() -> Result<usize> {
    match env::var(THREADS_VAR) {
        Ok(s) => parse_threads(&s),
        Err(VarError::NotPresent) => Ok(thread::available_parallelism().map_or(1, |n| n.get())),
        Err(VarError::NotUnicode(_)) => Err(Error::Usage(format!(
            "{THREADS_VAR} must be a positive integer"
        ))),
    }
}

pub fn parse_threads(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Error::Usage(format!(
                "{THREADS_VAR} must be a positive integer, got {s:?}"
            ))
        })
}

/// Same result as the serial enumeration: slabs `n₁ = −B..=B` are split into
/// contiguous runs, one per thread, and merged in order.
pub fn generate_quasicrystal(
    scheme: &CutProjectScheme,
    window: &Window,
    radius: u32,
    threads: usize,
) -> Result<PointSet> {
    check_enumeration(scheme, radius)?;
    let r = radius as i64;
    let firsts: Vec<i64> = (-r..=r).collect();
    let chunk = firsts.len().div_ceil(threads.max(1));
    let slabs: Vec<SlabScan> = thread::scope(|s| {
        let handles: Vec<_> = firsts
            .chunks(chunk)
            .map(|run| {
                s.spawn(move || {
                    run.iter()
                        .map(|&f| scan_slab(scheme, window, radius, f))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan thread panicked"))
            .collect()
    });
    Ok(assemble(radius, slabs))
}
