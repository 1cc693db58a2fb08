//! Row-parallel raster evaluation.
//!
//! Every output sample is a pure function of its coordinates and read-only
//! inputs, so the result does not depend on how rows are scheduled.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Evaluates `f(x, y)` for every pixel on the current rayon pool, in row-major order.
pub(crate) fn map_pixels<T, F>(width: usize, height: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, usize) -> T + Sync,
{
    (0..width * height)
        .into_par_iter()
        .with_min_len(width.max(1))
        .map(|i| f(i % width, i / width))
        .collect()
}

/// Runs `op` on a dedicated pool with `workers` threads.
///
/// `workers == 0` uses rayon's default (one thread per logical CPU). Output of
/// the raster stages is bit-identical for every worker count.
pub fn with_workers<R, F>(workers: usize, op: F) -> Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    Ok(pool.install(op))
}
