use rayon::prelude::*;

use crate::error::{CliError, Result};

/// Runs `f` over `items` on a pool of `jobs` threads and concatenates the
/// outputs in input order.
pub fn run_tasks<I, T, F>(jobs: usize, items: &[I], f: F) -> Result<Vec<T>>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> franel_core::Result<Vec<T>> + Sync,
{
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let chunks: Vec<Vec<T>> = pool.install(|| items.par_iter().map(&f).collect::<franel_core::Result<_>>())?;
    Ok(chunks.into_iter().flatten().collect())
}
