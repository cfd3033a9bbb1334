//! Worker-count resolution for the parallel harnesses.

use crate::error::{CliError, Result};

/// Environment variable consulted when no `--jobs` flag is given.
pub const JOBS_ENV: &str = "NHOOD_JOBS";

/// `--jobs` wins, then `NHOOD_JOBS`, then the number of available cores.
pub fn resolve_jobs(flag: Option<usize>) -> Result<usize> {
    let jobs = match flag {
        Some(j) => j,
        None => match std::env::var(JOBS_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("{JOBS_ENV} must be a positive integer, got {v:?}")))?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    if jobs == 0 {
        return Err(CliError::Config("the job count must be at least 1".into()));
    }
    Ok(jobs)
}

/// Runs `f` inside a rayon pool with `jobs` workers.
pub fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Internal(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}
