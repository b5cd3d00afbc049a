//! JSON formats and the command-line driver for `grassembed-core`.

pub mod cli;
pub mod json;

pub use cli::run;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "GRASSEMBED_THREADS";

/// Sizes the global thread pool from [`THREADS_ENV`] when it is set to a
/// positive integer. Returns an error message for unusable values.
pub fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got \"{raw}\""))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}
