use rayon::ThreadPoolBuilder;

/// Runs `f` on a pool of `workers` threads; `0` uses the global pool.
pub(crate) fn install<R, F>(workers: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    if workers == 0 {
        return f();
    }
    match ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        // thread spawn failure: fall back to the global pool
        Err(_) => f(),
    }
}
