//! Thread-pool control. Without the `parallel` feature everything runs on
//! the calling thread.

/// Runs `f` on a dedicated pool of `threads` workers, or inline when the
/// crate was built without `parallel`.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
        {
            return pool.install(f);
        }
    }
    let _ = threads;
    f()
}

/// Whether tallies can fan out across threads in this build.
pub const fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
