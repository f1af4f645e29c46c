//! Execution-mode plumbing for the data-parallel sweeps.
//!
//! Every large sweep in the crate is written against [`ExecMode`], so the
//! sequential path always exists and the two paths can be benchmarked
//! against each other. With the `parallel` feature disabled,
//! [`ExecMode::Parallel`] silently degrades to the sequential path.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep should be executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    /// Plain single-threaded loop.
    Sequential,
    /// Rayon work-stealing loop (requires the `parallel` feature to have an
    /// effect; otherwise identical to `Sequential`).
    Parallel,
}

impl ExecMode {
    /// Parallel when the feature is compiled in, sequential otherwise.
    pub fn default_mode() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Maps `f` over `items` and collects the results in input order.
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

/// Folds `f` over the integer range `lo..hi`, combining per-chunk
/// accumulators with `merge`. `init` must produce a neutral accumulator.
pub fn range_fold<A, F, I, M>(mode: ExecMode, lo: u64, hi: u64, init: I, f: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (lo..hi).fold(init(), f),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                (lo..hi)
                    .into_par_iter()
                    .fold(&init, |acc, i| f(acc, i))
                    .reduce(&init, merge)
            }
            #[cfg(not(feature = "parallel"))]
            {
                let _ = merge;
                (lo..hi).fold(init(), f)
            }
        }
    }
}

/// Configures the global rayon pool to use `threads` workers. Returns false
/// (and leaves the pool untouched) when the pool was already initialized or
/// the feature is off; sweeps still run, just with the existing pool.
pub fn configure_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        if threads == 0 {
            return false;
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        false
    }
}
