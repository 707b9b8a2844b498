//! Data-parallel helpers. With the `parallel` feature disabled every helper
//! runs sequentially on the calling thread with identical results.

/// Order-preserving map over a slice.
#[cfg(feature = "parallel")]
pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Runs `op` on a pool of `workers` threads. `None` uses the global pool;
/// `Some(1)` and builds without `parallel` run inline.
#[cfg(feature = "parallel")]
pub(crate) fn with_workers<R: Send>(workers: Option<usize>, op: impl FnOnce() -> R + Send) -> R {
    match workers {
        None => op(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(op),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn with_workers<R>(_workers: Option<usize>, op: impl FnOnce() -> R) -> R {
    op()
}

/// Whether `with_workers(workers, ..)` may use more than one thread.
pub(crate) fn is_parallel(workers: Option<usize>) -> bool {
    cfg!(feature = "parallel") && workers != Some(1)
}
