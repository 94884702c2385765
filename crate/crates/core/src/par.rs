//! Data-parallel helpers with a sequential fallback.

use crate::error::Result;

/// How loops over rows, columns and cells are executed.
///
/// `Parallel` silently runs sequentially when the `parallel` feature is off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Cap the global worker pool at `threads` (0 keeps the default). Only the
/// first call has any effect.
pub fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

/// Run `f(scratch, k, chunk)` over consecutive `chunk`-sized pieces of `data`.
/// Each worker builds its own scratch with `init`.
pub(crate) fn for_each_chunk<T, S, I, F>(
    exec: Execution,
    data: &mut [T],
    chunk: usize,
    init: I,
    f: F,
) -> Result<()>
where
    T: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize, &mut [T]) -> Result<()> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return data
            .par_chunks_mut(chunk)
            .enumerate()
            .try_for_each_init(init, |s, (k, c)| f(s, k, c));
    }
    let _ = exec;
    let mut s = init();
    for (k, c) in data.chunks_mut(chunk).enumerate() {
        f(&mut s, k, c)?;
    }
    Ok(())
}
