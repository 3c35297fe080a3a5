//! Thin facade over rayon so every sweep has a sequential fallback. With the
//! `parallel` feature disabled the flag is ignored and everything runs on the
//! calling thread.

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, R, F>(items: &[T], par: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if par {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, R, F>(items: &[T], _par: bool, f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// True when the parallel code path is compiled in.
pub fn parallel_compiled() -> bool {
    cfg!(feature = "parallel")
}
