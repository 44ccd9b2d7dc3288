//! Data-parallel helpers. With the `parallel` feature the closures run on
//! the rayon pool; without it they run in order on the calling thread.
//! Output order always follows input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// True when the crate was built with the rayon backend.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
