//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! global pool; without it they fall back to plain iterators with identical
//! results (every search returns the first hit in index order).

/// Name of the active execution mode, used to label benchmarks and reports.
pub const MODE: &str = if cfg!(feature = "parallel") { "rayon" } else { "sequential" };

macro_rules! if_rayon {
    ($rayon_value: expr, $else_value: expr) => {{
        #[cfg(feature = "parallel")]
        {
            ($rayon_value)
        }
        #[cfg(not(feature = "parallel"))]
        {
            ($else_value)
        }
    }};
}

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n` and collects in index order.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if_rayon!((0..n).into_par_iter().map(f).collect(), (0..n).map(f).collect())
}

/// Maps `f` over a slice and collects in order.
pub fn map_slice<A, T, F>(items: &[A], f: F) -> Vec<T>
where
    A: Sync,
    T: Send,
    F: Fn(&A) -> T + Sync + Send,
{
    if_rayon!(items.par_iter().map(f).collect(), items.iter().map(f).collect())
}

/// First index-ordered `Some` produced by `f` over `0..n`.
pub fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    if_rayon!((0..n).into_par_iter().find_map_first(f), (0..n).find_map(f))
}
