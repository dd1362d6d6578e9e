//! Thin wrappers that run on rayon when the `parallel` feature is on and
//! fall back to plain iteration otherwise. Results never depend on the
//! schedule: `find_first` returns the lowest index, `min` is order-free.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The result for the smallest `x` in `range` where `f` returns `Some`.
pub(crate) fn find_first<T, S, I, F>(range: Range<u64>, init: I, f: F) -> Option<T>
where
    T: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range
            .into_par_iter()
            .map_init(init, |s, x| f(s, x))
            .find_first(Option::is_some)
            .flatten()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut s = init();
        range.into_iter().find_map(|x| f(&mut s, x))
    }
}

pub(crate) fn min<T, S, I, F>(range: Range<u64>, init: I, f: F) -> Option<T>
where
    T: Ord + Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map_init(init, |s, x| f(s, x)).min()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut s = init();
        range.into_iter().map(|x| f(&mut s, x)).min()
    }
}
