//! Thin fan-out helpers: data-parallel with rayon under the `parallel`
//! feature (the default), plain sequential loops otherwise. All callers pass
//! pure closures over value types, so the two paths are observationally
//! identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the items, collecting results in input order.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// True iff `f` holds for every item.
pub fn all<T, F>(items: Vec<T>, f: F) -> bool
where
    T: Send,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().all(|t| f(&t))
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().all(|t| f(&t))
    }
}
