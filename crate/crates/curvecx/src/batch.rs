//! Data-parallel batch helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) batches run on the rayon global
//! pool; without it everything is sequential. Results are identical either
//! way: the work items are pure and the outputs are collected in input
//! order.

use crate::error::Result;
use crate::intersect::geometric_intersection;
use crate::normal::NormalMulticurve;
use crate::surface::Triangulation;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the feature is enabled.
pub fn map<T: Sync, U: Send, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
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

/// Always-sequential variant, kept for benchmarking against [`map`].
pub fn map_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Geometric intersection numbers of index pairs into a vertex set,
/// collected in input order.
pub fn pair_intersections(
    tri: &Triangulation,
    curves: &[NormalMulticurve],
    pairs: &[(usize, usize)],
) -> Result<Vec<u64>> {
    let results = map(pairs, |&(i, j)| geometric_intersection(tri, &curves[i], &curves[j]));
    results.into_iter().collect()
}

/// Sequential twin of [`pair_intersections`].
pub fn pair_intersections_seq(
    tri: &Triangulation,
    curves: &[NormalMulticurve],
    pairs: &[(usize, usize)],
) -> Result<Vec<u64>> {
    let results = map_seq(pairs, |&(i, j)| geometric_intersection(tri, &curves[i], &curves[j]));
    results.into_iter().collect()
}
