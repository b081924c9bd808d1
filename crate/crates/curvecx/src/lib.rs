//! Oriented multicurves on closed surfaces, their intersection numbers, the
//! distance in the complex of homologous multicurves, and surfaces in
//! `S x R` assembled from paths in that complex.
//!
//! The ambient surface is a fixed one-vertex triangulation
//! ([`surface::Triangulation`]); curves are normal coordinate vectors
//! ([`normal::NormalMulticurve`]). Everything downstream is exact integer
//! combinatorics: no tolerances anywhere.
//!
//! Batch operations (adjacency tests, pair surveys, search branches) run
//! data-parallel on rayon when the default `parallel` feature is enabled,
//! and sequentially otherwise; results are identical either way.

pub mod arrangement;
pub mod basis;
pub mod batch;
pub mod builder;
pub mod complex;
pub mod error;
pub mod homology;
pub mod intersect;
pub mod io;
pub mod normal;
pub mod picture;
pub mod sample;
pub mod surface;
mod uf;

pub use error::{Error, Result};
pub use normal::{NormalMulticurve, NormalWeights};
pub use surface::Triangulation;

/// Caps the global worker pool (the `CURVECX_THREADS` contract of the
/// CLI). No-op without the `parallel` feature or after the pool exists.
pub fn configure_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
    }
}
