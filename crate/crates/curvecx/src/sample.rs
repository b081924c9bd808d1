//! Seeded random generation of valid multicurves (rejection sampling).
//!
//! The generator is `rand_chacha::ChaCha8Rng`; all sampling in the crate
//! and the CLI is reproducible from a `u64` seed.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::normal::NormalMulticurve;
use crate::surface::Triangulation;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws a non-empty multicurve with total weight at most `max_total`,
/// with random orientations. Returns `None` if rejection sampling fails
/// repeatedly (does not happen for sane bounds).
pub fn random_multicurve(
    tri: &Triangulation,
    max_total: u64,
    rng: &mut ChaCha8Rng,
) -> Option<NormalMulticurve> {
    let e = tri.edge_count();
    'outer: for _ in 0..10_000 {
        let mut w = vec![0u64; e];
        let mut total = 0u64;
        for x in w.iter_mut() {
            // biased towards small entries
            let v = match rng.random_range(0..8u32) {
                0..=3 => 0,
                4..=5 => 1,
                6 => 2,
                _ => rng.random_range(0..=4u64),
            };
            *x = v;
            total += v;
            if total > max_total {
                continue 'outer;
            }
        }
        if total == 0 || crate::normal::validate(tri, &w).is_err() {
            continue;
        }
        let comps = crate::normal::trace(tri, &crate::normal::validate(tri, &w).unwrap());
        if comps.is_empty() {
            continue;
        }
        let signs: Vec<i64> = (0..comps.len())
            .map(|_| if rng.random_bool(0.5) { 1 } else { -1 })
            .collect();
        match NormalMulticurve::canonicalize(tri, &w, &signs) {
            Ok(mc) => return Some(mc),
            Err(_) => continue, // vertex-link component
        }
    }
    None
}
