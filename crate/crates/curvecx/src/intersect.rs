//! Geometric and algebraic intersection numbers.
//!
//! Geometric: superimpose, then smooth bigon faces until none remain; the
//! bigon criterion certifies the residual crossing count is minimal.
//! Algebraic: the signed crossing sum of any transverse superimposition
//! (a homotopy invariant, so no reduction is needed).

use crate::arrangement::{reduce_to_minimal_position, Arrangement};
use crate::error::Result;
use crate::normal::NormalMulticurve;
use crate::picture::Picture;
use crate::surface::Triangulation;

/// The reduced, bigon-free picture of two multicurves.
pub struct MinimalPosition<'t> {
    pub pic: Picture<'t>,
    pub arr: Arrangement,
    pub smoothings: usize,
}

impl MinimalPosition<'_> {
    pub fn crossings(&self) -> u64 {
        self.arr.crossing_count() as u64
    }

    /// Re-runs bigon detection on the reduced picture.
    pub fn has_bigon(&self) -> bool {
        self.arr.find_bigon(&self.pic).is_some()
    }
}

pub fn minimal_position<'t>(
    tri: &'t Triangulation,
    m1: &NormalMulticurve,
    m2: &NormalMulticurve,
) -> Result<MinimalPosition<'t>> {
    let mut pic = Picture::superimpose(tri, m1, m2)?;
    let (arr, smoothings) = reduce_to_minimal_position(&mut pic);
    Ok(MinimalPosition { pic, arr, smoothings })
}

/// Minimum crossing count over representatives of the two isotopy classes.
pub fn geometric_intersection(
    tri: &Triangulation,
    m1: &NormalMulticurve,
    m2: &NormalMulticurve,
) -> Result<u64> {
    Ok(minimal_position(tri, m1, m2)?.crossings())
}

/// Signed crossing count: each crossing contributes the sign of the
/// tangent frame (first, second); equals the pairing of the classes.
pub fn algebraic_intersection(
    tri: &Triangulation,
    m1: &NormalMulticurve,
    m2: &NormalMulticurve,
) -> Result<i64> {
    let pic = Picture::superimpose(tri, m1, m2)?;
    let arr = Arrangement::build(&pic);
    Ok(arr.crossings.iter().map(|c| c.sign as i64).sum())
}
