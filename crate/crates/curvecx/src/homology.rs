//! Integral homology classes and bounding 2-chains.
//!
//! The class of an oriented multicurve is read off from its signed
//! crossings with the handle edges: each identified polygon side is a loop
//! through the vertex representing a symplectic basis element, and the
//! intersection pairing with those loops is exactly the signed crossing
//! count through the corresponding edge. A bounding chain for `m2 - m1` is
//! an integer weight per complementary region of a crossing-free picture
//! of the two multicurves, jumping by one across every strand.

use std::collections::HashMap;

use crate::arrangement::{Arrangement, Piece};
use crate::error::{Error, Result};
use crate::normal::{trace, validate, NormalMulticurve, TracedComponent};
use crate::picture::{Picture, Sys};
use crate::surface::Triangulation;

/// Coordinates in the symplectic basis `(a1, b1, ..., ag, bg)`.
pub fn homology_class(m: &NormalMulticurve) -> Vec<i64> {
    let sums = m.edge_crossing_sums();
    let g = (sums.len() + 3) / 6;
    let mut coords = vec![0i64; 2 * g];
    for k in 0..g {
        coords[2 * k] = -sums[2 * k + 1];
        coords[2 * k + 1] = sums[2 * k];
    }
    coords
}

/// Algebraic intersection number of two classes.
pub fn symplectic_pairing(x: &[i64], y: &[i64]) -> i64 {
    x.chunks(2)
        .zip(y.chunks(2))
        .map(|(a, b)| a[0] * b[1] - a[1] * b[0])
        .sum()
}

/// A crossing-free picture of two disjoint multicurves, with strand
/// ownership. The first system is `m1`, the second `m2`.
pub struct DisjointPicture<'t> {
    pub pic: Picture<'t>,
    pub arr: Arrangement,
}

/// Realizes two disjoint multicurves simultaneously without crossings by
/// tracing the summed weights and assigning the traced components to their
/// owners. Within a parallel stack, each m1 copy is placed directly next
/// to an m2 partner of equal orientation whenever one exists, on the side
/// that puts the in-between annulus on the m2 copy's left; every `c - c`
/// sub-difference then bounds its thin annulus rather than a complement.
pub fn disjoint_picture<'t>(
    tri: &'t Triangulation,
    m1: &NormalMulticurve,
    m2: &NormalMulticurve,
) -> Result<DisjointPicture<'t>> {
    if m1.weights().len() != m2.weights().len() || m1.weights().len() != tri.edge_count() {
        return Err(Error::TriangulationMismatch(m1.weights().len(), m2.weights().len()));
    }
    let union_w: Vec<u64> = m1
        .weights()
        .iter()
        .zip(m2.weights())
        .map(|(a, b)| a + b)
        .collect();
    let nw = validate(tri, &union_w).expect("sum of valid weights is valid");
    let traced = trace(tri, &nw);

    // group traced components and both multicurves' components by the
    // underlying unoriented curve
    let mut groups: HashMap<Vec<(u32, u8)>, Vec<usize>> = HashMap::new();
    for (i, t) in traced.iter().enumerate() {
        groups.entry(t.canonical_steps()).or_default().push(i);
    }
    let ranges = |m: &NormalMulticurve| -> HashMap<Vec<(u32, u8)>, Vec<usize>> {
        let mut r: HashMap<Vec<(u32, u8)>, Vec<usize>> = HashMap::new();
        for (i, c) in m.components().iter().enumerate() {
            r.entry(c.canonical_steps().to_vec()).or_default().push(i);
        }
        r
    };
    let r1 = ranges(m1);
    let r2 = ranges(m2);

    let total1: usize = r1.values().map(Vec::len).sum();
    let total2: usize = r2.values().map(Vec::len).sum();
    if total1 + total2 != traced.len() {
        return Err(not_disjoint(tri, m1, m2));
    }

    // strand assignment: (sys, component index, traced component, flip).
    // Within a parallel stack, every m1 copy with an m2 partner of the
    // same orientation sits directly next to it, on the side that puts
    // the in-between annulus on the m2 copy's left: the pair then bounds
    // exactly that thin annulus. Unmatched copies follow at the top.
    let mut assignment: Vec<Option<(Sys, usize, bool)>> = vec![None; traced.len()];
    for (key, slots) in &groups {
        let empty = Vec::new();
        let own1 = r1.get(key).unwrap_or(&empty);
        let own2 = r2.get(key).unwrap_or(&empty);
        if own1.len() + own2.len() != slots.len() {
            return Err(not_disjoint(tri, m1, m2));
        }
        // stack order: by smallest marked point of each copy
        let mut ordered: Vec<usize> = slots.clone();
        ordered.sort_by_key(|&i| *traced[i].points.iter().min().unwrap());

        let bit_of = |m: &NormalMulticurve, idx: usize| m.components()[idx].orientation() as i64;
        let mut pool1: Vec<usize> = own1.clone(); // ascending orientation
        let mut pool2: Vec<usize> = own2.clone();
        let mut layout: Vec<(Sys, usize)> = Vec::with_capacity(slots.len());
        for bit in [-1i64, 1] {
            loop {
                let p1 = pool1.iter().position(|&i| bit_of(m1, i) == bit);
                let p2 = pool2.iter().position(|&i| bit_of(m2, i) == bit);
                let (Some(p1), Some(p2)) = (p1, p2) else { break };
                let c1 = pool1.remove(p1);
                let c2 = pool2.remove(p2);
                if bit < 0 {
                    // annulus above the m2 copy
                    layout.push((Sys::Second, c2));
                    layout.push((Sys::First, c1));
                } else {
                    layout.push((Sys::First, c1));
                    layout.push((Sys::Second, c2));
                }
            }
        }
        layout.extend(pool1.into_iter().map(|i| (Sys::First, i)));
        layout.extend(pool2.into_iter().map(|i| (Sys::Second, i)));
        debug_assert_eq!(layout.len(), ordered.len());

        for (&slot, &(sys, comp_idx)) in ordered.iter().zip(&layout) {
            let want = match sys {
                Sys::First => m1.components()[comp_idx].orientation(),
                Sys::Second => m2.components()[comp_idx].orientation(),
            };
            let flip = traced[slot].orientation_bit() != want;
            assignment[slot] = Some((sys, comp_idx, flip));
        }
    }

    let mut specs = Vec::with_capacity(traced.len());
    let mut oriented: Vec<TracedComponent> = Vec::with_capacity(traced.len());
    for (i, t) in traced.into_iter().enumerate() {
        let (sys, comp, flip) = assignment[i].expect("every traced component assigned");
        let mut t = t;
        if flip {
            t.reverse();
        }
        let pts: Vec<(usize, usize)> =
            t.points.iter().map(|&(e, p)| (e, p as usize)).collect();
        specs.push((sys, comp, pts, t.faces.clone()));
        oriented.push(t);
    }
    let mut layout: Vec<Vec<(usize, usize)>> = union_w
        .iter()
        .map(|&w| vec![(usize::MAX, usize::MAX); w as usize])
        .collect();
    for (si, t) in oriented.iter().enumerate() {
        for (k, &(e, pos)) in t.points.iter().enumerate() {
            layout[e][pos as usize] = (si, k);
        }
    }
    let pic = Picture::from_layout(tri, specs, layout);
    let arr = Arrangement::build(&pic);
    assert_eq!(
        arr.crossing_count(),
        0,
        "union placement of disjoint multicurves must be crossing-free"
    );
    Ok(DisjointPicture { pic, arr })
}

fn not_disjoint(tri: &Triangulation, m1: &NormalMulticurve, m2: &NormalMulticurve) -> Error {
    let i = crate::intersect::geometric_intersection(tri, m1, m2)
        .unwrap_or(u64::MAX);
    Error::NotDisjoint(i)
}

/// An integer 2-chain with boundary `m2 - m1`, stored as one weight per
/// complementary region of the disjoint picture, normalized to minimum 0.
pub struct BoundingChain<'t> {
    dp: DisjointPicture<'t>,
    region_weights: Vec<i64>,
}

/// Euler characteristic of the sub-surface at one weight level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelChi {
    pub attained: bool,
    pub chi: i64,
    pub cells: usize,
}

impl<'t> BoundingChain<'t> {
    pub fn region_weights(&self) -> &[i64] {
        &self.region_weights
    }

    pub fn weight_range(&self) -> (i64, i64) {
        let min = *self.region_weights.iter().min().unwrap();
        let max = *self.region_weights.iter().max().unwrap();
        (min, max)
    }

    /// A step is simple when the chain takes at most two consecutive values.
    pub fn is_simple(&self) -> bool {
        let (min, max) = self.weight_range();
        max - min <= 1
    }

    /// Recomputed boundary: per strand of the picture, the coefficient
    /// `w(left) - w(right)` together with the strand's owner.
    pub fn boundary_coefficients(&self) -> Vec<(Sys, usize, i64)> {
        let mut out = Vec::new();
        for (s, strand) in self.dp.pic.strands.iter().enumerate() {
            let (l, r) = self.dp.arr.strand_sides(s);
            let coeff = self.region_weights[l as usize] - self.region_weights[r as usize];
            out.push((strand.sys, strand.component, coeff));
        }
        out
    }

    /// Exactness of the boundary: every `m2` strand carries `+1`, every
    /// `m1` strand `-1`.
    pub fn boundary_is_exact(&self) -> bool {
        self.boundary_coefficients()
            .iter()
            .all(|&(sys, _, c)| c == if sys == Sys::Second { 1 } else { -1 })
    }

    /// Connected pieces of the sub-surface formed by the regions at `level`.
    pub fn level_pieces(&self, level: i64) -> Vec<Piece> {
        let region_in: Vec<bool> = self.region_weights.iter().map(|&w| w == level).collect();
        self.dp.arr.level_pieces(&region_in)
    }

    pub fn level_chi(&self, level: i64) -> LevelChi {
        let pieces = self.level_pieces(level);
        if pieces.is_empty() {
            return LevelChi { attained: false, chi: 0, cells: 0 };
        }
        LevelChi {
            attained: true,
            chi: pieces.iter().map(|p| p.chi).sum(),
            cells: pieces.iter().map(|p| p.cells).sum(),
        }
    }

    /// Owner of a strand id appearing in [`Piece::boundary_strands`].
    pub fn strand_owner(&self, strand: usize) -> (Sys, usize) {
        let s = &self.dp.pic.strands[strand];
        (s.sys, s.component)
    }

    pub fn picture(&self) -> &DisjointPicture<'t> {
        &self.dp
    }
}

/// Solves for the chain bounded by `m2 - m1`. The multicurves must be
/// disjoint and homologous.
pub fn bounding_chain<'t>(
    tri: &'t Triangulation,
    m1: &NormalMulticurve,
    m2: &NormalMulticurve,
) -> Result<BoundingChain<'t>> {
    let c1 = homology_class(m1);
    let c2 = homology_class(m2);
    if c1 != c2 {
        return Err(Error::NotNullHomologous { left: c1, right: c2 });
    }
    let dp = disjoint_picture(tri, m1, m2)?;
    let n = dp.arr.region_count;
    // constraints: w(left) - w(right) = +1 for m2 strands, -1 for m1
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for (s, strand) in dp.pic.strands.iter().enumerate() {
        let (l, r) = dp.arr.strand_sides(s);
        let target = if strand.sys == Sys::Second { 1 } else { -1 };
        adj[l as usize].push((r as usize, -target)); // w(r) = w(l) - target
        adj[r as usize].push((l as usize, target));
    }
    let mut w: Vec<Option<i64>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    w[0] = Some(0);
    queue.push_back(0usize);
    while let Some(u) = queue.pop_front() {
        let wu = w[u].unwrap();
        for &(v, delta) in &adj[u] {
            let expected = wu + delta;
            match w[v] {
                None => {
                    w[v] = Some(expected);
                    queue.push_back(v);
                }
                Some(have) => {
                    if have != expected {
                        // inconsistent: the cycle is not null-homologous;
                        // unreachable after the class check above
                        return Err(Error::NotNullHomologous {
                            left: homology_class(m1),
                            right: homology_class(m2),
                        });
                    }
                }
            }
        }
    }
    let mut weights: Vec<i64> = w
        .into_iter()
        .map(|x| x.expect("region graph of a connected surface is connected"))
        .collect();
    let min = *weights.iter().min().unwrap();
    for x in &mut weights {
        *x -= min;
    }
    let chain = BoundingChain { dp, region_weights: weights };
    debug_assert!(chain.boundary_is_exact());
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_multicurve_has_zero_class() {
        let tri = Triangulation::standard(2).unwrap();
        let m = NormalMulticurve::empty(&tri);
        assert_eq!(homology_class(&m), vec![0, 0, 0, 0]);
    }

    #[test]
    fn pairing_is_antisymmetric_on_units() {
        assert_eq!(symplectic_pairing(&[1, 0, 0, 0], &[0, 1, 0, 0]), 1);
        assert_eq!(symplectic_pairing(&[0, 1, 0, 0], &[1, 0, 0, 0]), -1);
        assert_eq!(symplectic_pairing(&[0, 0, 1, 0], &[0, 0, 0, 1]), 1);
    }
}
