//! Normal coordinates for oriented multicurves.
//!
//! A curve system transverse to the triangulation is encoded by one
//! non-negative weight per edge, subject to the matching conditions: in
//! every face the three weights have even sum and satisfy the triangle
//! inequalities, so that the corner-arc counts are non-negative integers.
//! Tracing follows strands through corner arcs and recovers the components;
//! components isotopic to the vertex link bound discs and are rejected from
//! multicurves.

use std::fmt;

use crate::error::{Error, Result};
use crate::surface::{EdgeId, FaceId, Triangulation};

/// A validated normal coordinate vector on a fixed triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalWeights {
    weights: Vec<u64>,
}

impl NormalWeights {
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }
}

/// Checks length, parity and corner positivity.
pub fn validate(tri: &Triangulation, weights: &[u64]) -> Result<NormalWeights> {
    if weights.len() != tri.edge_count() {
        return Err(Error::WeightLength { expected: tri.edge_count(), got: weights.len() });
    }
    for f in 0..tri.face_count() {
        corner_counts(tri, weights, f)?;
    }
    Ok(NormalWeights { weights: weights.to_vec() })
}

/// Corner-arc counts of face `f`: entry `i` is the number of arcs cutting
/// off corner `i` (the corner between slots `(i+2)%3` and `i`).
pub fn corner_counts(tri: &Triangulation, weights: &[u64], f: FaceId) -> Result<[u64; 3]> {
    let face = tri.face(f);
    let w = [weights[face[0].edge], weights[face[1].edge], weights[face[2].edge]];
    if (w[0] + w[1] + w[2]) % 2 != 0 {
        return Err(Error::InvalidNormalCoordinates {
            face: f,
            reason: format!("odd weight sum {:?}", w),
        });
    }
    let mut x = [0u64; 3];
    for i in 0..3 {
        let touch_a = w[(i + 2) % 3];
        let touch_b = w[i];
        let opposite = w[(i + 1) % 3];
        if touch_a + touch_b < opposite {
            return Err(Error::InvalidNormalCoordinates {
                face: f,
                reason: format!("negative corner count at corner {i}, weights {:?}", w),
            });
        }
        x[i] = (touch_a + touch_b - opposite) / 2;
    }
    Ok(x)
}

/// One traced component with a traversal direction.
///
/// `points[k]` is the k-th edge crossing `(edge, position)`; between
/// `points[k]` and `points[k+1]` the strand runs through `faces[k]`
/// cutting off `corners[k]`. `signs[k]` is the sign of the crossing at
/// `points[k]`: `+1` when the strand enters the face traversing the edge
/// forward (it lies on the left of the edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedComponent {
    pub points: Vec<(EdgeId, u64)>,
    pub faces: Vec<FaceId>,
    pub corners: Vec<u8>,
    pub signs: Vec<i8>,
}

impl TracedComponent {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The `(face, corner)` step sequence in traversal order.
    pub fn steps(&self) -> Vec<(u32, u8)> {
        self.faces
            .iter()
            .zip(&self.corners)
            .map(|(&f, &c)| (f as u32, c))
            .collect()
    }

    /// Rotation- and direction-independent key of the underlying curve.
    pub fn canonical_steps(&self) -> Vec<(u32, u8)> {
        let fwd = self.steps();
        let mut rev = fwd.clone();
        rev.reverse();
        let a = min_rotation(&fwd);
        let b = min_rotation(&rev);
        if a <= b {
            a
        } else {
            b
        }
    }

    /// Reverses the traversal direction in place.
    pub fn reverse(&mut self) {
        let n = self.points.len();
        if n == 0 {
            return;
        }
        // new visiting order: p0, p_{n-1}, ..., p1
        let mut points = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        points.push(self.points[0]);
        signs.push(-self.signs[0]);
        for k in (1..n).rev() {
            points.push(self.points[k]);
            signs.push(-self.signs[k]);
        }
        // step between new k and k+1 is the old step n-1-k
        let mut faces = Vec::with_capacity(n);
        let mut corners = Vec::with_capacity(n);
        for k in 0..n {
            faces.push(self.faces[n - 1 - k]);
            corners.push(self.corners[n - 1 - k]);
        }
        self.points = points;
        self.signs = signs;
        self.faces = faces;
        self.corners = corners;
    }

    /// Sign of the crossing at the lexicographically smallest marked point,
    /// under the current traversal direction. This is the stored orientation
    /// of a component in a multicurve.
    pub fn orientation_bit(&self) -> i8 {
        let k = self
            .points
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(k, _)| k)
            .expect("component has at least one point");
        self.signs[k]
    }
}

fn min_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = 0usize;
    for start in 1..n {
        for k in 0..n {
            let a = &seq[(start + k) % n];
            let b = &seq[(best + k) % n];
            match a.cmp(b) {
                std::cmp::Ordering::Less => {
                    best = start;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => continue,
            }
        }
    }
    (0..n).map(|k| seq[(best + k) % n].clone()).collect()
}

/// Traces all components of a validated weight vector. Deterministic:
/// components are reported in order of their smallest marked point, each
/// traversed starting into the forward side of that point's edge.
pub fn trace(tri: &Triangulation, nw: &NormalWeights) -> Vec<TracedComponent> {
    let weights = nw.weights();
    // global point index: offsets[e] + position
    let mut offsets = Vec::with_capacity(weights.len());
    let mut total = 0usize;
    for &w in weights {
        offsets.push(total);
        total += w as usize;
    }
    if total == 0 {
        return Vec::new();
    }
    let point_edge = {
        let mut v = vec![0usize; total];
        for (e, &off) in offsets.iter().enumerate() {
            for p in 0..weights[e] as usize {
                v[off + p] = e;
            }
        }
        v
    };

    // arcs_at[point][side]: (other point, face, corner); side 0 = forward face
    let mut arcs_at: Vec<[(usize, FaceId, u8); 2]> = vec![[(usize::MAX, 0, 0); 2]; total];
    for f in 0..tri.face_count() {
        let x = corner_counts(tri, weights, f).expect("weights validated");
        let face = tri.face(f);
        // traversal position -> global point id for slot j
        let gpoint = |j: usize, t: u64| -> usize {
            let slot = face[j];
            let w = weights[slot.edge];
            let pos = if slot.forward { t } else { w - 1 - t };
            offsets[slot.edge] + pos as usize
        };
        for i in 0..3usize {
            let p_slot = (i + 2) % 3;
            let w_p = weights[face[p_slot].edge];
            for k in 0..x[i] {
                let from = gpoint(p_slot, w_p - 1 - k);
                let to = gpoint(i, k);
                let side_from = usize::from(!face[p_slot].forward);
                let side_to = usize::from(!face[i].forward);
                arcs_at[from][side_from] = (to, f, i as u8);
                arcs_at[to][side_to] = (from, f, i as u8);
            }
        }
    }
    debug_assert!(arcs_at
        .iter()
        .all(|a| a[0].0 != usize::MAX && a[1].0 != usize::MAX));

    let mut visited = vec![false; total];
    let mut comps = Vec::new();
    for start in 0..total {
        if visited[start] {
            continue;
        }
        let mut points = Vec::new();
        let mut faces = Vec::new();
        let mut corners = Vec::new();
        let mut signs = Vec::new();
        let mut p = start;
        let mut entering_forward = true; // leave start into the forward face
        loop {
            visited[p] = true;
            let e = point_edge[p];
            points.push((e, (p - offsets[e]) as u64));
            signs.push(if entering_forward { 1 } else { -1 });
            let side = usize::from(!entering_forward); // 0 = forward face
            let (q, f, corner) = arcs_at[p][side];
            faces.push(f);
            corners.push(corner);
            if q == start {
                break;
            }
            // arriving at q inside face f; crossing q leaves f
            entering_forward = tri.sides(point_edge[q]).backward.0 == f;
            p = q;
        }
        comps.push(TracedComponent { points, faces, corners, signs });
    }
    comps
}

/// The `(face, corner)` cycle of the curve encircling the vertex, straight
/// from the link walk.
pub fn vertex_link_canonical_steps(tri: &Triangulation) -> Vec<(u32, u8)> {
    let seq: Vec<(u32, u8)> = tri
        .vertex_link()
        .iter()
        .map(|s| (s.sector.0 as u32, s.sector.1))
        .collect();
    let mut rev = seq.clone();
    rev.reverse();
    let a = min_rotation(&seq);
    let b = min_rotation(&rev);
    if a <= b {
        a
    } else {
        b
    }
}

/// One oriented component of a canonical multicurve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedComponent {
    canon_steps: Vec<(u32, u8)>,
    traced: TracedComponent,
}

impl OrientedComponent {
    pub fn canonical_steps(&self) -> &[(u32, u8)] {
        &self.canon_steps
    }

    /// Traversal data in the oriented direction.
    pub fn traced(&self) -> &TracedComponent {
        &self.traced
    }

    pub fn orientation(&self) -> i8 {
        self.traced.orientation_bit()
    }

    pub fn len(&self) -> usize {
        self.traced.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traced.is_empty()
    }

    fn sort_key(&self) -> (usize, &[(u32, u8)], i8) {
        (self.canon_steps.len(), &self.canon_steps, self.orientation())
    }
}

/// A canonical oriented multicurve: validated weights, traced components in
/// canonical order, one orientation sign per component. Equal values
/// represent isotopic oriented multicurves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalMulticurve {
    weights: Vec<u64>,
    components: Vec<OrientedComponent>,
}

impl NormalMulticurve {
    /// Builds the canonical multicurve from weights and per-component
    /// orientation signs (indexed by canonical component order). Rejects
    /// vectors containing a vertex-link component.
    pub fn canonicalize(
        tri: &Triangulation,
        weights: &[u64],
        orientations: &[i64],
    ) -> Result<Self> {
        let nw = validate(tri, weights)?;
        let traced = trace(tri, &nw);
        let link = vertex_link_canonical_steps(tri);
        let mut comps: Vec<(Vec<(u32, u8)>, TracedComponent)> = Vec::new();
        for (k, t) in traced.into_iter().enumerate() {
            let canon = t.canonical_steps();
            if canon == link {
                return Err(Error::DiscBoundingComponent(k));
            }
            comps.push((canon, t));
        }
        if orientations.len() != comps.len() {
            return Err(Error::OrientationCount { expected: comps.len(), got: orientations.len() });
        }
        for &s in orientations {
            if s != 1 && s != -1 {
                return Err(Error::BadOrientationSign(s));
            }
        }
        // canonical order of the underlying unoriented components
        comps.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        // within a group of identical unoriented components the signs are
        // interchangeable; keep them sorted so the value is canonical
        let mut signs: Vec<i64> = orientations.to_vec();
        let mut i = 0;
        while i < comps.len() {
            let mut j = i + 1;
            while j < comps.len() && comps[j].0 == comps[i].0 {
                j += 1;
            }
            signs[i..j].sort_unstable();
            i = j;
        }
        let mut components = Vec::with_capacity(comps.len());
        for ((canon, mut t), want) in comps.into_iter().zip(signs) {
            if t.orientation_bit() as i64 != want {
                t.reverse();
            }
            debug_assert_eq!(t.orientation_bit() as i64, want);
            components.push(OrientedComponent { canon_steps: canon, traced: t });
        }
        components.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(NormalMulticurve { weights: weights.to_vec(), components })
    }

    /// The empty multicurve (class zero, no components).
    pub fn empty(tri: &Triangulation) -> Self {
        NormalMulticurve { weights: vec![0; tri.edge_count()], components: Vec::new() }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn components(&self) -> &[OrientedComponent] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Orientation signs in canonical component order.
    pub fn orientations(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.orientation() as i64).collect()
    }

    /// True when two components are the same oriented curve (the homology
    /// class then counts it with multiplicity).
    pub fn has_parallel_duplicates(&self) -> bool {
        self.components.windows(2).any(|w| {
            w[0].canon_steps == w[1].canon_steps && w[0].orientation() == w[1].orientation()
        })
    }

    /// Signed count of crossings through each edge: `+1` where the strand
    /// crosses into the forward-side face.
    pub fn edge_crossing_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.weights.len()];
        for c in &self.components {
            let t = c.traced();
            for (k, &(e, _)) in t.points.iter().enumerate() {
                sums[e] += t.signs[k] as i64;
            }
        }
        sums
    }

    /// Flips every component's orientation.
    pub fn reversed(&self) -> Self {
        let mut components: Vec<OrientedComponent> = self
            .components
            .iter()
            .map(|c| {
                let mut t = c.traced.clone();
                t.reverse();
                OrientedComponent { canon_steps: c.canon_steps.clone(), traced: t }
            })
            .collect();
        components.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        NormalMulticurve { weights: self.weights.clone(), components }
    }
}

impl fmt::Display for NormalMulticurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "multicurve weights {:?}", self.weights)?;
        for (k, c) in self.components.iter().enumerate() {
            let steps: Vec<String> = c
                .traced()
                .faces
                .iter()
                .zip(&c.traced().corners)
                .map(|(face, corner)| format!("f{face}c{corner}"))
                .collect();
            writeln!(
                f,
                "  component {k} (orientation {:+}): {}",
                c.orientation(),
                steps.join(" ")
            )?;
        }
        Ok(())
    }
}
