//! A finite slice of the complex of homologous oriented multicurves.
//!
//! Vertices are all canonical multicurves in a fixed nonzero class with
//! total normal weight at most a bound; two vertices are adjacent exactly
//! when their geometric intersection number vanishes. The true complex is
//! infinite, so every distance reported from a slice is an upper bound
//! that can only shrink as the bound grows.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::batch;
use crate::error::{Error, Result};
use crate::homology::homology_class;
use crate::intersect::geometric_intersection;
use crate::normal::{trace, validate, NormalMulticurve};
use crate::surface::Triangulation;

/// Memoized adjacency oracle: geometric intersection numbers keyed by
/// unordered vertex index pairs. Inserts are idempotent (the value for a
/// pair never changes), so batch-computed results may land in any order.
#[derive(Debug, Default)]
pub struct IntersectionCache {
    map: RwLock<HashMap<(u32, u32), u64>>,
}

impl IntersectionCache {
    fn key(i: usize, j: usize) -> (u32, u32) {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        (a as u32, b as u32)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        self.map.read().unwrap().get(&Self::key(i, j)).copied()
    }

    pub fn insert(&self, i: usize, j: usize, value: u64) {
        let mut m = self.map.write().unwrap();
        let prev = m.insert(Self::key(i, j), value);
        debug_assert!(prev.is_none() || prev == Some(value));
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Outcome of a shortest-path query in a slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    Reached { d: u64, path: Vec<usize> },
    /// no path within the slice; the searched radius is a certificate that
    /// any path in the slice is longer
    Unreachable { searched: u64 },
}

impl Distance {
    pub fn reached(&self) -> Option<u64> {
        match self {
            Distance::Reached { d, .. } => Some(*d),
            Distance::Unreachable { .. } => None,
        }
    }
}

pub struct ComplexSlice<'t> {
    tri: &'t Triangulation,
    alpha: Vec<i64>,
    weight_bound: u64,
    vertices: Vec<NormalMulticurve>,
    cache: IntersectionCache,
}

impl<'t> ComplexSlice<'t> {
    pub fn tri(&self) -> &'t Triangulation {
        self.tri
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn weight_bound(&self) -> u64 {
        self.weight_bound
    }

    pub fn vertices(&self) -> &[NormalMulticurve] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, m: &NormalMulticurve) -> Option<usize> {
        self.vertices.iter().position(|v| v == m)
    }

    pub fn require_index(&self, m: &NormalMulticurve) -> Result<usize> {
        self.index_of(m)
            .ok_or_else(|| Error::NotInSlice(format!("weights {:?}", m.weights())))
    }

    fn intersection(&self, i: usize, j: usize) -> u64 {
        if let Some(v) = self.cache.get(i, j) {
            return v;
        }
        let v = geometric_intersection(self.tri, &self.vertices[i], &self.vertices[j])
            .expect("slice vertices share the triangulation");
        self.cache.insert(i, j, v);
        v
    }

    fn fill_cache(&self, pairs: &[(usize, usize)]) {
        let missing: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(i, j)| self.cache.get(i, j).is_none())
            .collect();
        let values = batch::map(&missing, |&(i, j)| {
            geometric_intersection(self.tri, &self.vertices[i], &self.vertices[j])
                .expect("slice vertices share the triangulation")
        });
        for (&(i, j), v) in missing.iter().zip(values) {
            self.cache.insert(i, j, v);
        }
    }

    /// Adjacency: distinct vertices with disjoint representatives.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.intersection(i, j) == 0
    }

    /// Materializes all edges (i < j). Batch-parallel under the feature.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        self.fill_cache(&pairs);
        pairs.into_iter().filter(|&(i, j)| self.adjacent(i, j)).collect()
    }

    /// Breadth-first distance with a witness path; adjacency is computed
    /// lazily level by level and memoized.
    pub fn distance(&self, from: usize, to: usize) -> Distance {
        assert!(from < self.len() && to < self.len());
        if from == to {
            return Distance::Reached { d: 0, path: vec![from] };
        }
        let n = self.len();
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut visited = vec![false; n];
        visited[from] = true;
        let mut frontier = vec![from];
        let mut depth = 0u64;
        while !frontier.is_empty() {
            depth += 1;
            let candidates: Vec<usize> = (0..n).filter(|&x| !visited[x]).collect();
            let mut pairs = Vec::new();
            for &f in &frontier {
                for &c in &candidates {
                    pairs.push((f, c));
                }
            }
            self.fill_cache(&pairs);
            let mut next = Vec::new();
            for &c in &candidates {
                if let Some(&f) = frontier.iter().find(|&&f| self.adjacent(f, c)) {
                    visited[c] = true;
                    parent[c] = Some(f);
                    if c == to {
                        let mut path = vec![to];
                        let mut at = to;
                        while let Some(p) = parent[at] {
                            path.push(p);
                            at = p;
                        }
                        path.reverse();
                        debug_assert_eq!(path.len() as u64, depth + 1);
                        return Distance::Reached { d: depth, path };
                    }
                    next.push(c);
                }
            }
            frontier = next;
        }
        Distance::Unreachable { searched: depth }
    }

    /// Single-source distances (no witnesses), for oracle comparisons.
    pub fn distances_from(&self, from: usize) -> Vec<Option<u64>> {
        let n = self.len();
        let mut dist = vec![None; n];
        dist[from] = Some(0);
        let mut frontier = vec![from];
        let mut depth = 0u64;
        while !frontier.is_empty() {
            depth += 1;
            let candidates: Vec<usize> = (0..n).filter(|&x| dist[x].is_none()).collect();
            let mut pairs = Vec::new();
            for &f in &frontier {
                for &c in &candidates {
                    pairs.push((f, c));
                }
            }
            self.fill_cache(&pairs);
            let mut next = Vec::new();
            for &c in &candidates {
                if frontier.iter().any(|&f| self.adjacent(f, c)) {
                    dist[c] = Some(depth);
                    next.push(c);
                }
            }
            frontier = next;
        }
        dist
    }
}

/// All weight vectors of length `len` with total at most `bound`, in
/// lexicographic order.
fn for_each_vector(len: usize, bound: u64, mut f: impl FnMut(&[u64])) {
    let mut v = vec![0u64; len];
    loop {
        f(&v);
        // next vector with sum <= bound
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v.iter().sum::<u64>() <= bound {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Enumerates every vertex of the slice: all valid multicurves without
/// disc-bounding components, in class `alpha`, of total weight at most
/// `weight_bound`, over all orientation patterns, deduplicated.
pub fn enumerate_vertices<'t>(
    tri: &'t Triangulation,
    alpha: &[i64],
    weight_bound: u64,
) -> Result<ComplexSlice<'t>> {
    if alpha.len() != 2 * tri.genus() as usize {
        return Err(Error::WeightLength { expected: 2 * tri.genus() as usize, got: alpha.len() });
    }
    if alpha.iter().all(|&x| x == 0) {
        return Err(Error::ZeroAlpha);
    }
    let mut found: Vec<NormalMulticurve> = Vec::new();
    let mut seen: std::collections::HashSet<(Vec<u64>, Vec<i64>)> = Default::default();
    for_each_vector(tri.edge_count(), weight_bound, |w| {
        if w.iter().all(|&x| x == 0) {
            return;
        }
        let Ok(nw) = validate(tri, w) else { return };
        let comps = trace(tri, &nw);
        if comps.is_empty() {
            return;
        }
        let k = comps.len();
        for pattern in 0..(1u32 << k) {
            let signs: Vec<i64> = (0..k)
                .map(|b| if pattern >> b & 1 == 1 { 1 } else { -1 })
                .collect();
            let Ok(mc) = NormalMulticurve::canonicalize(tri, w, &signs) else {
                return; // vertex-link component: no pattern can work
            };
            if homology_class(&mc) != alpha {
                continue;
            }
            let key = (mc.weights().to_vec(), mc.orientations());
            if seen.insert(key) {
                found.push(mc);
            }
        }
    });
    found.sort_by(|a, b| {
        (a.total_weight(), a.weights(), a.orientations())
            .cmp(&(b.total_weight(), b.weights(), b.orientations()))
    });
    Ok(ComplexSlice {
        tri,
        alpha: alpha.to_vec(),
        weight_bound,
        vertices: found,
        cache: IntersectionCache::default(),
    })
}

impl<'t> ComplexSlice<'t> {
    /// Test-only: a slice with an explicit vertex list, for exercising the
    /// search mechanics on graphs the enumerator cannot produce.
    #[doc(hidden)]
    pub fn with_vertices(
        tri: &'t Triangulation,
        alpha: Vec<i64>,
        weight_bound: u64,
        vertices: Vec<NormalMulticurve>,
    ) -> Self {
        ComplexSlice { tri, alpha, weight_bound, vertices, cache: IntersectionCache::default() }
    }
}
