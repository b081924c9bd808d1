//! Surfaces built from paths of disjoint homologous multicurves.
//!
//! Each step of a path bounds a sub-surface (when the step is simple, the
//! chain takes only the values 0 and 1); picking one of the two levels per
//! step and joining consecutive pieces by annuli over the shared
//! multicurve gives a surface whose boundary is the difference of the two
//! path ends. Genus bookkeeping is exact: chi adds over pieces, annuli
//! contribute nothing, and each connected component's genus comes from
//! `2 - chi - b = 2 genus`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicI64, Ordering};

use rand::seq::SliceRandom;

use crate::complex::{ComplexSlice, Distance};
use crate::error::{Error, Result};
use crate::homology::{bounding_chain, homology_class, BoundingChain};
use crate::normal::NormalMulticurve;
use crate::picture::Sys;
use crate::sample::rng_from_seed;
use crate::surface::Triangulation;
use crate::uf::UnionFind;

/// Which side of a simple step's chain is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepChoice {
    /// regions at weight 0
    Lower,
    /// regions at weight 1
    Upper,
}

impl StepChoice {
    pub fn level(self) -> i64 {
        match self {
            StepChoice::Lower => 0,
            StepChoice::Upper => 1,
        }
    }
}

/// Outcome of the simplicity test for one step.
pub enum SimpleStep<'t> {
    Simple(BoundingChain<'t>),
    NonSimple { min: i64, max: i64 },
}

/// Computes the chain bounded by `m2 - m1` and checks that its weights
/// span at most two consecutive values.
pub fn check_simple_step<'t>(
    tri: &'t Triangulation,
    m1: &NormalMulticurve,
    m2: &NormalMulticurve,
) -> Result<SimpleStep<'t>> {
    let chain = bounding_chain(tri, m1, m2)?;
    let (min, max) = chain.weight_range();
    if max - min <= 1 {
        Ok(SimpleStep::Simple(chain))
    } else {
        Ok(SimpleStep::NonSimple { min, max })
    }
}

/// A path in the complex: consecutive vertices disjoint, constant class.
#[derive(Debug, Clone)]
pub struct PathInHC {
    vertices: Vec<NormalMulticurve>,
}

impl PathInHC {
    pub fn new(tri: &Triangulation, vertices: Vec<NormalMulticurve>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::BadPath(0));
        }
        let class0 = homology_class(&vertices[0]);
        for (i, w) in vertices.windows(2).enumerate() {
            let ci = homology_class(&w[1]);
            if ci != class0 {
                return Err(Error::ClassMismatch { left: class0, right: ci });
            }
            let n = crate::intersect::geometric_intersection(tri, &w[0], &w[1])?;
            if n != 0 {
                return Err(Error::BadPath(i));
            }
        }
        Ok(PathInHC { vertices })
    }

    pub fn vertices(&self) -> &[NormalMulticurve] {
        &self.vertices
    }

    pub fn steps(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Per-component bookkeeping of the built surface.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ComponentReport {
    pub chi: i64,
    pub boundary: usize,
    pub genus: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SurfaceReport {
    /// Euler characteristic of the whole surface (annuli contribute 0)
    pub chi: i64,
    /// component count of the first path vertex plus that of the last
    pub boundary_components: usize,
    pub components: Vec<ComponentReport>,
    pub total_genus: u64,
    pub connected: bool,
    /// one flag per step; always all-true for a successfully built surface
    pub simple: Vec<bool>,
}

/// One attached piece: its chi and the path-vertex components of the two
/// interfaces appearing on its boundary.
#[derive(Debug, Clone)]
struct PieceLite {
    chi: i64,
    lower: Vec<usize>,
    upper: Vec<usize>,
}

/// Cached per-edge step data: the pieces of both levels.
#[derive(Debug, Clone)]
struct StepCache {
    lower: Vec<PieceLite>,
    upper: Vec<PieceLite>,
}

fn step_cache(chain: &BoundingChain<'_>) -> StepCache {
    let mut out = StepCache { lower: Vec::new(), upper: Vec::new() };
    for (level, store) in [(0i64, &mut out.lower), (1i64, &mut out.upper)] {
        for piece in chain.level_pieces(level) {
            let mut lite = PieceLite { chi: piece.chi, lower: Vec::new(), upper: Vec::new() };
            for s in piece.boundary_strands {
                let (sys, comp) = chain.strand_owner(s);
                match sys {
                    Sys::First => lite.lower.push(comp),
                    Sys::Second => lite.upper.push(comp),
                }
            }
            store.push(lite);
        }
    }
    out
}

/// Glues chosen pieces and connecting annuli; exact chi/boundary/genus
/// bookkeeping per connected component.
fn assemble(steps: &[&[PieceLite]], interface_comps: &[usize]) -> SurfaceReport {
    let j = steps.len();
    debug_assert_eq!(interface_comps.len(), j + 1);
    let mut tube_base = vec![0usize; j + 1];
    let mut next = 0usize;
    for (i, &c) in interface_comps.iter().enumerate() {
        tube_base[i] = next;
        next += c;
    }
    let mut piece_base = vec![0usize; j];
    for (i, st) in steps.iter().enumerate() {
        piece_base[i] = next;
        next += st.len();
    }
    let mut uf = UnionFind::new(next);
    for (i, st) in steps.iter().enumerate() {
        for (p, piece) in st.iter().enumerate() {
            let pid = piece_base[i] + p;
            for &c in &piece.lower {
                uf.union(pid, tube_base[i] + c);
            }
            for &c in &piece.upper {
                uf.union(pid, tube_base[i + 1] + c);
            }
        }
    }
    let mut chi: HashMap<usize, i64> = HashMap::new();
    let mut boundary: HashMap<usize, usize> = HashMap::new();
    for (i, st) in steps.iter().enumerate() {
        for (p, piece) in st.iter().enumerate() {
            *chi.entry(uf.find(piece_base[i] + p)).or_insert(0) += piece.chi;
        }
    }
    for end in [0, j] {
        for c in 0..interface_comps[end] {
            let root = uf.find(tube_base[end] + c);
            *boundary.entry(root).or_insert(0) += 1;
            chi.entry(root).or_insert(0);
        }
        if j == 0 {
            break; // degenerate: no steps
        }
    }
    let mut roots: Vec<usize> = chi.keys().copied().collect();
    roots.sort_unstable();
    let mut components = Vec::with_capacity(roots.len());
    let mut total_genus = 0u64;
    for r in roots {
        let c = chi[&r];
        let b = boundary.get(&r).copied().unwrap_or(0);
        let two_genus = 2 - c - b as i64;
        assert!(two_genus >= 0 && two_genus % 2 == 0, "component genus must be a non-negative integer");
        let genus = (two_genus / 2) as u64;
        total_genus += genus;
        components.push(ComponentReport { chi: c, boundary: b, genus });
    }
    SurfaceReport {
        chi: components.iter().map(|c| c.chi).sum(),
        boundary_components: interface_comps[0] + interface_comps[j],
        connected: components.len() == 1,
        total_genus,
        simple: vec![true; j],
        components,
    }
}

/// Builds the surface determined by a path and one level choice per step.
pub fn build_surface(
    tri: &Triangulation,
    path: &PathInHC,
    choices: &[StepChoice],
) -> Result<SurfaceReport> {
    let j = path.steps();
    if choices.len() != j {
        return Err(Error::BadPath(choices.len()));
    }
    let mut caches = Vec::with_capacity(j);
    for i in 0..j {
        match check_simple_step(tri, &path.vertices[i], &path.vertices[i + 1])? {
            SimpleStep::Simple(chain) => {
                let cache = step_cache(&chain);
                let level = choices[i].level();
                let pieces = if level == 0 { &cache.lower } else { &cache.upper };
                if pieces.is_empty() {
                    return Err(Error::DegeneratePiece { step: i, level });
                }
                caches.push(cache);
            }
            SimpleStep::NonSimple { min, max } => {
                return Err(Error::NonSimpleStep { step: i, min, max });
            }
        }
    }
    let steps: Vec<&[PieceLite]> = caches
        .iter()
        .zip(choices)
        .map(|(c, ch)| match ch {
            StepChoice::Lower => c.lower.as_slice(),
            StepChoice::Upper => c.upper.as_slice(),
        })
        .collect();
    let interface_comps: Vec<usize> =
        path.vertices.iter().map(|m| m.component_count()).collect();
    Ok(assemble(&steps, &interface_comps))
}

/// Result of the minimal-genus search.
#[derive(Debug, Clone)]
pub enum GenusOutcome {
    Found {
        genus: u64,
        /// slice vertex indices, including both ends
        path: Vec<usize>,
        choices: Vec<StepChoice>,
        report: SurfaceReport,
    },
    /// no simple path of the allowed length connects the ends
    Exhausted { max_len: usize },
}

impl GenusOutcome {
    pub fn genus(&self) -> Option<u64> {
        match self {
            GenusOutcome::Found { genus, .. } => Some(*genus),
            GenusOutcome::Exhausted { .. } => None,
        }
    }

    pub fn path_len(&self) -> Option<usize> {
        match self {
            GenusOutcome::Found { path, .. } => Some(path.len() - 1),
            GenusOutcome::Exhausted { .. } => None,
        }
    }
}

#[derive(Debug, Clone)]
struct Best {
    genus: u64,
    path: Vec<usize>,
    choices: Vec<StepChoice>,
    report: SurfaceReport,
}

fn step_of(
    slice: &ComplexSlice<'_>,
    cache: &mut HashMap<(usize, usize), Option<StepCache>>,
    x: usize,
    y: usize,
) -> Option<StepCache> {
    if let Some(c) = cache.get(&(x, y)) {
        return c.clone();
    }
    let verts = slice.vertices();
    let entry = match check_simple_step(slice.tri(), &verts[x], &verts[y]) {
        Ok(SimpleStep::Simple(chain)) => Some(step_cache(&chain)),
        _ => None,
    };
    cache.insert((x, y), entry.clone());
    entry
}

/// Depth-first over simple paths with distinct vertices; at every complete
/// path all choice patterns are scored. A partial path is abandoned when
/// even an all-annuli completion cannot beat the shared incumbent genus.
#[allow(clippy::too_many_arguments)]
fn dfs(
    slice: &ComplexSlice<'_>,
    cache: &mut HashMap<(usize, usize), Option<StepCache>>,
    step_caches: &mut Vec<StepCache>,
    path: &mut Vec<usize>,
    to: usize,
    max_len: usize,
    b_total: usize,
    chi_best_sum: i64,
    incumbent: &AtomicI64,
    best: &mut Option<Best>,
) {
    let verts = slice.vertices();
    let last = *path.last().unwrap();
    if last == to {
        let j = step_caches.len();
        let interface_comps: Vec<usize> =
            path.iter().map(|&v| verts[v].component_count()).collect();
        for mask in 0..(1u32 << j) {
            let choices: Vec<StepChoice> = (0..j)
                .map(|i| if mask >> i & 1 == 1 { StepChoice::Upper } else { StepChoice::Lower })
                .collect();
            let steps: Vec<&[PieceLite]> = step_caches
                .iter()
                .zip(&choices)
                .map(|(c, ch)| match ch {
                    StepChoice::Lower => c.lower.as_slice(),
                    StepChoice::Upper => c.upper.as_slice(),
                })
                .collect();
            if steps.iter().any(|s| s.is_empty()) {
                continue;
            }
            let report = assemble(&steps, &interface_comps);
            let g = report.total_genus as i64;
            let better = match best {
                None => true,
                Some(b) => {
                    (g, path.len(), &*path, &choices)
                        < (b.genus as i64, b.path.len(), &b.path, &b.choices)
                }
            };
            if better {
                incumbent.fetch_min(g, Ordering::Relaxed);
                *best = Some(Best { genus: report.total_genus, path: path.clone(), choices, report });
            }
        }
        return;
    }
    if path.len() > max_len {
        return;
    }
    for next in 0..slice.len() {
        if path.contains(&next) || !slice.adjacent(last, next) {
            continue;
        }
        if path.len() == max_len && next != to {
            continue;
        }
        let Some(sc) = step_of(slice, cache, last, next) else {
            continue;
        };
        let best_chi = sc
            .lower
            .iter()
            .map(|p| p.chi)
            .sum::<i64>()
            .max(sc.upper.iter().map(|p| p.chi).sum::<i64>());
        let chi_sum = chi_best_sum + best_chi;
        let lb = (2 - chi_sum - b_total as i64).max(0) / 2;
        if lb > incumbent.load(Ordering::Relaxed) {
            continue;
        }
        path.push(next);
        step_caches.push(sc);
        dfs(slice, cache, step_caches, path, to, max_len, b_total, chi_sum, incumbent, best);
        step_caches.pop();
        path.pop();
    }
}

fn run_branch(
    slice: &ComplexSlice<'_>,
    from: usize,
    first: usize,
    to: usize,
    max_len: usize,
    b_total: usize,
    incumbent: &AtomicI64,
) -> Option<Best> {
    let mut cache = HashMap::new();
    let sc = step_of(slice, &mut cache, from, first)?;
    let best_chi = sc
        .lower
        .iter()
        .map(|p| p.chi)
        .sum::<i64>()
        .max(sc.upper.iter().map(|p| p.chi).sum::<i64>());
    let mut path = vec![from, first];
    let mut step_caches = vec![sc];
    let mut best = None;
    dfs(
        slice,
        &mut cache,
        &mut step_caches,
        &mut path,
        to,
        max_len,
        b_total,
        best_chi,
        incumbent,
        &mut best,
    );
    best
}

/// Searches simple paths (distinct vertices, length at most `max_len`)
/// between two slice vertices, over both level choices per step, for the
/// constructed surface of smallest total genus. The identity pair uses the
/// annulus over the doubled multicurve and always reports genus 0. First
/// steps are searched in parallel when the `parallel` feature is on; the
/// incumbent bound is shared through an atomic and only strictly worse
/// partial paths are pruned, so the result does not depend on scheduling.
pub fn minimal_genus_search(
    slice: &ComplexSlice<'_>,
    from: usize,
    to: usize,
    max_len: usize,
) -> GenusOutcome {
    let verts = slice.vertices();
    let b_total = verts[from].component_count() + verts[to].component_count();

    if from == to {
        let mut cache = HashMap::new();
        let cache_mm = step_of(slice, &mut cache, from, to).expect("identity step is simple");
        let steps: Vec<&[PieceLite]> = vec![cache_mm.upper.as_slice()];
        let comps = verts[from].component_count();
        let report = assemble(&steps, &[comps, comps]);
        debug_assert_eq!(report.total_genus, 0);
        return GenusOutcome::Found {
            genus: report.total_genus,
            path: vec![from, to],
            choices: vec![StepChoice::Upper],
            report,
        };
    }
    if max_len == 0 {
        return GenusOutcome::Exhausted { max_len };
    }

    let incumbent = AtomicI64::new(i64::MAX);
    let firsts: Vec<usize> = (0..slice.len())
        .filter(|&x| x != from && slice.adjacent(from, x) && (x == to || max_len >= 2))
        .collect();
    let branch_best = crate::batch::map(&firsts, |&x| {
        run_branch(slice, from, x, to, max_len, b_total, &incumbent)
    });
    let mut best: Option<Best> = None;
    for b in branch_best.into_iter().flatten() {
        let better = match &best {
            None => true,
            Some(cur) => {
                (b.genus, b.path.len(), &b.path, &b.choices)
                    < (cur.genus, cur.path.len(), &cur.path, &cur.choices)
            }
        };
        if better {
            best = Some(b);
        }
    }
    match best {
        Some(b) => GenusOutcome::Found {
            genus: b.genus,
            path: b.path,
            choices: b.choices,
            report: b.report,
        },
        None => GenusOutcome::Exhausted { max_len },
    }
}

/// One surveyed pair.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SurveyRow {
    pub u: usize,
    pub v: usize,
    pub d: Option<u64>,
    pub genus: Option<u64>,
    pub path_len: Option<usize>,
    pub censored: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
    /// (min, max) of d/g over uncensored pairs with g >= 1
    pub envelope: Option<(f64, f64)>,
    /// pairs whose minimal constructed surface is a union of annuli
    pub zero_genus_pairs: usize,
    pub censored: usize,
    pub sampled: usize,
}

/// Tabulates distance against minimal constructed genus over a seeded
/// sample of vertex pairs (all pairs when there are at most `sample_cap`).
pub fn corollary_survey(
    slice: &ComplexSlice<'_>,
    max_len: usize,
    seed: u64,
    sample_cap: usize,
) -> SurveyReport {
    let n = slice.len();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    if pairs.len() > sample_cap {
        let mut rng = rng_from_seed(seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(sample_cap);
        pairs.sort_unstable();
    }
    let mut rows = Vec::with_capacity(pairs.len());
    let mut censored = 0usize;
    let mut zero_genus = 0usize;
    let mut env: Option<(f64, f64)> = None;
    for &(u, v) in &pairs {
        let d = match slice.distance(u, v) {
            Distance::Reached { d, .. } => Some(d),
            Distance::Unreachable { .. } => None,
        };
        let outcome = minimal_genus_search(slice, u, v, max_len);
        let genus = outcome.genus();
        let path_len = outcome.path_len();
        if let (Some(d), Some(l)) = (d, path_len) {
            assert!(d as usize <= l, "distance exceeds witness path length");
        }
        let row_censored = d.is_none() || genus.is_none();
        if row_censored {
            censored += 1;
        }
        match (d, genus) {
            (Some(d), Some(g)) if g >= 1 => {
                let r = d as f64 / g as f64;
                env = Some(match env {
                    None => (r, r),
                    Some((lo, hi)) => (lo.min(r), hi.max(r)),
                });
            }
            (_, Some(0)) => zero_genus += 1,
            _ => {}
        }
        rows.push(SurveyRow { u, v, d, genus, path_len, censored: row_censored });
    }
    SurveyReport {
        rows,
        envelope: env,
        zero_genus_pairs: zero_genus,
        censored,
        sampled: pairs.len(),
    }
}
