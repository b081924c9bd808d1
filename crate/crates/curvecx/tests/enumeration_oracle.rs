//! Independent re-derivation of slice vertex sets, plus intersection
//! properties that exercise parallel families: additivity over disjoint
//! unions and invariance under orientation reversal.

use std::collections::HashSet;

use curvecx::basis::basis_curve;
use curvecx::complex::enumerate_vertices;
use curvecx::homology::homology_class;
use curvecx::intersect::geometric_intersection;
use curvecx::normal::{trace, validate, NormalMulticurve};
use curvecx::sample::{random_multicurve, rng_from_seed};
use curvecx::surface::Triangulation;

/// Dumb scan: all weight vectors with the given total bound, one odometer
/// digit at a time, every orientation pattern, keyed by the canonical
/// (weights, orientations) form.
fn scan_slice(
    tri: &Triangulation,
    alpha: &[i64],
    bound: u64,
) -> HashSet<(Vec<u64>, Vec<i64>)> {
    let e = tri.edge_count();
    let mut found = HashSet::new();
    let mut w = vec![0u64; e];
    loop {
        if w.iter().sum::<u64>() <= bound && w.iter().any(|&x| x > 0) {
            if let Ok(nw) = validate(tri, &w) {
                let k = trace(tri, &nw).len();
                for pattern in 0u32..(1 << k) {
                    let signs: Vec<i64> =
                        (0..k).map(|b| if pattern >> b & 1 == 1 { 1 } else { -1 }).collect();
                    if let Ok(mc) = NormalMulticurve::canonicalize(tri, &w, &signs) {
                        if homology_class(&mc) == alpha {
                            found.insert((mc.weights().to_vec(), mc.orientations()));
                        }
                    }
                }
            }
        }
        // odometer with a total bound
        let mut i = e;
        loop {
            if i == 0 {
                return found;
            }
            i -= 1;
            w[i] += 1;
            if w.iter().sum::<u64>() <= bound {
                break;
            }
            w[i] = 0;
        }
    }
}

#[test]
fn enumeration_matches_the_independent_scan() {
    let tri = Triangulation::standard(2).unwrap();
    for bound in [4u64, 6, 9] {
        let slice = enumerate_vertices(&tri, &[1, 0, 0, 0], bound).unwrap();
        let got: HashSet<(Vec<u64>, Vec<i64>)> = slice
            .vertices()
            .iter()
            .map(|m| (m.weights().to_vec(), m.orientations()))
            .collect();
        let expected = scan_slice(&tri, &[1, 0, 0, 0], bound);
        assert_eq!(got, expected, "bound {bound}");
        assert_eq!(got.len(), slice.len(), "no duplicates, bound {bound}");
    }
}

#[test]
fn geometric_intersection_is_orientation_blind() {
    let tri = Triangulation::standard(2).unwrap();
    let mut rng = rng_from_seed(31);
    for _ in 0..25 {
        let x = random_multicurve(&tri, 10, &mut rng).unwrap();
        let y = random_multicurve(&tri, 10, &mut rng).unwrap();
        let base = geometric_intersection(&tri, &x, &y).unwrap();
        assert_eq!(geometric_intersection(&tri, &x.reversed(), &y).unwrap(), base);
        assert_eq!(geometric_intersection(&tri, &x, &y.reversed()).unwrap(), base);
    }
}

#[test]
fn geometric_intersection_doubles_with_parallel_copies() {
    let tri = Triangulation::standard(2).unwrap();
    let mut rng = rng_from_seed(32);
    for _ in 0..15 {
        let x = random_multicurve(&tri, 8, &mut rng).unwrap();
        let y = random_multicurve(&tri, 8, &mut rng).unwrap();
        let doubled: Vec<u64> = x.weights().iter().map(|w| 2 * w).collect();
        let mut signs = Vec::new();
        for s in x.orientations() {
            signs.push(s);
            signs.push(s);
        }
        let xx = NormalMulticurve::canonicalize(&tri, &doubled, &signs).unwrap();
        assert_eq!(
            geometric_intersection(&tri, &xx, &y).unwrap(),
            2 * geometric_intersection(&tri, &x, &y).unwrap()
        );
    }
}

#[test]
fn geometric_intersection_adds_over_disjoint_unions() {
    let tri = Triangulation::standard(2).unwrap();
    let mut rng = rng_from_seed(33);
    let mut done = 0;
    while done < 15 {
        let x = random_multicurve(&tri, 8, &mut rng).unwrap();
        let z = random_multicurve(&tri, 8, &mut rng).unwrap();
        if geometric_intersection(&tri, &x, &z).unwrap() != 0 {
            continue;
        }
        // x and z are disjoint: their union is a single multicurve whose
        // intersections with anything add up
        let union_w: Vec<u64> =
            x.weights().iter().zip(z.weights()).map(|(a, b)| a + b).collect();
        let nw = validate(&tri, &union_w).unwrap();
        let k = trace(&tri, &nw).len();
        assert_eq!(k, x.component_count() + z.component_count());
        // orientations in canonical order of the union
        let mut keyed: Vec<(usize, Vec<(u32, u8)>, i64)> = Vec::new();
        for m in [&x, &z] {
            for c in m.components() {
                keyed.push((
                    c.canonical_steps().len(),
                    c.canonical_steps().to_vec(),
                    c.orientation() as i64,
                ));
            }
        }
        keyed.sort();
        let signs: Vec<i64> = keyed.into_iter().map(|(_, _, o)| o).collect();
        let xz = NormalMulticurve::canonicalize(&tri, &union_w, &signs).unwrap();
        let y = random_multicurve(&tri, 8, &mut rng).unwrap();
        assert_eq!(
            geometric_intersection(&tri, &xz, &y).unwrap(),
            geometric_intersection(&tri, &x, &y).unwrap()
                + geometric_intersection(&tri, &z, &y).unwrap()
        );
        done += 1;
    }
}

#[test]
fn genus_three_slice_and_intersections() {
    let tri = Triangulation::standard(3).unwrap();
    let mut alpha = vec![0i64; 6];
    alpha[0] = 1;
    let a1 = basis_curve(&tri, 0).unwrap();
    let slice = enumerate_vertices(&tri, &alpha, a1.total_weight() + 2).unwrap();
    assert!(slice.index_of(&a1).is_some());
    for v in slice.vertices() {
        assert_eq!(homology_class(v), alpha);
    }
    // dual handles meet once, others are disjoint
    let b1 = basis_curve(&tri, 1).unwrap();
    let a3 = basis_curve(&tri, 4).unwrap();
    assert_eq!(geometric_intersection(&tri, &a1, &b1).unwrap(), 1);
    assert_eq!(geometric_intersection(&tri, &a1, &a3).unwrap(), 0);
    // identity chain is the annulus at any genus
    let chain = curvecx::homology::bounding_chain(&tri, &a1, &a1).unwrap();
    assert!(chain.is_simple());
    let hi = chain.level_chi(1);
    let lo = chain.level_chi(0);
    assert_eq!(hi.chi, 0);
    assert_eq!(lo.chi + hi.chi, 2 - 2 * tri.genus() as i64);
}
