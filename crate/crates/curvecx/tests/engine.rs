//! Cross-checks for the arrangement and intersection machinery.

use curvecx::arrangement::Arrangement;
use curvecx::basis::basis_curve;
use curvecx::homology::{homology_class, symplectic_pairing};
use curvecx::intersect::{algebraic_intersection, geometric_intersection, minimal_position};
use curvecx::normal::NormalMulticurve;
use curvecx::picture::Picture;
use curvecx::surface::Triangulation;

#[test]
fn empty_picture_cells_are_the_triangles() {
    for g in 2..=4u32 {
        let tri = Triangulation::standard(g).unwrap();
        let empty = NormalMulticurve::empty(&tri);
        let pic = Picture::single(&tri, &empty).unwrap();
        let arr = Arrangement::build(&pic);
        assert_eq!(arr.cells.len(), tri.face_count());
        assert!(arr.cells.iter().all(|c| c.len() == 3));
        assert_eq!(arr.region_count, 1);
    }
}

#[test]
fn single_curve_pictures_have_no_crossings() {
    let tri = Triangulation::standard(2).unwrap();
    for idx in 0..4 {
        let c = basis_curve(&tri, idx).unwrap();
        let pic = Picture::single(&tri, &c).unwrap();
        let arr = Arrangement::build(&pic);
        assert_eq!(arr.crossing_count(), 0);
    }
}

#[test]
fn basis_classes_are_units() {
    let tri = Triangulation::standard(2).unwrap();
    for (idx, unit) in [
        (0usize, vec![1i64, 0, 0, 0]),
        (1, vec![0, 1, 0, 0]),
        (2, vec![0, 0, 1, 0]),
        (3, vec![0, 0, 0, 1]),
    ] {
        let c = basis_curve(&tri, idx).unwrap();
        assert_eq!(homology_class(&c), unit, "basis curve {idx}");
    }
}

#[test]
fn dual_basis_pair_meets_once() {
    let tri = Triangulation::standard(2).unwrap();
    let a1 = basis_curve(&tri, 0).unwrap();
    let b1 = basis_curve(&tri, 1).unwrap();
    assert_eq!(algebraic_intersection(&tri, &a1, &b1).unwrap(), 1);
    assert_eq!(algebraic_intersection(&tri, &b1, &a1).unwrap(), -1);
    assert_eq!(geometric_intersection(&tri, &a1, &b1).unwrap(), 1);
    assert_eq!(geometric_intersection(&tri, &b1, &a1).unwrap(), 1);
}

#[test]
fn self_intersection_vanishes() {
    let tri = Triangulation::standard(2).unwrap();
    for idx in 0..4 {
        let c = basis_curve(&tri, idx).unwrap();
        assert_eq!(geometric_intersection(&tri, &c, &c).unwrap(), 0, "curve {idx}");
        assert_eq!(algebraic_intersection(&tri, &c, &c).unwrap(), 0, "curve {idx}");
    }
}

#[test]
fn disjoint_handles_do_not_meet() {
    let tri = Triangulation::standard(2).unwrap();
    let a1 = basis_curve(&tri, 0).unwrap();
    let b2 = basis_curve(&tri, 3).unwrap();
    assert_eq!(geometric_intersection(&tri, &a1, &b2).unwrap(), 0);
    assert_eq!(algebraic_intersection(&tri, &a1, &b2).unwrap(), 0);
}

#[test]
fn algebraic_equals_class_pairing_on_basis_pairs() {
    let tri = Triangulation::standard(3).unwrap();
    let curves: Vec<_> = (0..6).map(|i| basis_curve(&tri, i).unwrap()).collect();
    for x in &curves {
        for y in &curves {
            let direct = algebraic_intersection(&tri, x, y).unwrap();
            let via_classes = symplectic_pairing(&homology_class(x), &homology_class(y));
            assert_eq!(direct, via_classes);
        }
    }
}

#[test]
fn reduction_leaves_no_bigon() {
    let tri = Triangulation::standard(2).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let x = basis_curve(&tri, i).unwrap();
            let y = basis_curve(&tri, j).unwrap();
            let mp = minimal_position(&tri, &x, &y).unwrap();
            assert!(!mp.has_bigon(), "pair ({i},{j})");
        }
    }
}
