//! Breadth-first distances checked against an independent oracle:
//! all-pairs shortest paths by boolean adjacency-matrix powering.

use curvecx::complex::{enumerate_vertices, ComplexSlice, Distance};
use curvecx::intersect::geometric_intersection;
use curvecx::surface::Triangulation;

/// Reachability powers: R_0 = I, R_{k+1} = R_k | R_k·A. The distance is
/// the first power at which a pair becomes reachable.
fn matrix_power_distances(adj: &[Vec<bool>]) -> Vec<Vec<Option<u64>>> {
    let n = adj.len();
    let mut dist: Vec<Vec<Option<u64>>> = vec![vec![None; n]; n];
    let mut reach: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for (i, d) in dist.iter_mut().enumerate() {
        d[i] = Some(0);
    }
    for k in 1..=n as u64 {
        let mut next = reach.clone();
        for i in 0..n {
            for j in 0..n {
                if !next[i][j] {
                    let step = (0..n).any(|m| reach[i][m] && adj[m][j]);
                    if step {
                        next[i][j] = true;
                        if dist[i][j].is_none() {
                            dist[i][j] = Some(k);
                        }
                    }
                }
            }
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    dist
}

fn adjacency(slice: &ComplexSlice<'_>) -> Vec<Vec<bool>> {
    let tri = slice.tri();
    let n = slice.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let x =
                    geometric_intersection(tri, &slice.vertices()[i], &slice.vertices()[j])
                        .unwrap();
                adj[i][j] = x == 0;
            }
        }
    }
    adj
}

fn check_slice(bound: u64) {
    let tri = Triangulation::standard(2).unwrap();
    let slice = enumerate_vertices(&tri, &[1, 0, 0, 0], bound).unwrap();
    let adj = adjacency(&slice);
    // the adjacency relation is symmetric and irreflexive
    for i in 0..slice.len() {
        assert!(!adj[i][i]);
        for j in 0..slice.len() {
            assert_eq!(adj[i][j], adj[j][i]);
        }
    }
    let oracle = matrix_power_distances(&adj);
    for i in 0..slice.len() {
        let bfs = slice.distances_from(i);
        for j in 0..slice.len() {
            assert_eq!(bfs[j], oracle[i][j], "bound {bound}, pair ({i},{j})");
        }
    }
    // triangle inequality on every defined triple
    for i in 0..slice.len() {
        for j in 0..slice.len() {
            for k in 0..slice.len() {
                if let (Some(a), Some(b), Some(c)) = (oracle[i][j], oracle[j][k], oracle[i][k]) {
                    assert!(c <= a + b);
                }
            }
        }
    }
}

#[test]
fn bfs_matches_matrix_powering_bound_6() {
    check_slice(6);
}

#[test]
fn bfs_matches_matrix_powering_bound_9() {
    check_slice(9);
}

#[test]
fn bfs_matches_matrix_powering_bound_11() {
    check_slice(11);
}

#[test]
fn witness_paths_step_through_disjoint_vertices() {
    let tri = Triangulation::standard(2).unwrap();
    let slice = enumerate_vertices(&tri, &[1, 0, 0, 0], 11).unwrap();
    for i in 0..slice.len() {
        for j in 0..slice.len() {
            if let Distance::Reached { d, path } = slice.distance(i, j) {
                assert_eq!(path.len() as u64, d + 1);
                assert_eq!(path[0], i);
                assert_eq!(*path.last().unwrap(), j);
                for w in path.windows(2) {
                    assert_eq!(
                        geometric_intersection(
                            tri_ref(&slice),
                            &slice.vertices()[w[0]],
                            &slice.vertices()[w[1]]
                        )
                        .unwrap(),
                        0
                    );
                }
            }
        }
    }
}

fn tri_ref<'t>(slice: &ComplexSlice<'t>) -> &'t Triangulation {
    slice.tri()
}

#[test]
fn distances_are_monotone_in_the_weight_bound() {
    let tri = Triangulation::standard(2).unwrap();
    let small = enumerate_vertices(&tri, &[1, 0, 0, 0], 9).unwrap();
    let large = enumerate_vertices(&tri, &[1, 0, 0, 0], 11).unwrap();
    // slices are nested
    let embed: Vec<usize> = small
        .vertices()
        .iter()
        .map(|m| large.index_of(m).expect("nested slices"))
        .collect();
    for i in 0..small.len() {
        for j in 0..small.len() {
            let ds = small.distance(i, j).reached();
            let dl = large.distance(embed[i], embed[j]).reached();
            if let Some(ds) = ds {
                let dl = dl.expect("reachable stays reachable");
                assert!(dl <= ds);
            }
        }
    }
}
