//! Data-parallel batch kernels against their sequential twins.
//!
//! Requires the `parallel` feature (enabled by default):
//!   cargo bench -p curvecx

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use curvecx::batch::{pair_intersections, pair_intersections_seq};
use curvecx::normal::NormalMulticurve;
use curvecx::sample::{random_multicurve, rng_from_seed};
use curvecx::surface::Triangulation;

fn corpus(tri: &Triangulation, n: usize, max_weight: u64) -> Vec<NormalMulticurve> {
    let mut rng = rng_from_seed(0xBE7C);
    (0..n).map(|_| random_multicurve(tri, max_weight, &mut rng).unwrap()).collect()
}

fn bench_pair_intersections(c: &mut Criterion) {
    let tri = Triangulation::standard(2).unwrap();
    let mut group = c.benchmark_group("pair_intersections");
    group.sample_size(20);
    for &(n, w) in &[(32usize, 8u64), (64, 12)] {
        let curves = corpus(&tri, n, w);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        group.bench_with_input(
            BenchmarkId::new("seq", format!("{n}x{w}")),
            &pairs,
            |b, pairs| b.iter(|| pair_intersections_seq(&tri, &curves, pairs).unwrap()),
        );
        group.bench_with_input(
            BenchmarkId::new("par", format!("{n}x{w}")),
            &pairs,
            |b, pairs| b.iter(|| pair_intersections(&tri, &curves, pairs).unwrap()),
        );
    }
    group.finish();
}

fn bench_survey(c: &mut Criterion) {
    let tri = Triangulation::standard(2).unwrap();
    let slice = curvecx::complex::enumerate_vertices(&tri, &[1, 0, 0, 0], 11).unwrap();
    let mut group = c.benchmark_group("minimal_genus_search");
    group.sample_size(10);
    // the search fans out over first-step branches (parallel when enabled)
    group.bench_function("all_pairs_len2_bound11", |b| {
        b.iter(|| {
            let mut total = 0u64;
            for u in 0..slice.len() {
                for v in (u + 1)..slice.len() {
                    if let Some(g) = curvecx::builder::minimal_genus_search(&slice, u, v, 2).genus()
                    {
                        total += g;
                    }
                }
            }
            total
        })
    });
    group.finish();
}

criterion_group!(benches, bench_pair_intersections, bench_survey);
criterion_main!(benches);
