use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use pathbetti_core::{
    betti_closed_cycle, betti_hochster, build_path_complex, reduced_homology_dims, FieldSpec,
    PathFamilySpec,
};

fn oracle_vs_closed(c: &mut Criterion) {
    let mut group = c.benchmark_group("cycle_betti");
    group.sample_size(10);
    for (n, t) in [(8, 2), (10, 3), (12, 3)] {
        let spec = PathFamilySpec::cycle(n, t).unwrap();
        let cx = build_path_complex(spec);
        let id = format!("n{n}_t{t}");
        group.bench_with_input(BenchmarkId::new("oracle", &id), &cx, |b, cx| {
            b.iter(|| betti_hochster(black_box(cx), FieldSpec::RATIONALS).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed", &id), &spec, |b, &spec| {
            b.iter(|| betti_closed_cycle(black_box(spec)).unwrap())
        });
    }
    group.finish();
}

fn complement_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("complement_homology");
    let spec = PathFamilySpec::cycle(12, 2).unwrap();
    let cx = build_path_complex(spec);
    let complement = cx.complement(cx.ambient()).unwrap();
    for field in [FieldSpec::RATIONALS, FieldSpec::GF2, FieldSpec::GF32003] {
        group.bench_function(field.to_string(), |b| {
            b.iter(|| reduced_homology_dims(black_box(&complement), field))
        });
    }
    group.finish();
}

criterion_group!(benches, oracle_vs_closed, complement_homology);
criterion_main!(benches);
