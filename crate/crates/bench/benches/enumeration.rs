use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use irrtools::search::{
    canonical_form, enumerate_free_trees_capped, extremal_capped, Direction, Objective, TreeClass,
};

fn free_trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_free_trees");
    group.sample_size(10);
    for n in [10usize, 14, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                enumerate_free_trees_capped(black_box(n), n)
                    .unwrap()
                    .count()
            })
        });
    }
    group.finish();
}

fn extremal_sigma(c: &mut Criterion) {
    c.bench_function("extremal_sigma_max_n12", |b| {
        b.iter(|| {
            extremal_capped(
                &TreeClass::AllTrees(black_box(12)),
                Objective::Sigma,
                Direction::Max,
                12,
            )
            .unwrap()
        })
    });
}

fn canonical(c: &mut Criterion) {
    let tree = irrtools::sequences::random_tree(200, 3);
    c.bench_function("canonical_form_n200", |b| {
        b.iter(|| canonical_form(black_box(&tree)).unwrap())
    });
}

criterion_group!(benches, free_trees, extremal_sigma, canonical);
criterion_main!(benches);
