use std::sync::Arc;

use algebroid::algebra::Algebra;
use algebroid::fixtures;
use algebroid::tannaka::{reconstruct, Presentation, ReconstructOptions};
use algebroid::{ExecMode, Field};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn presentations() -> Vec<(&'static str, Presentation)> {
    let f = Field::Prime(7);
    vec![
        ("c2", fixtures::c2(f)),
        ("swap", fixtures::swap(f).expect("fixture builds")),
        (
            "trivial-k[x]/x^3",
            fixtures::trivial(&Arc::new(Algebra::truncated_poly(f, 3))),
        ),
    ]
}

fn bench_reconstruct(c: &mut Criterion) {
    let mut group = c.benchmark_group("reconstruct");
    group.sample_size(10);
    for (name, p) in presentations() {
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            let opts = ReconstructOptions {
                mode,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(format!("{mode:?}"), name), &p, |b, p| {
                b.iter(|| reconstruct(p, &opts).expect("fixture reconstructs"))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_reconstruct);
criterion_main!(benches);
