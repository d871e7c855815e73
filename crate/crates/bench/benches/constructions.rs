use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use amub_core::algebra::Field;
use amub_core::elliptic::{Curve, CurveGroup};
use amub_core::ConstructionSpec;

fn field_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("field");
    for (p, m) in [(2u64, 8u32), (3, 5), (251, 1)] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{p}^{m}")), &(p, m), |b, &(p, m)| {
            b.iter(|| Field::new(black_box(p), black_box(m)).unwrap())
        });
    }
    g.finish();
}

fn curve_group(c: &mut Criterion) {
    c.bench_function("curve_group_p101", |b| {
        b.iter(|| CurveGroup::new(Curve::new(black_box(101), 2, 3).unwrap()))
    });
}

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    g.sample_size(20);
    let specs = [
        ConstructionSpec::MubPp { q: 16 },
        ConstructionSpec::MubPp { q: 13 },
        ConstructionSpec::AmubGauss { q: 13 },
        ConstructionSpec::AmubJacobi { q: 13 },
        ConstructionSpec::AmubEc { p: 13, a: 1, b: 1, m: 2 },
    ];
    for spec in specs {
        let label = serde_label(&spec);
        g.bench_function(label, |b| b.iter(|| black_box(&spec).build().unwrap()));
    }
    g.finish();
}

fn serde_label(spec: &ConstructionSpec) -> String {
    match spec {
        ConstructionSpec::MubPp { q } | ConstructionSpec::AmubGauss { q } | ConstructionSpec::AmubJacobi { q } => {
            format!("{}_q{q}", spec.id())
        }
        ConstructionSpec::AmubEc { p, a, b, m } => format!("{}_{p}_{a}_{b}_{m}", spec.id()),
        other => other.id().to_string(),
    }
}

criterion_group!(benches, field_tables, curve_group, build);
criterion_main!(benches);
