//! Compares the data-parallel execution path against the sequential
//! fallback on the two batch workloads that fan out over independent
//! trials: general-fiber degree sampling and the row-ideal check.
//!
//! Run with `cargo bench -p rmdeg-core` (parallel vs. sequential in one
//! binary; the parallel path needs the default `parallel` feature).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rmdeg_core::exec::ExecMode;
use rmdeg_core::{
    degree_via_general_fiber, parse_polynomial, verify_row_ideal_identity, Budget, FieldSpec,
    PolyRing, RationalMapSpec,
};

fn plane_map(forms: &[&str]) -> RationalMapSpec {
    let ring = PolyRing::from_names(FieldSpec::prime(32003).unwrap(), &["x", "y", "z"]).unwrap();
    let forms = forms
        .iter()
        .map(|t| parse_polynomial(&ring, t).unwrap())
        .collect();
    RationalMapSpec::new(&ring, None, forms, &Budget::default()).unwrap()
}

fn modes() -> Vec<(&'static str, ExecMode)> {
    let mut out = vec![("sequential", ExecMode::Sequential)];
    if cfg!(feature = "parallel") {
        out.push(("parallel", ExecMode::Parallel));
    }
    out
}

fn bench_fiber_trials(c: &mut Criterion) {
    let cases = [
        ("net-of-conics", plane_map(&["x^2", "y*z", "z^2"])),
        ("coordinate-squares", plane_map(&["x^2", "y^2", "z^2"])),
    ];
    let budget = Budget::default();
    let mut group = c.benchmark_group("fiber-trials");
    group.sample_size(10);
    for (case, spec) in &cases {
        for (label, mode) in modes() {
            group.bench_with_input(
                BenchmarkId::new(*case, label),
                &mode,
                |b, &mode| {
                    b.iter(|| {
                        degree_via_general_fiber(spec, 8, 42, mode, &budget).unwrap()
                    })
                },
            );
        }
    }
    group.finish();
}

fn bench_row_ideal(c: &mut Criterion) {
    let spec = plane_map(&["x^2*y", "x*z^2", "y^2*z"]);
    let budget = Budget::default();
    let mut group = c.benchmark_group("row-ideal");
    group.sample_size(10);
    // The row-ideal check batches its trials through the executor picked
    // by the build, so compare across `--features`/`--no-default-features`
    // runs; the label records which configuration produced the numbers.
    let label = if cfg!(feature = "parallel") {
        "parallel-build"
    } else {
        "sequential-build"
    };
    group.bench_function(label, |b| {
        b.iter(|| verify_row_ideal_identity(&spec, 16, 7, &budget).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_fiber_trials, bench_row_ideal);
criterion_main!(benches);
