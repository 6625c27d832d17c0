//! Compares the rayon-parallel code paths against a single-thread pool on
//! the heavy kernels: validation (boundary products plus ranks) and the
//! exact LP seminorm. Build with `--no-default-features` to bench the
//! sequential fallback instead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use svlab_core::{
    auto_cocycle, build_cyclic_cover, build_polygon_surface, class_norm, transfer,
};

fn with_threads<T>(threads: Option<usize>, f: impl FnOnce() -> T + Send, _tag: &str) -> T
where
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            builder = builder.num_threads(n);
        }
        builder.build().expect("thread pool").install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

fn bench_validate(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate_genus_6");
    for (tag, threads) in [("one_thread", Some(1)), ("default_pool", None)] {
        group.bench_with_input(BenchmarkId::from_parameter(tag), &threads, |b, &threads| {
            b.iter(|| {
                with_threads(
                    threads,
                    || {
                        let cx = build_polygon_surface(6).expect("surface");
                        cx.validate().expect("valid")
                    },
                    tag,
                )
            })
        });
    }
    group.finish();
}

fn bench_class_norm(c: &mut Criterion) {
    // A 4-sheet cover of the genus-2 surface: large enough that the LP
    // tableau work dominates, small enough for steady iteration times.
    let base = build_polygon_surface(2).expect("surface");
    let cm = build_cyclic_cover(&base, &auto_cocycle(&base, 4).expect("cocycle")).expect("cover");
    let z = transfer(&cm, &base.fundamental_cycle().expect("cycle")).expect("transfer");
    let mut group = c.benchmark_group("class_norm_genus2_cover4");
    group.sample_size(10);
    for (tag, threads) in [("one_thread", Some(1)), ("default_pool", None)] {
        group.bench_with_input(BenchmarkId::from_parameter(tag), &threads, |b, &threads| {
            b.iter(|| {
                with_threads(
                    threads,
                    || class_norm(cm.total(), &z).expect("certificate"),
                    tag,
                )
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_validate, bench_class_norm);
criterion_main!(benches);
