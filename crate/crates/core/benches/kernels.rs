//! Kernel benchmarks. With the default `parallel` feature every kernel runs
//! twice: on the global rayon pool and inside a one-thread pool. Build with
//! `--no-default-features` to measure the sequential fallback.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};
#[cfg(feature = "parallel")]
use criterion::BenchmarkId;
use quiverdt::dt::{dt_invariants, dt_theta};
use quiverdt::kac::{kac_polynomials, refined_invariants};
use quiverdt::oracle::enumerate_classes;
use quiverdt::quiver::{Quiver, Stability};
use quiverdt::series::DimVector;

type Kernel = (&'static str, Box<dyn Fn() + Send + Sync>);

fn kernels() -> Vec<Kernel> {
    vec![
        ("dt_g3_bound8", Box::new(|| {
            black_box(dt_invariants(&Quiver::loops(3), 8).unwrap());
        })),
        ("kac_two_vertex_bound5", Box::new(|| {
            black_box(kac_polynomials(&Quiver::two_vertex(1, 2), 5).unwrap());
        })),
        ("refined_two_vertex_bound5", Box::new(|| {
            black_box(refined_invariants(&Quiver::two_vertex(1, 1), 5, 5).unwrap());
        })),
        ("hn_theta_two_vertex_bound4", Box::new(|| {
            black_box(dt_theta(&Quiver::two_vertex(1, 1), &Stability::from_ints(&[1, 0]), 4).unwrap());
        })),
        ("oracle_g2_dim2_p3", Box::new(|| {
            black_box(enumerate_classes(&Quiver::loops(2), &DimVector(vec![2]), 3).unwrap());
        })),
    ]
}

#[cfg(feature = "parallel")]
fn bench(c: &mut Criterion) {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    for (name, kernel) in kernels() {
        let mut group = c.benchmark_group(name);
        group.sample_size(10).measurement_time(Duration::from_secs(5));
        group.bench_function(BenchmarkId::new("rayon", rayon::current_num_threads()), |b| b.iter(&kernel));
        group.bench_function(BenchmarkId::new("single_thread", 1), |b| b.iter(|| single.install(&kernel)));
        group.finish();
    }
}

#[cfg(not(feature = "parallel"))]
fn bench(c: &mut Criterion) {
    for (name, kernel) in kernels() {
        let mut group = c.benchmark_group(name);
        group.sample_size(10).measurement_time(Duration::from_secs(5));
        group.bench_function("sequential", |b| b.iter(&kernel));
        group.finish();
    }
}

criterion_group!(benches, bench);
criterion_main!(benches);
