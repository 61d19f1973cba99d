use brauer_core::fixtures;
use brauer_core::oracle::{PathOracle, PathPresentation};
use brauer_core::rad3::verify_all;
use brauer_core::structure::{check_associativity_sampled, check_symmetric};
use brauer_core::{Algebra, Execution};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    if Execution::Parallel.is_parallel() {
        m.push(("parallel", Execution::Parallel));
    }
    m
}

fn oracle(c: &mut Criterion) {
    let alg = Algebra::new(&fixtures::example2());
    let mut g = c.benchmark_group("oracle_example2");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let o = PathOracle::new(PathPresentation::of_quiver(alg.quiver()), exec).unwrap();
                o.check_normal_forms(&alg, exec).mismatches.len()
            })
        });
    }
    g.finish();
}

fn symmetry(c: &mut Criterion) {
    let alg = Algebra::new(&fixtures::example1());
    let mut g = c.benchmark_group("symmetric_example1");
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| check_symmetric(&alg, exec).passed())
        });
    }
    g.finish();
}

fn associativity(c: &mut Criterion) {
    let alg = Algebra::new(&fixtures::example2());
    let mut g = c.benchmark_group("associativity_10k");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let mut rng = ChaCha8Rng::seed_from_u64(3);
                check_associativity_sampled(&alg, 10_000, &mut rng, exec)
                    .failure
                    .is_none()
            })
        });
    }
    g.finish();
}

fn rad3_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("rad3_sweep_n3_e4");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| verify_all(3, 4, exec).failures)
        });
    }
    g.finish();
}

criterion_group!(benches, oracle, symmetry, associativity, rad3_sweep);
criterion_main!(benches);
