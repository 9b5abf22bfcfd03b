use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use orlov_core::{
    algebra_llts, orlov_spectrum, Algebra, AlgebraDescriptor, ExtensionClosure, IndecSet,
    SpectrumOptions, TorsionSpec,
};
use std::hint::black_box;

fn bench_generation_time(c: &mut Criterion) {
    let mut group = c.benchmark_group("generation_time");
    for n in [4usize, 6, 8, 10] {
        let alg = Algebra::linear(n).unwrap();
        let closure = ExtensionClosure::new(&alg).unwrap();
        let simples = IndecSet::from_module(&alg, &alg.simples_module()).unwrap();
        group.bench_with_input(BenchmarkId::new("simples", n), &simples, |b, &t| {
            b.iter(|| closure.generation_time(black_box(t)))
        });
    }
    group.finish();
}

fn bench_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("orlov_spectrum");
    group.sample_size(10);
    for n in [3usize, 4, 5] {
        let alg = Algebra::linear(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &alg, |b, alg| {
            b.iter(|| orlov_spectrum(alg, SpectrumOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn bench_layers(c: &mut Criterion) {
    let alg = Algebra::new(AlgebraDescriptor::cyclic(4, 1, 20)).unwrap();
    let specs = TorsionSpec::all_subsets(&alg);
    c.bench_function("llts_all_subsets_cyclic4", |b| {
        b.iter(|| specs.iter().map(|s| algebra_llts(&alg, s)).sum::<usize>())
    });
}

criterion_group!(benches, bench_generation_time, bench_spectrum, bench_layers);
criterion_main!(benches);
