use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use ratiosel_bench::{exact_instance, float_instance};
use ratiosel_core::{
    brute_force_min, dinkelbach_min, greedy_select, reduced_search_min, DEFAULT_ENUMERATION_CAP,
};

fn greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy_float_n100");
    group.sample_size(10);
    for len in [10_000, 100_000, 1_000_000] {
        let inst = float_instance(0, len);
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(len), &inst, |b, inst| {
            b.iter(|| greedy_select(black_box(inst), 100).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("greedy_exact_n100");
    group.sample_size(10);
    for len in [10_000, 100_000] {
        let inst = exact_instance(0, len);
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(len), &inst, |b, inst| {
            b.iter(|| greedy_select(black_box(inst), 100).unwrap())
        });
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let inst = exact_instance(0, 30);
    let (greedy, _) = greedy_select(&inst, 5).unwrap();
    let mut group = c.benchmark_group("oracles_N30_n5");
    group.sample_size(10);
    group.bench_function("brute", |b| {
        b.iter(|| brute_force_min(black_box(&inst), 5, DEFAULT_ENUMERATION_CAP).unwrap())
    });
    group.bench_function("reduced", |b| {
        b.iter(|| reduced_search_min(black_box(&inst), 5, &greedy.indices, DEFAULT_ENUMERATION_CAP).unwrap())
    });
    group.bench_function("dinkelbach", |b| {
        b.iter(|| dinkelbach_min(black_box(&inst), 5).unwrap())
    });
    group.finish();
}

criterion_group!(benches, greedy, oracles);
criterion_main!(benches);
