//! Sequential against data-parallel runs of the heavier kernels. With
//! `--no-default-features` both rows run the sequential fallback.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use quandle_core::constructions::{alexander, conjugation, AlexanderParam};
use quandle_core::group::FiniteGroup;
use quandle_core::knots::{count_colorings, parse_braid};
use quandle_core::par;
use quandle_core::regularity::regularity_report;

fn thread_counts() -> Vec<usize> {
    let all = std::thread::available_parallelism().map_or(1, |n| n.get());
    vec![1, all.max(4)]
}

fn colorings(c: &mut Criterion) {
    let q = conjugation(&FiniteGroup::symmetric(4)).unwrap().quandle;
    let borromean = parse_braid("s1 s2' s1 s2' s1 s2'", 3).unwrap();
    let mut g = c.benchmark_group("colorings/borromean/conj(S4)");
    for t in thread_counts() {
        g.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| {
            par::with_threads(t, || b.iter(|| count_colorings(&borromean, &q, false)))
        });
    }
    g.finish();
}

fn regularity(c: &mut Criterion) {
    let m = AlexanderParam::Matrix(vec![vec![2, 1], vec![0, 2]]);
    let q = alexander(7, 2, &m).unwrap().quandle;
    let mut g = c.benchmark_group("regularity/alexander(7,2)");
    g.sample_size(10);
    for t in thread_counts() {
        g.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| {
            par::with_threads(t, || b.iter(|| regularity_report(&q, 1_000_000, 0).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, colorings, regularity);
criterion_main!(benches);
