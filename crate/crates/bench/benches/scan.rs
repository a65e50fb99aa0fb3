use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use invavoid_bench::{periodic_0001, word, SCAN_LENGTHS};
use invavoid_core::{find_instance, find_overlap, prove_unavoidable, Alphabet, InvolutionKind, Pattern, WordKind};

fn bench_find_instance(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_instance");
    group.sample_size(10);
    let cases = [
        ("w/xxGx/m", WordKind::W, "xxg(x)x", InvolutionKind::Morphic),
        ("w/xxGx/a", WordKind::W, "xxg(x)x", InvolutionKind::Antimorphic),
        ("0001/GxxG/a", periodic_0001(), "g(x)xxg(x)", InvolutionKind::Antimorphic),
    ];
    for (label, kind, pattern, involution) in cases {
        let pattern = Pattern::parse(pattern).unwrap();
        for len in SCAN_LENGTHS {
            let letters = word(&kind, len);
            group.bench_with_input(BenchmarkId::new(label, len), &letters, |b, letters| {
                b.iter(|| find_instance(black_box(letters), Alphabet::BINARY, &pattern, involution).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_find_overlap(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_overlap");
    group.sample_size(10);
    for len in [1 << 12, 1 << 14, 1 << 15] {
        let letters = word(&WordKind::ThueMorse, len);
        group.bench_with_input(BenchmarkId::from_parameter(len), &letters, |b, letters| {
            b.iter(|| find_overlap(black_box(letters)))
        });
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("prove_unavoidable");
    for text in ["xxg(x)", "xg(x)x"] {
        let pattern = Pattern::parse(text).unwrap();
        group.bench_function(text, |b| {
            b.iter(|| prove_unavoidable(black_box(&pattern), Alphabet::BINARY, InvolutionKind::Morphic, 64))
        });
    }
    let pattern = Pattern::parse("xxg(x)x").unwrap();
    group.bench_function("xxg(x)x avoider 200", |b| {
        b.iter(|| prove_unavoidable(black_box(&pattern), Alphabet::BINARY, InvolutionKind::Antimorphic, 200))
    });
    group.finish();
}

criterion_group!(benches, bench_find_instance, bench_find_overlap, bench_search);
criterion_main!(benches);
