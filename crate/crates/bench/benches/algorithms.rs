use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lexseg::oracle::{k_polynomial_staircase, koszul_betti, taylor_betti, DEFAULT_CAP};
use lexseg::{build_resolution, classify, quotient_order, verify_resolution};
use lexseg_bench::{all_segments, ladder};

fn bench_classify(c: &mut Criterion) {
    let segs = all_segments(4, 3);
    c.bench_function("classify/all n4d3", |b| {
        b.iter(|| segs.iter().map(|s| classify(black_box(s)).depth.value).sum::<usize>())
    });
}

fn bench_oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    for (name, seg) in ladder() {
        let gens = seg.generators().to_vec();
        let n = seg.n();
        if gens.len() <= 12 {
            g.bench_function(format!("taylor/{name}"), |b| b.iter(|| taylor_betti(black_box(&gens), n, DEFAULT_CAP)));
        }
        g.bench_function(format!("koszul/{name}"), |b| b.iter(|| koszul_betti(black_box(&gens), n)));
        g.bench_function(format!("k-poly/{name}"), |b| b.iter(|| k_polynomial_staircase(black_box(&gens), n)));
    }
    g.finish();
}

fn bench_resolution(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolution");
    for (name, seg) in ladder() {
        if let Ok(res) = build_resolution(&seg) {
            g.bench_function(format!("build/{name}"), |b| b.iter(|| build_resolution(black_box(&seg))));
            g.bench_function(format!("verify/{name}"), |b| {
                b.iter(|| verify_resolution(black_box(&res), seg.generators(), None))
            });
        }
        g.bench_function(format!("order/{name}"), |b| b.iter(|| quotient_order(black_box(&seg))));
    }
    g.finish();
}

criterion_group!(benches, bench_classify, bench_oracles, bench_resolution);
criterion_main!(benches);
