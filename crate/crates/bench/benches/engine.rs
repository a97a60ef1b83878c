use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use idealis_bench::RINGS;
use idealis_core::classify::is_weakly_one_absorbing_prime;
use idealis_core::dsl::build_ring;
use idealis_core::harness::{default_corpus, run_one, HarnessOptions, TheoremId};
use idealis_core::{classify, Caps, IdealLattice};

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    for text in RINGS {
        g.bench_with_input(BenchmarkId::from_parameter(text), text, |b, t| {
            b.iter(|| build_ring(t, &Caps::default()).unwrap())
        });
    }
    g.finish();
}

fn lattice(c: &mut Criterion) {
    let mut g = c.benchmark_group("lattice");
    for text in RINGS {
        let r = build_ring(text, &Caps::default()).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(text), &r, |b, r| {
            b.iter(|| IdealLattice::enumerate(r, &Caps::default()).unwrap())
        });
    }
    g.finish();
}

fn scans(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan");
    for text in RINGS {
        let r = build_ring(text, &Caps::default()).unwrap();
        let l = IdealLattice::enumerate(&r, &Caps::default()).unwrap();
        g.bench_with_input(BenchmarkId::new("w1ap", text), &l, |b, l| {
            b.iter(|| l.proper().filter(|(_, p)| is_weakly_one_absorbing_prime(p).unwrap().holds()).count())
        });
        g.bench_with_input(BenchmarkId::new("classify", text), &l, |b, l| {
            b.iter(|| l.proper().map(|(_, p)| classify(p).unwrap()).count())
        });
    }
    g.finish();
}

fn harness(c: &mut Criterion) {
    let corpus: Vec<_> = default_corpus().into_iter().take(60).collect();
    let mut g = c.benchmark_group("harness");
    g.sample_size(10);
    for id in [TheoremId::Tmm, TheoremId::Ttriple] {
        g.bench_function(id.to_string(), |b| b.iter(|| run_one(id, &corpus, &HarnessOptions::default()).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, construction, lattice, scans, harness);
criterion_main!(benches);
