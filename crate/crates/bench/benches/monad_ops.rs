use criterion::{criterion_group, criterion_main, Criterion};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use altdet_core::{
    alt_mult, check_dist_law, check_monad_laws, composite_mult_via_pipeline, enumerate_alt,
    AltMonad, CheckConfig, FinitePoset, Powerset, SetMonad,
};

fn bench_multiplications(c: &mut Criterion) {
    // a fixed batch of second-layer elements over two states
    let layer2 = enumerate_alt(2).unwrap().len();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let elems: Vec<_> = (0..32).map(|_| AltMonad.sample(layer2, &mut rng)).collect();

    c.bench_function("alt-mult/direct-n2", |b| {
        b.iter(|| {
            for e in &elems {
                alt_mult(2, e).unwrap();
            }
        })
    });
    c.bench_function("alt-mult/pipeline-n2", |b| {
        b.iter(|| {
            for e in &elems {
                composite_mult_via_pipeline(2, e).unwrap();
            }
        })
    });
}

fn bench_law_checks(c: &mut Criterion) {
    let cfg = CheckConfig::default();
    c.bench_function("laws/powerset-n2", |b| {
        b.iter(|| check_monad_laws(&Powerset, 2, &cfg).unwrap())
    });
    let diamond = FinitePoset::diamond();
    c.bench_function("laws/distlaw-diamond", |b| {
        b.iter(|| check_dist_law("diamond", &diamond, &cfg).unwrap())
    });
}

criterion_group!(benches, bench_multiplications, bench_law_checks);
criterion_main!(benches);
