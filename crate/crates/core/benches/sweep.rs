use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use clique_spectra::clique::enumerate_cliques;
use clique_spectra::construct::{flower, km_join_turan};
use clique_spectra::extremal::{sweep, Objective, SweepConfig};
use clique_spectra::spectral::{power_iteration, IterationOptions};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep-n6-mu3");
    group.sample_size(10);
    for (label, jobs) in [("sequential", Some(1)), ("parallel", None)] {
        let config = SweepConfig {
            jobs,
            ..SweepConfig::new(6, 3, Objective::Mu { k: 3 })
        };
        group.bench_with_input(BenchmarkId::from_parameter(label), &config, |b, config| {
            b.iter(|| sweep(black_box(config)).unwrap())
        });
    }
    group.finish();
}

fn iteration(c: &mut Criterion) {
    let opts = IterationOptions::default();
    let mut group = c.benchmark_group("power-iteration");
    for (label, g, r) in [
        ("flower-3-3-6", flower(3, 3, 6).unwrap(), 3),
        ("k1-join-t2-20", km_join_turan(21, 1, 3).unwrap(), 3),
        ("k2-join-t3-16", km_join_turan(18, 2, 5).unwrap(), 5),
    ] {
        let cliques = enumerate_cliques(&g, r).unwrap();
        group.bench_function(label, |b| b.iter(|| power_iteration(black_box(&cliques), &opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, sweeps, iteration);
criterion_main!(benches);
