use criterion::{criterion_group, criterion_main, Criterion};
use spflag_bench::seeded_matrix;
use std::hint::black_box;

use spflag::indices::enumerate_sp;
use spflag::oracle::{gp_points, DEFAULT_BUDGET};
use spflag::pluecker::{pluecker, sp_relations};
use spflag::scalar::Field;
use spflag::schubert::{schubert_member, Filtration};

fn bench_relations(c: &mut Criterion) {
    c.bench_function("sp_relations_n4_d4", |b| {
        b.iter(|| black_box(sp_relations(4, 4).unwrap().forms.len()))
    });
}

fn bench_rank(c: &mut Criterion) {
    let m = seeded_matrix(20, 20, 1);
    c.bench_function("rank_20x20_f1009", |b| b.iter(|| black_box(m.rank())));
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("gp_points_q2_n3_d3", |b| {
        b.iter(|| black_box(gp_points(2, 3, 3, DEFAULT_BUDGET).unwrap().len()))
    });
}

fn bench_membership_sweep(c: &mut Criterion) {
    let points = gp_points(2, 2, 2, DEFAULT_BUDGET).unwrap();
    let fil = Filtration::new(2, Field::fp(2));
    let cosets = enumerate_sp(2, 2).unwrap();
    c.bench_function("schubert_membership_sweep_q2_n2", |b| {
        b.iter(|| {
            let mut hits = 0usize;
            for p in &points {
                for w in &cosets {
                    if schubert_member(p, w, &fil).unwrap() {
                        hits += 1;
                    }
                }
            }
            black_box(hits)
        })
    });
}

fn bench_coordinates(c: &mut Criterion) {
    let points = gp_points(3, 2, 2, DEFAULT_BUDGET).unwrap();
    c.bench_function("pluecker_vectors_q3_n2", |b| {
        b.iter(|| {
            let mut nz = 0usize;
            for p in &points {
                nz += pluecker(p).unwrap().support().count();
            }
            black_box(nz)
        })
    });
}

criterion_group!(
    benches,
    bench_relations,
    bench_rank,
    bench_enumeration,
    bench_membership_sweep,
    bench_coordinates
);
criterion_main!(benches);
