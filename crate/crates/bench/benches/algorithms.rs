use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use listdist::counting::{union_count_paper, union_count_recurrence, union_count_subsets, FunctionFamily};
use listdist::lists::{check_k, CanonicalAssignments, ConstructiveLabeler, DirectOptions, ListAssignment};
use listdist::{automorphisms, enumerate_labelings, generate_family, min_labels, Family, Predicate};

const CAP: usize = listdist::DEFAULT_GROUP_CAP;

fn group_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphisms");
    for (family, n) in [(Family::Friendship, 5), (Family::Book, 6), (Family::Cycle, 12)] {
        let g = generate_family(family, &[n]).unwrap();
        group.bench_with_input(BenchmarkId::new(family.as_str(), n), &g, |b, g| {
            b.iter(|| automorphisms(black_box(g), CAP).unwrap())
        });
    }
    group.finish();
}

fn labelings(c: &mut Criterion) {
    let f6 = generate_family(Family::Friendship, &[6]).unwrap();
    let a6 = automorphisms(&f6, CAP).unwrap();
    c.bench_function("min_labels/friendship_6", |b| {
        b.iter(|| min_labels(Predicate::Distinguishing, black_box(&f6), &a6).unwrap())
    });
    let c5 = generate_family(Family::Cycle, &[5]).unwrap();
    let a5 = automorphisms(&c5, CAP).unwrap();
    c.bench_function("enumerate_labelings/cycle_5_m5", |b| {
        b.iter(|| enumerate_labelings(Predicate::Distinguishing, black_box(&c5), &a5, 5, 1 << 20).unwrap())
    });
}

fn counting(c: &mut Criterion) {
    let values: [&[u32]; 8] = [
        &[1, 2, 3, 4],
        &[2, 1, 4, 3],
        &[3, 3, 1, 2],
        &[4, 2, 2, 1],
        &[1, 1, 3, 5],
        &[5, 4, 3, 2],
        &[2, 5, 1, 4],
        &[3, 1, 5, 5],
    ];
    let fam = FunctionFamily::from_values(&values, 5, 3).unwrap();
    let mut group = c.benchmark_group("union_count_t8");
    group.bench_function("paper", |b| b.iter(|| union_count_paper(black_box(&fam), 20).unwrap()));
    group.bench_function("subsets", |b| {
        b.iter(|| union_count_subsets(black_box(&fam), 20).unwrap())
    });
    group.bench_function("recurrence", |b| {
        b.iter(|| union_count_recurrence(black_box(&fam), 20).unwrap())
    });
    group.finish();
}

fn list_assignments(c: &mut Criterion) {
    c.bench_function("canonical_assignments/n4_k2_m8", |b| {
        b.iter(|| CanonicalAssignments::new(4, 2, black_box(8)).count())
    });
    let p4 = generate_family(Family::Path, &[4]).unwrap();
    let a = automorphisms(&p4, CAP).unwrap();
    c.bench_function("check_k/path_4_k2", |b| {
        b.iter(|| {
            check_k(
                Predicate::Distinguishing,
                black_box(&p4),
                &a,
                2,
                &DirectOptions::default(),
            )
            .unwrap()
        })
    });
    let labeler = ConstructiveLabeler::friendship(6).unwrap();
    let lists = ListAssignment::uniform(13, labeler.list_size() as u32);
    c.bench_function("constructive/friendship_6", |b| {
        b.iter(|| labeler.label(black_box(&lists)).unwrap())
    });
}

criterion_group!(benches, group_search, labelings, counting, list_assignments);
criterion_main!(benches);
