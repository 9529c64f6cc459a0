use std::collections::BTreeSet;
use std::ops::ControlFlow;

use listdist::labelset::LabelSet;
use listdist::lists::{
    book_list_size, canonical_form, check_k, friendship_list_size, hunt, list_number_characterization,
    list_number_direct, select_satisfying, select_satisfying_brute_force, CanonicalAssignments,
    CharacterizationOptions, ConstructiveLabeler, DirectOptions, HuntOptions, ListAssignment, DEFAULT_PRODUCT_CAP,
};
use listdist::small_graphs::small_graphs;
use listdist::{automorphisms, family::paw, generate_family, min_labels, Family, Graph, Predicate, DEFAULT_GROUP_CAP};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn desk_suite() -> Vec<Graph> {
    vec![
        generate_family(Family::Complete, &[2]).unwrap(),
        generate_family(Family::Path, &[3]).unwrap(),
        generate_family(Family::Path, &[4]).unwrap(),
        generate_family(Family::Complete, &[3]).unwrap(),
        generate_family(Family::Star, &[3]).unwrap(),
        generate_family(Family::Cycle, &[4]).unwrap(),
        generate_family(Family::Cycle, &[5]).unwrap(),
        generate_family(Family::Complete, &[4]).unwrap(),
        paw(),
    ]
}

#[test]
fn both_list_number_routes_agree_on_desk_suite() {
    for g in desk_suite() {
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        for pred in [Predicate::Distinguishing, Predicate::Proper] {
            let (direct, _) = list_number_direct(pred, &g, &a, g.order(), &DirectOptions::default()).unwrap();
            let by_char = list_number_characterization(pred, &g, &a, &CharacterizationOptions::default()).unwrap();
            assert_eq!(direct, by_char.value, "{pred} on {:?}", g.name());
            let base = min_labels(pred, &g, &a).unwrap().count;
            assert!(base <= direct);
            assert_eq!(by_char.base, base);
        }
    }
}

#[test]
fn identical_lists_reduce_to_ordinary_labeling() {
    for g in desk_suite() {
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        for pred in Predicate::ALL {
            let d = min_labels(pred, &g, &a).unwrap().count as u32;
            let lists = ListAssignment::uniform(g.order(), d);
            assert!(select_satisfying(pred, &g, &a, &lists, DEFAULT_PRODUCT_CAP)
                .unwrap()
                .is_some());
        }
    }
}

#[test]
fn shared_label_restriction_loses_nothing() {
    let full = DirectOptions {
        shared_only: false,
        ..DirectOptions::default()
    };
    for n in 2..=4 {
        for g in small_graphs(n, false).unwrap() {
            let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
            for pred in Predicate::ALL {
                for k in 1..=3 {
                    if n == 4 && k == 3 {
                        continue;
                    }
                    let fast = check_k(pred, &g, &a, k, &DirectOptions::default()).unwrap();
                    let slow = check_k(pred, &g, &a, k, &full).unwrap();
                    assert_eq!(fast.passed, slow.passed, "{pred} k={k} {:?}", g.edges());
                }
            }
        }
    }
}

#[test]
fn renaming_orbits_share_their_verdict() {
    // Every size-2 assignment on P_3 and the paw over {1..4}, each checked
    // directly and through its canonical representative.
    let subsets = LabelSet::subsets_of_size(4, 2);
    for g in [
        generate_family(Family::Path, &[3]).unwrap(),
        generate_family(Family::Star, &[2]).unwrap(),
    ] {
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        let mut representatives = BTreeSet::new();
        for x in &subsets {
            for y in &subsets {
                for z in &subsets {
                    let l = ListAssignment::new(vec![*x, *y, *z]).unwrap();
                    let c = canonical_form(&l);
                    for pred in Predicate::ALL {
                        let here = select_satisfying(pred, &g, &a, &l, DEFAULT_PRODUCT_CAP)
                            .unwrap()
                            .is_some();
                        let there = select_satisfying(pred, &g, &a, &c.assignment, DEFAULT_PRODUCT_CAP)
                            .unwrap()
                            .is_some();
                        assert_eq!(here, there);
                    }
                    representatives.insert(c.assignment);
                }
            }
        }
        let mut enumerated = BTreeSet::new();
        let _ = CanonicalAssignments::new(3, 2, 4).try_for_each(|r| {
            enumerated.insert(r.to_assignment());
            ControlFlow::<()>::Continue(())
        });
        assert_eq!(representatives, enumerated);
    }
}

#[test]
fn pruned_and_brute_force_selection_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in desk_suite().into_iter().take(7) {
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        for _ in 0..60 {
            let lists: Vec<LabelSet> = (0..g.order())
                .map(|_| LabelSet::from_labels(sample(&mut rng, 5, 2).iter().map(|x| x as u32 + 1)).unwrap())
                .collect();
            let lists = ListAssignment::new(lists).unwrap();
            for pred in Predicate::ALL {
                let fast = select_satisfying(pred, &g, &a, &lists, DEFAULT_PRODUCT_CAP).unwrap();
                let slow = select_satisfying_brute_force(pred, &g, &a, &lists, DEFAULT_PRODUCT_CAP).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }
}

fn random_lists(rng: &mut ChaCha8Rng, n: usize, k: usize) -> ListAssignment {
    let universe = 3 * k;
    let lists = (0..n)
        .map(|_| LabelSet::from_labels(sample(rng, universe, k).iter().map(|x| x as u32 + 1)).unwrap())
        .collect();
    ListAssignment::new(lists).unwrap()
}

#[test]
fn constructions_on_random_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 2..=6 {
        let f = ConstructiveLabeler::friendship(n).unwrap();
        let k = friendship_list_size(n);
        for _ in 0..200 {
            let lists = random_lists(&mut rng, 2 * n + 1, k);
            let c = f.label(&lists).unwrap();
            assert!(lists.admits(c.labels()));
            let pages: BTreeSet<(u32, u32)> = (1..=n)
                .map(|i| {
                    let (x, y) = (c.get(2 * i - 1), c.get(2 * i));
                    (x.min(y), x.max(y))
                })
                .collect();
            assert_eq!(pages.len(), n);
            assert!(pages.iter().all(|(x, y)| x != y));
        }
        let b = ConstructiveLabeler::book(n).unwrap();
        let k = book_list_size(n);
        for _ in 0..200 {
            let lists = random_lists(&mut rng, 2 * n + 2, k);
            let c = b.label(&lists).unwrap();
            assert!(lists.admits(c.labels()));
            assert_ne!(c.get(0), c.get(1));
            let pages: BTreeSet<(u32, u32)> = (1..=n).map(|i| (c.get(2 * i), c.get(2 * i + 1))).collect();
            assert_eq!(pages.len(), n);
        }
    }
}

#[test]
fn hunt_over_small_connected_graphs() {
    let graphs: Vec<Graph> = (1..=4).flat_map(|n| small_graphs(n, true).unwrap()).collect();
    for pred in [Predicate::Distinguishing, Predicate::ProperDistinguishing] {
        let report = hunt(pred, graphs.clone(), &HuntOptions::default());
        assert_eq!(report.scanned, 1 + 1 + 2 + 6);
        assert!(report.skipped.is_empty());
        assert!(report.hits.is_empty(), "{pred}: {:?}", report.hits);
    }
    // Every graph on four or fewer vertices has choice number equal to its
    // chromatic number.
    let report = hunt(Predicate::Proper, graphs, &HuntOptions::default());
    assert!(report.hits.is_empty());
}
