use listdist::counting::{
    binomial, enumerate_b, intersection_count, overlap_profile, related_sequence_count, total_sequences,
    union_count_paper, union_count_recurrence, union_count_subsets, Count, FunctionFamily, DEFAULT_MAX_FUNCTIONS,
    DEFAULT_SEQUENCE_CAP,
};
use listdist::Labeling;
use proptest::prelude::*;

const T: usize = DEFAULT_MAX_FUNCTIONS;

/// A family with n ≤ 4 points, t ≤ 4 functions and d ≤ 3, d ≤ m ≤ 5.
fn arb_family() -> impl Strategy<Value = FunctionFamily> {
    (1usize..=4, 1usize..=4, 1u32..=5)
        .prop_flat_map(|(n, t, m)| {
            let d = 1..=m.min(3);
            let values = proptest::collection::vec(proptest::collection::vec(1..=m, n), t);
            (Just(m), d, values)
        })
        .prop_map(|(m, d, values)| {
            let functions = values.into_iter().map(|v| Labeling::new(v).unwrap()).collect();
            FunctionFamily::new(functions, m, d).unwrap()
        })
}

fn brute(fam: &FunctionFamily) -> Count {
    Count::from(enumerate_b(fam, DEFAULT_SEQUENCE_CAP).unwrap().len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn four_routes_agree(fam in arb_family()) {
        let b = brute(&fam);
        prop_assert_eq!(union_count_paper(&fam, T).unwrap(), b.clone());
        prop_assert_eq!(union_count_subsets(&fam, T).unwrap(), b.clone());
        prop_assert_eq!(union_count_recurrence(&fam, T).unwrap(), b);
    }

    #[test]
    fn adding_a_function_never_shrinks(fam in arb_family(), extra in proptest::collection::vec(1u32..=5, 4)) {
        let extra: Vec<u32> = extra.iter().take(fam.domain()).map(|&x| (x - 1) % fam.universe() + 1).collect();
        let mut bigger = fam.clone();
        bigger.push(Labeling::new(extra).unwrap()).unwrap();
        prop_assert!(union_count_paper(&bigger, T).unwrap() >= union_count_paper(&fam, T).unwrap());
    }

    #[test]
    fn bounded_by_all_sequences(fam in arb_family()) {
        let total = total_sequences(fam.domain(), fam.universe(), fam.list_size()).unwrap();
        let union = union_count_paper(&fam, T).unwrap();
        prop_assert!(union <= total);
        let seqs = enumerate_b(&fam, DEFAULT_SEQUENCE_CAP).unwrap();
        prop_assert_eq!(union == total, Count::from(seqs.len()) == total);
    }

    #[test]
    fn order_of_functions_is_irrelevant(fam in arb_family(), seed in any::<u64>()) {
        let mut fs = fam.functions().to_vec();
        let len = fs.len();
        fs.rotate_left((seed as usize) % len);
        if seed & 1 == 1 {
            fs.reverse();
        }
        let shuffled = FunctionFamily::new(fs, fam.universe(), fam.list_size()).unwrap();
        prop_assert_eq!(union_count_paper(&shuffled, T).unwrap(), union_count_paper(&fam, T).unwrap());
    }

    #[test]
    fn duplicated_function_does_not_change_intersection(fam in arb_family(), pick in any::<prop::sample::Index>()) {
        let j = pick.index(fam.len());
        let mut with_copy = fam.clone();
        with_copy.push(fam.functions()[j].clone()).unwrap();
        let all: Vec<usize> = (0..fam.len()).collect();
        let mut doubled = all.clone();
        doubled.push(fam.len());
        let (m, d) = (fam.universe(), fam.list_size());
        let single = intersection_count(&overlap_profile(&fam, &all).unwrap(), m, d);
        let double = intersection_count(&overlap_profile(&with_copy, &doubled).unwrap(), m, d);
        prop_assert_eq!(single, double);
    }
}

#[test]
fn single_function_closed_form_by_enumeration() {
    for n in 1..=3usize {
        for m in 1..=5u32 {
            for d in 1..=m {
                let f: Vec<u32> = (0..n as u32).map(|i| i % m + 1).collect();
                let fam = FunctionFamily::new(vec![Labeling::new(f).unwrap()], m, d).unwrap();
                let expected = related_sequence_count(n, m, d).unwrap();
                assert_eq!(brute(&fam), expected, "n={n} m={m} d={d}");
                assert_eq!(expected, binomial(m as i64 - 1, d as i64 - 1).pow(n as u32));
            }
        }
    }
}

#[test]
fn spot_values() {
    assert_eq!(related_sequence_count(2, 3, 2).unwrap(), Count::from(4u32));
    assert_eq!(related_sequence_count(3, 4, 2).unwrap(), Count::from(27u32));
    assert_eq!(related_sequence_count(5, 4, 4).unwrap(), Count::from(1u32));
    assert!(related_sequence_count(2, 2, 3).is_err());
    assert_eq!(total_sequences(2, 3, 2).unwrap(), Count::from(9u32));
    let two = FunctionFamily::from_values(&[&[1], &[2]], 3, 2).unwrap();
    let seqs = enumerate_b(&two, DEFAULT_SEQUENCE_CAP).unwrap();
    let lists: Vec<Vec<u32>> = seqs.iter().map(|s| s.lists[0].to_vec()).collect();
    assert_eq!(lists, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    let profile = overlap_profile(
        &FunctionFamily::from_values(&[&[1, 1], &[1, 2]], 3, 2).unwrap(),
        &[0, 1],
    )
    .unwrap();
    assert_eq!(profile.counts, vec![1, 1]);
    assert_eq!(intersection_count(&profile, 3, 2), Count::from(2u32));
}
