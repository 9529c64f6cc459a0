use listdist::{
    automorphisms, encode_graph6, generate_family, parse_graph6, Family, Graph, Permutation, DEFAULT_GROUP_CAP,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, image)| (g, Permutation::new(image).unwrap()))
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(6)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn group_order_survives_relabeling((g, p) in arb_graph_and_perm(7)) {
        let h = g.relabel(&p).unwrap();
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        let b = automorphisms(&h, DEFAULT_GROUP_CAP).unwrap();
        prop_assert_eq!(a.len(), b.len());
    }

    #[test]
    fn elements_are_edge_preserving_bijections(g in arb_graph(6)) {
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        for s in a.elements() {
            for u in 0..g.order() {
                for v in 0..g.order() {
                    if u != v {
                        prop_assert_eq!(g.has_edge(u, v), g.has_edge(s.apply(u), s.apply(v)));
                    }
                }
            }
        }
    }
}

#[test]
fn group_matches_full_permutation_scan() {
    // Every graph on five vertices, compared against the 120 permutations.
    let perms = all_permutations(5);
    for g in listdist::small_graphs::small_graphs(5, false).unwrap() {
        let expected: Vec<Vec<usize>> = perms
            .iter()
            .filter(|p| Permutation::new(p.to_vec()).unwrap().preserves(&g))
            .cloned()
            .collect();
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        let mut found: Vec<Vec<usize>> = a.elements().iter().map(|s| s.image().to_vec()).collect();
        found.sort();
        let mut expected = expected;
        expected.sort();
        assert_eq!(found, expected, "{}", encode_graph6(&g));
    }
}

#[test]
fn friendship_group_order() {
    for n in 2..=4usize {
        let g = generate_family(Family::Friendship, &[n]).unwrap();
        let brute = all_permutations(2 * n + 1)
            .into_iter()
            .filter(|p| Permutation::new(p.clone()).unwrap().preserves(&g))
            .count();
        let factorial: usize = (1..=n).product();
        assert_eq!(brute, (1 << n) * factorial);
        assert_eq!(automorphisms(&g, DEFAULT_GROUP_CAP).unwrap().len(), brute);
    }
}

#[test]
fn group_is_closed_on_desk_graphs() {
    for (f, p) in [
        (Family::Cycle, vec![6]),
        (Family::Book, vec![3]),
        (Family::CompleteBipartite, vec![2, 3]),
        (Family::Friendship, vec![3]),
    ] {
        let g = generate_family(f, &p).unwrap();
        let a = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
        let set: std::collections::HashSet<&[usize]> = a.elements().iter().map(|s| s.image()).collect();
        assert_eq!(set.len(), a.len(), "duplicates in {f}");
        for x in a.elements() {
            assert!(set.contains(x.inverse().image()));
            for y in a.elements() {
                assert!(set.contains(x.compose(y).image()));
            }
        }
    }
}
