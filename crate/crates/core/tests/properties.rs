use proptest::prelude::*;

use domkit::graph::{Element, ElementDomain, Graph};
use domkit::io::{build_row, emit_report, encode_graph6, parse_graph6, parse_graph6_bytes, parse_report, CsvRecord};
use domkit::solver::{
    disjoint_lb, domination_number, greedy_upper_bound, is_dominating, k_domination_number,
    naive_oracle, DominationInstance, PAIRS, DEFAULT_BUDGET,
};
use domkit::transforms::{line_graph, total_graph};

const BUDGET: u64 = DEFAULT_BUDGET;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected, nontrivial", |g| g.is_nontrivial() && g.is_connected())
}

fn all_elements(g: &Graph) -> Vec<Element> {
    ElementDomain::VE.elements(g).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn association_is_symmetric(g in arb_graph(7)) {
        let els = all_elements(&g);
        for &a in &els {
            prop_assert!(!g.associated(a, a));
            for &b in &els {
                prop_assert_eq!(g.associated(a, b), g.associated(b, a));
            }
        }
    }

    #[test]
    fn handshake_and_isolation(g in arb_graph(8)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        prop_assert_eq!(g.min_degree() >= 1, !g.has_isolated_vertex());
    }

    #[test]
    fn ve_cover_is_union(g in arb_graph(7)) {
        let n = g.order();
        for a in all_elements(&g) {
            let ve = g.cover_set(a, ElementDomain::VE);
            let mut union: Vec<usize> = g.cover_set(a, ElementDomain::V).iter().collect();
            if g.size() > 0 {
                union.extend(g.cover_set(a, ElementDomain::E).iter().map(|e| n + e));
            }
            union.push(ElementDomain::VE.index_of(&g, a).unwrap());
            union.sort_unstable();
            union.dedup();
            prop_assert_eq!(ve.iter().collect::<Vec<_>>(), union);
        }
    }

    #[test]
    fn edge_indexing_ignores_input_order(g in arb_graph(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut pairs: Vec<_> = g.edges().iter().map(|&(u, v)| if seed & 1 == 0 { (u, v) } else { (v, u) }).collect();
        pairs.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = Graph::new(g.order(), &pairs).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(h.edge_index(v, u), Some(i));
            prop_assert!(g.incident(u).contains(i) && g.incident(v).contains(i));
        }
    }

    #[test]
    fn total_graph_structure(g in arb_graph(7)) {
        let t = total_graph(&g);
        let els = all_elements(&g);
        for &a in &els {
            for &b in &els {
                prop_assert_eq!(t.result.has_edge(t.image(a), t.image(b)), g.associated(a, b));
            }
        }
        for u in 0..g.order() {
            prop_assert_eq!(t.result.degree(t.vertex_image[u]), 2 * g.degree(u));
            for v in 0..g.order() {
                prop_assert_eq!(t.result.has_edge(t.vertex_image[u], t.vertex_image[v]), g.has_edge(u, v));
            }
        }
        if g.size() > 0 {
            let l = line_graph(&g).unwrap();
            prop_assert_eq!(l.result.size(), g.degrees().iter().map(|d| d * d.saturating_sub(1) / 2).sum::<usize>());
            for i in 0..g.size() {
                let (x, y) = g.edge(i);
                prop_assert_eq!(t.result.degree(t.edge_image[i]), g.degree(x) + g.degree(y));
                for j in 0..g.size() {
                    prop_assert_eq!(
                        t.result.has_edge(t.edge_image[i], t.edge_image[j]),
                        l.result.has_edge(l.edge_to_vertex[i], l.edge_to_vertex[j])
                    );
                }
            }
            if !g.has_isolated_vertex() {
                prop_assert_eq!(t.result.min_degree(), 2 * g.min_degree());
            }
        }
    }

    #[test]
    fn witnesses_dominate_and_bounds_bracket(g in arb_connected(7)) {
        for (u, w) in PAIRS {
            let inst = DominationInstance::new(&g, u, w);
            let r = domination_number(&inst, BUDGET).unwrap();
            prop_assert_eq!(r.witness.len(), r.value);
            prop_assert!(is_dominating(&inst, &r.witness));
            prop_assert!(disjoint_lb(&inst).unwrap() <= r.value);
            prop_assert!(r.value <= greedy_upper_bound(&inst).unwrap());
        }
    }

    #[test]
    fn adding_an_edge_never_raises_gamma(g in arb_graph(7), a in 0usize..7, b in 0usize..7) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let inst = |h: &Graph| domination_number(&DominationInstance::new(h, ElementDomain::V, ElementDomain::V), BUDGET).unwrap().value;
        let h = g.with_edge(a, b).unwrap();
        prop_assert!(inst(&h) <= inst(&g));
    }

    #[test]
    fn k_path_agrees_with_set_cover_at_k1(g in arb_graph(8)) {
        let via_k = k_domination_number(&g, 1, BUDGET).unwrap().value;
        let via_cover = domination_number(&DominationInstance::new(&g, ElementDomain::V, ElementDomain::V), BUDGET).unwrap().value;
        prop_assert_eq!(via_k, via_cover);
    }

    #[test]
    fn k_domination_matches_oracle(g in arb_graph(8), k in 1usize..=3) {
        let inst = DominationInstance::k_domination(&g, k);
        let r = domination_number(&inst, BUDGET).unwrap();
        prop_assert!(is_dominating(&inst, &r.witness));
        prop_assert_eq!(r.value, naive_oracle(&inst).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g).unwrap()), Ok(g));
    }

    #[test]
    fn graph6_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let _ = parse_graph6_bytes(&bytes, 4096);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn csv_reparse_preserves_values(gs in proptest::collection::vec(arb_connected(6), 0..6)) {
        let rows: Vec<_> = gs.iter().map(|g| build_row(g, BUDGET).unwrap()).collect();
        let back = parse_report(&emit_report(&rows)).unwrap();
        let want: Vec<CsvRecord> = rows.iter().map(CsvRecord::from).collect();
        prop_assert_eq!(back, want);
    }
}
