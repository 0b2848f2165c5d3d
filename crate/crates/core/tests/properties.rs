//! Invariants of the stability numbers over exhaustive and random corpora.

use chromstab_core::constructions::{g_k, g_prime_k, gnk, petersen, thm4_sharpness};
use chromstab_core::{
    brooks_classify, chromatic_number, greedy_clique_lower_bound, parse_graph6, stability,
    stability_by_components, to_graph6, BrooksClass, Graph, LabeledGraphs, StabilityKind, VertexSet, Witness,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graphs_with_edges(max_n: usize) -> impl Iterator<Item = Graph> {
    (2..=max_n).flat_map(|n| LabeledGraphs::new(n).unwrap().filter(|g| g.has_any_edge()))
}

/// Independent bipartiteness test on adjacency lists.
fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!side[v].unwrap());
                        stack.push(u);
                    }
                    Some(x) if x == side[v].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

fn min_subset_size(n: usize, ok: impl Fn(VertexSet) -> bool) -> usize {
    (0u64..(1 << n)).map(VertexSet::from_bits).filter(|s| ok(*s)).map(|s| s.len()).min().unwrap()
}

#[test]
fn ordering_and_color_class_bounds() {
    for g in graphs_with_edges(6) {
        let (chi, coloring) = chromatic_number(&g);
        let vs = stability(&g, StabilityKind::Vertex).unwrap();
        let ivs = stability(&g, StabilityKind::IndependentVertex).unwrap();
        let es = stability(&g, StabilityKind::Edge).unwrap();
        assert!(vs.value <= ivs.value, "{g:?}");
        assert!(vs.value <= es.value, "{g:?}");
        let smallest_class = coloring.classes().iter().map(|c| c.len()).min().unwrap();
        assert!(ivs.value <= smallest_class, "{g:?}");
        assert!(ivs.value <= g.n() / chi);
        assert!(vs.value <= g.n() / chi);
        for r in [&vs, &ivs, &es] {
            assert_eq!(r.chi_before, chi);
            assert_eq!(r.chi_after, chi - 1);
            let rest = r.witness.apply(&g).unwrap();
            assert_eq!(chromatic_number(&rest).0, chi - 1, "{r:?}");
        }
        if let Witness::Vertices(v) = &ivs.witness {
            assert!(g.is_independent_set(v.iter().copied().collect()));
        }
    }
}

#[test]
fn three_chromatic_vs_is_odd_cycle_transversal() {
    let mut seen = 0;
    for g in graphs_with_edges(6) {
        if chromatic_number(&g).0 != 3 {
            continue;
        }
        let oct = min_subset_size(g.n(), |s| is_bipartite(&g.delete_vertices(s).graph));
        assert_eq!(stability(&g, StabilityKind::Vertex).unwrap().value, oct, "{g:?}");
        seen += 1;
    }
    assert!(seen > 1000);
}

#[test]
fn bipartite_vs_is_vertex_cover_number() {
    for g in graphs_with_edges(6) {
        if chromatic_number(&g).0 != 2 {
            continue;
        }
        let cover = min_subset_size(g.n(), |s| g.edges().all(|e| s.contains(e.u()) || s.contains(e.v())));
        assert_eq!(stability(&g, StabilityKind::Vertex).unwrap().value, cover, "{g:?}");
    }
}

#[test]
fn brooks_classification_matches_chi() {
    for n in 2..=7 {
        for g in LabeledGraphs::new(n).unwrap() {
            if !g.is_connected() {
                continue;
            }
            let delta = g.max_degree();
            let chi = chromatic_number(&g).0;
            let extremal = brooks_classify(&g).unwrap() != BrooksClass::NotExtremal;
            assert_eq!(chi == delta + 1, extremal, "{g:?}");
            assert!(greedy_clique_lower_bound(&g) <= chi);
        }
    }
}

#[test]
fn component_decomposition_agrees_with_direct_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut done = 0;
    while done < 200 {
        let parts = rng.gen_range(2..=3);
        let mut g: Option<Graph> = None;
        let mut total = 0;
        for _ in 0..parts {
            let n = rng.gen_range(1..=4);
            if total + n > 10 {
                break;
            }
            total += n;
            let mut edges = vec![];
            for j in 0..n {
                for i in 0..j {
                    if rng.gen_bool(0.6) {
                        edges.push((i, j));
                    }
                }
            }
            let piece = Graph::from_edge_list(n, &edges).unwrap();
            g = Some(match g {
                None => piece,
                Some(acc) => acc.disjoint_union(&piece).unwrap(),
            });
        }
        let g = g.unwrap();
        if !g.has_any_edge() {
            continue;
        }
        for kind in StabilityKind::ALL {
            assert_eq!(
                stability_by_components(&g, kind).unwrap(),
                stability(&g, kind).unwrap(),
                "{kind:?} {g:?}"
            );
        }
        done += 1;
    }
}

#[test]
fn families_reproduce_their_claims() {
    let mut cases = vec![
        gnk(2, 3).unwrap(),
        g_k(3).unwrap(),
        g_k(5).unwrap(),
        g_k(7).unwrap(),
        g_prime_k(1).unwrap(),
        g_prime_k(2).unwrap(),
        g_prime_k(3).unwrap(),
        g_prime_k(4).unwrap(),
        thm4_sharpness(2).unwrap(),
        thm4_sharpness(4).unwrap(),
        thm4_sharpness(6).unwrap(),
    ];
    cases.push((petersen(), Default::default()));
    for (g, exp) in cases {
        let chi = chromatic_number(&g).0;
        if let Some(c) = exp.chi {
            assert_eq!(chi, c);
        }
        if let Some(d) = exp.delta {
            assert_eq!(g.max_degree(), d);
        }
        for (want, kind) in [
            (exp.vs, StabilityKind::Vertex),
            (exp.ivs, StabilityKind::IndependentVertex),
            (exp.es, StabilityKind::Edge),
        ] {
            if let Some(v) = want {
                assert_eq!(stability(&g, kind).unwrap().value, v, "{kind:?} {g:?}");
            }
        }
    }
}

#[test]
fn g_prime_ratio_is_unbounded() {
    // ivs / vs = (k + 1) / 2 exceeds r once k >= 2r
    for k in 2..=6 {
        let (g, _) = g_prime_k(k).unwrap();
        let vs = stability(&g, StabilityKind::Vertex).unwrap().value;
        let ivs = stability(&g, StabilityKind::IndependentVertex).unwrap().value;
        assert_eq!((vs, ivs), (2, k + 1));
        let r = k / 2;
        assert!(ivs > r * vs);
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = vec![];
            let mut k = 0;
            for j in 0..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trips(g in arb_graph()) {
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn deleting_a_vertex_changes_chi_by_at_most_one(g in arb_graph(), v in 0usize..12) {
        let v = v % g.n();
        let chi = chromatic_number(&g).0;
        let sub = chromatic_number(&g.delete_vertices(VertexSet::singleton(v)).graph).0;
        prop_assert!(sub <= chi && sub + 1 >= chi);
    }

    #[test]
    fn witnesses_lower_chi_by_exactly_one(g in arb_graph()) {
        prop_assume!(g.has_any_edge());
        let chi = chromatic_number(&g).0;
        for kind in StabilityKind::ALL {
            let r = stability(&g, kind).unwrap();
            prop_assert_eq!(r.value, r.witness.len());
            prop_assert_eq!(chromatic_number(&r.witness.apply(&g).unwrap()).0, chi - 1);
        }
    }
}
