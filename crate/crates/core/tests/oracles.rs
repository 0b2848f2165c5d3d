//! Fast solvers against their brute-force oracles.

use chromstab_core::{
    chromatic_number, chromatic_oracle, edge_stability_oracle, stability, vertex_stability_oracle, Graph,
    LabeledGraphs, StabilityKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

#[test]
fn chromatic_number_matches_oracle_exhaustively() {
    let mut checked = 0;
    for n in 1..=5 {
        for g in LabeledGraphs::new(n).unwrap() {
            assert_eq!(Ok(chromatic_number(&g).0), chromatic_oracle(&g), "{g:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn chromatic_number_matches_oracle_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let n = [6, 7, 8][i % 3];
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let (chi, coloring) = chromatic_number(&g);
        assert!(coloring.is_proper(&g));
        assert_eq!(coloring.num_colors(), chi);
        assert_eq!(Ok(chi), chromatic_oracle(&g), "{g:?}");
    }
}

#[test]
fn stability_solvers_match_oracles_exhaustively() {
    for n in 2..=5 {
        for g in LabeledGraphs::new(n).unwrap().filter(|g| g.has_any_edge()) {
            let vs = stability(&g, StabilityKind::Vertex).unwrap().value;
            let ivs = stability(&g, StabilityKind::IndependentVertex).unwrap().value;
            let es = stability(&g, StabilityKind::Edge).unwrap().value;
            assert_eq!(Ok(vs), vertex_stability_oracle(&g, false), "vs {g:?}");
            assert_eq!(Ok(ivs), vertex_stability_oracle(&g, true), "ivs {g:?}");
            assert_eq!(Ok(es), edge_stability_oracle(&g), "es {g:?}");
        }
    }
}

#[test]
fn no_smaller_witness_exists() {
    // a set of size value - 1 never suffices: checked against the oracles
    // directly by deleting every smaller set
    for g in LabeledGraphs::new(5).unwrap().filter(|g| g.has_any_edge()) {
        let chi = chromatic_oracle(&g).unwrap();
        let r = stability(&g, StabilityKind::Vertex).unwrap();
        for mask in 1u64..32 {
            if (mask.count_ones() as usize) < r.value {
                let rest = g.delete_vertices(chromstab_core::VertexSet::from_bits(mask)).graph;
                assert_ne!(chromatic_oracle(&rest).unwrap(), chi - 1);
            }
        }
    }
}

#[test]
fn stability_solvers_match_oracles_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 60 {
        let n = rng.gen_range(6..=8);
        let p = rng.gen_range(0.2..0.6);
        let g = random_graph(&mut rng, n, p);
        if !g.has_any_edge() || g.edge_count() > 15 {
            continue;
        }
        for (kind, oracle) in [
            (StabilityKind::Vertex, vertex_stability_oracle(&g, false)),
            (StabilityKind::IndependentVertex, vertex_stability_oracle(&g, true)),
            (StabilityKind::Edge, edge_stability_oracle(&g)),
        ] {
            assert_eq!(Ok(stability(&g, kind).unwrap().value), oracle, "{kind:?} {g:?}");
        }
        done += 1;
    }
}
