//! Cross-checks the fast solvers against the brute-force oracles.

use chromstab_core::chromatic::CHROMATIC_ORACLE_MAX_N;
use chromstab_core::stability::{EDGE_ORACLE_MAX_EDGES, VERTEX_ORACLE_MAX_N};
use chromstab_core::{
    chromatic_number, chromatic_oracle, edge_stability_oracle, stability, to_graph6, vertex_stability_oracle,
    Graph, StabilityKind,
};
use serde::Serialize;

use crate::corpus::{Corpus, ParseFailure};

/// Largest order accepted without `--force`.
pub const DEFAULT_GUARD_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph: String,
    pub quantity: &'static str,
    pub solver: usize,
    pub oracle: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleDiffReport {
    pub corpus: String,
    pub graphs_compared: u64,
    /// Comparisons skipped because the graph exceeds an oracle's guard.
    pub skipped_comparisons: u64,
    pub mismatches: Vec<Mismatch>,
    pub parse_failures: Vec<ParseFailure>,
}

fn compare(g: &Graph, report: &mut OracleDiffReport) {
    let graph = to_graph6(g).unwrap_or_default();
    let mut diff = |quantity, solver, oracle: Option<usize>| match oracle {
        None => report.skipped_comparisons += 1,
        Some(oracle) if oracle != solver => {
            report.mismatches.push(Mismatch { graph: graph.clone(), quantity, solver, oracle })
        }
        Some(_) => {}
    };

    let chi = chromatic_number(g).0;
    diff("chi", chi, (g.n() <= CHROMATIC_ORACLE_MAX_N).then(|| chromatic_oracle(g).ok()).flatten());
    if !g.has_any_edge() {
        return;
    }
    let small = g.n() <= VERTEX_ORACLE_MAX_N;
    let vs = stability(g, StabilityKind::Vertex).expect("graph has an edge").value;
    diff("vs", vs, small.then(|| vertex_stability_oracle(g, false).ok()).flatten());
    let ivs = stability(g, StabilityKind::IndependentVertex).expect("graph has an edge").value;
    diff("ivs", ivs, small.then(|| vertex_stability_oracle(g, true).ok()).flatten());
    let few_edges = g.edge_count() <= EDGE_ORACLE_MAX_EDGES;
    let es = stability(g, StabilityKind::Edge).expect("graph has an edge").value;
    diff("es", es, few_edges.then(|| edge_stability_oracle(g).ok()).flatten());
}

pub fn oracle_diff(corpus: &Corpus) -> OracleDiffReport {
    let mut report = OracleDiffReport { corpus: corpus.description().to_string(), ..Default::default() };
    for i in 0..corpus.len() {
        match corpus.get(i) {
            Ok(g) => {
                compare(&g, &mut report);
                report.graphs_compared += 1;
            }
            Err(f) => report.parse_failures.push(f),
        }
    }
    report
}
