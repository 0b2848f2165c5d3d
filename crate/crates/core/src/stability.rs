//! Chromatic stability numbers.
//!
//! * `vs_χ(G)`: fewest vertices whose deletion leaves a graph with
//!   chromatic number `χ(G) - 1`.
//! * `ivs_χ(G)`: the same over independent vertex sets only.
//! * `es_χ(G)`: fewest edges whose deletion does the same.
//!
//! Deleting a single vertex or edge lowers `χ` by at most one, so any
//! minimum deletion set reaching `χ - 1` colorability reaches it exactly.
//! The vertex solvers therefore only ask whether the remainder is
//! `(χ - 1)`-colorable. The edge solver minimizes the number of
//! monochromatic edges over all `(χ - 1)`-assignments: deleting exactly
//! those edges leaves a properly colored graph, and conversely any deletion
//! set admits such an assignment whose monochromatic edges lie inside it.
//!
//! Witnesses are the lexicographically least minimum sets, comparing
//! sorted element lists.

use alloc::vec;
use alloc::vec::Vec;

use crate::chromatic::{brute_force_chromatic, chromatic_number, color_within};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum StabilityKind {
    #[cfg_attr(feature = "serde", serde(rename = "vs"))]
    Vertex,
    #[cfg_attr(feature = "serde", serde(rename = "ivs"))]
    IndependentVertex,
    #[cfg_attr(feature = "serde", serde(rename = "es"))]
    Edge,
}

impl StabilityKind {
    pub const ALL: [StabilityKind; 3] =
        [StabilityKind::Vertex, StabilityKind::IndependentVertex, StabilityKind::Edge];

    pub fn short_name(self) -> &'static str {
        match self {
            StabilityKind::Vertex => "vs",
            StabilityKind::IndependentVertex => "ivs",
            StabilityKind::Edge => "es",
        }
    }
}

/// A deletion set in the labels of the input graph, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(untagged))]
pub enum Witness {
    Vertices(Vec<usize>),
    Edges(Vec<Edge>),
}

impl Witness {
    pub fn len(&self) -> usize {
        match self {
            Witness::Vertices(v) => v.len(),
            Witness::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertex_set(&self) -> Option<VertexSet> {
        match self {
            Witness::Vertices(v) => Some(v.iter().copied().collect()),
            Witness::Edges(_) => None,
        }
    }

    /// The graph left after deleting the witness.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Witness::Vertices(v) => Ok(g.delete_vertices(v.iter().copied().collect()).graph),
            Witness::Edges(e) => g.delete_edges(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StabilityResult {
    pub kind: StabilityKind,
    pub value: usize,
    pub witness: Witness,
    pub chi_before: usize,
    pub chi_after: usize,
}

pub fn vertex_stability(g: &Graph) -> Result<StabilityResult> {
    stability(g, StabilityKind::Vertex)
}

pub fn independent_vertex_stability(g: &Graph) -> Result<StabilityResult> {
    stability(g, StabilityKind::IndependentVertex)
}

pub fn edge_stability(g: &Graph) -> Result<StabilityResult> {
    stability(g, StabilityKind::Edge)
}

/// Computes the requested invariant. Fails on a graph without edges.
pub fn stability(g: &Graph, kind: StabilityKind) -> Result<StabilityResult> {
    if !g.has_any_edge() {
        return Err(Error::Edgeless);
    }
    let chi = chromatic_number(g).0;
    Ok(stability_with_chi(g, kind, chi))
}

/// As [`stability`] with `χ(G)` already known. `g` must have an edge.
pub(crate) fn stability_with_chi(g: &Graph, kind: StabilityKind, chi: usize) -> StabilityResult {
    debug_assert!(chi >= 2);
    let witness = match kind {
        StabilityKind::Vertex => Witness::Vertices(min_vertex_deletion(g, chi, false).to_vec()),
        StabilityKind::IndependentVertex => Witness::Vertices(min_vertex_deletion(g, chi, true).to_vec()),
        StabilityKind::Edge => Witness::Edges(min_edge_deletion(g, chi)),
    };
    StabilityResult { kind, value: witness.len(), witness, chi_before: chi, chi_after: chi - 1 }
}

/// Lexicographically least minimum set `S` with `G - S` being
/// `(χ - 1)`-colorable, optionally restricted to independent sets.
fn min_vertex_deletion(g: &Graph, chi: usize, independent: bool) -> VertexSet {
    let target = chi - 1;
    // deleting a whole color class always works, so this terminates by
    // size floor(n / χ)
    for size in 1..=g.n() {
        let mut search = DeletionSearch { g, target, independent };
        if let Some(s) = search.first(g.vertices().bits(), VertexSet::EMPTY, size) {
            return s;
        }
    }
    unreachable!("deleting every vertex leaves a 0-colorable graph")
}

struct DeletionSearch<'a> {
    g: &'a Graph,
    target: usize,
    independent: bool,
}

impl DeletionSearch<'_> {
    /// First set, in lexicographic order, of `chosen` plus `remaining` more
    /// vertices from `cand` that works.
    fn first(&mut self, cand: u64, chosen: VertexSet, remaining: usize) -> Option<VertexSet> {
        if remaining == 0 {
            let rest = self.g.vertices().difference(chosen);
            return color_within(self.g, rest, self.target).map(|_| chosen);
        }
        let mut cand = cand;
        while cand.count_ones() as usize >= remaining {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let mut next = cand;
            if self.independent {
                next &= !self.g.row(v);
            }
            let mut with_v = chosen;
            with_v.insert(v);
            if let Some(s) = self.first(next, with_v, remaining - 1) {
                return Some(s);
            }
        }
        None
    }
}

/// Lexicographically least minimum edge set whose deletion makes `G`
/// `(χ - 1)`-colorable.
fn min_edge_deletion(g: &Graph, chi: usize) -> Vec<Edge> {
    let k = chi - 1;
    let edges: Vec<Edge> = g.edges().collect();
    let optimum = MonoSearch::new(g, k).minimize();
    debug_assert!(optimum >= 1);

    // Fix the witness one element at a time: the next element is the
    // least edge e_i such that some optimal assignment is monochromatic on
    // the chosen prefix and on e_i, and proper on every other edge below
    // e_i.
    let mut chosen: Vec<usize> = Vec::with_capacity(optimum);
    let mut from = 0;
    while chosen.len() < optimum {
        let next = (from..edges.len()).find(|&i| {
            let mut search = MonoSearch::new(g, k);
            let mut prefix = chosen.iter().copied().peekable();
            for (t, e) in edges.iter().enumerate().take(i) {
                if prefix.peek() == Some(&t) {
                    prefix.next();
                    search.tie(*e);
                } else {
                    search.separate(*e);
                }
            }
            search.tie(edges[i]);
            search.feasible(optimum)
        });
        let i = next.expect("optimal edge witness could not be extended");
        chosen.push(i);
        from = i + 1;
    }
    chosen.into_iter().map(|i| edges[i]).collect()
}

/// Branch and bound over assignments `V -> [k]` counting monochromatic
/// edges. Pairs can be constrained to differ (`hard`) or to agree (`tied`).
struct MonoSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    hard: [u64; MAX_VERTICES],
    tied: [u64; MAX_VERTICES],
    classes: Vec<u64>,
    colored: u64,
    limit: usize,
    stop_at_first: bool,
    best: Option<usize>,
    /// Edge-disjoint cliques on at least three vertices.
    cliques: Vec<u64>,
}

impl<'a> MonoSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        MonoSearch {
            g,
            k,
            order: connectivity_order(g),
            hard: [0; MAX_VERTICES],
            tied: [0; MAX_VERTICES],
            classes: vec![0; k],
            colored: 0,
            limit: usize::MAX,
            stop_at_first: false,
            best: None,
            cliques: edge_disjoint_cliques(g),
        }
    }

    fn separate(&mut self, e: Edge) {
        self.hard[e.u()] |= 1 << e.v();
        self.hard[e.v()] |= 1 << e.u();
    }

    fn tie(&mut self, e: Edge) {
        self.tied[e.u()] |= 1 << e.v();
        self.tied[e.v()] |= 1 << e.u();
    }

    /// Fewest monochromatic edges over all unconstrained assignments.
    fn minimize(mut self) -> usize {
        let start = self.greedy();
        self.best = Some(start);
        if start > 0 {
            self.limit = start - 1;
            self.run(0, 0, 0);
        }
        self.best.expect("greedy assignment seeds the incumbent")
    }

    /// Whether some assignment meets the constraints with at most `budget`
    /// monochromatic edges.
    fn feasible(mut self, budget: usize) -> bool {
        self.limit = budget;
        self.stop_at_first = true;
        self.run(0, 0, 0);
        self.best.is_some()
    }

    /// Cost of coloring in search order, each vertex taking its cheapest
    /// color.
    fn greedy(&self) -> usize {
        let mut classes = vec![0u64; self.k];
        let mut cost = 0;
        for &v in &self.order {
            let row = self.g.row(v);
            let (c, add) = (0..self.k)
                .map(|c| (c, (row & classes[c]).count_ones() as usize))
                .min_by_key(|&(_, add)| add)
                .expect("k >= 1");
            classes[c] |= 1 << v;
            cost += add;
        }
        cost
    }

    fn allowed(&self, v: usize, c: usize) -> bool {
        self.hard[v] & self.classes[c] == 0 && self.tied[v] & self.colored & !self.classes[c] == 0
    }

    /// Returns true when the search should stop.
    fn run(&mut self, depth: usize, used: usize, cost: usize) -> bool {
        if depth == self.order.len() {
            self.best = Some(cost);
            if self.stop_at_first || cost == 0 {
                return true;
            }
            self.limit = cost - 1;
            return false;
        }
        match self.lower_bound(depth, used) {
            Some(extra) if cost + extra <= self.limit => {}
            _ => return false,
        }
        if self.clique_bound(cost) > self.limit {
            return false;
        }

        let v = self.order[depth];
        let row = self.g.row(v);
        for c in 0..(used + 1).min(self.k) {
            if !self.allowed(v, c) {
                continue;
            }
            let add = (row & self.classes[c]).count_ones() as usize;
            if cost + add > self.limit {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.colored |= 1 << v;
            let stop = self.run(depth + 1, used.max(c + 1), cost + add);
            self.classes[c] &= !(1 << v);
            self.colored &= !(1 << v);
            if stop {
                return true;
            }
        }
        false
    }

    /// Monochromatic edges every completion must still add between an
    /// uncolored and a colored vertex; `None` if some vertex has no legal
    /// color left.
    fn lower_bound(&self, depth: usize, used: usize) -> Option<usize> {
        let mut total = 0;
        for &u in &self.order[depth..] {
            let row = self.g.row(u);
            let fresh_ok = used < self.k && self.tied[u] & self.colored == 0;
            if fresh_ok {
                continue;
            }
            let cheapest = (0..used)
                .filter(|&c| self.allowed(u, c))
                .map(|c| (row & self.classes[c]).count_ones() as usize)
                .min()?;
            total += cheapest;
        }
        Some(total)
    }
}

impl MonoSearch<'_> {
    /// Every clique must end up with at least the monochromatic edges of
    /// the most balanced completion of its colored part. Cliques are edge
    /// disjoint, so these add up; edges outside them count as already
    /// colored.
    fn clique_bound(&self, cost: usize) -> usize {
        let mut inside = 0;
        let mut forced = 0;
        let mut counts = [0usize; MAX_VERTICES];
        for &q in &self.cliques {
            let mut free = (q & !self.colored).count_ones() as usize;
            for (c, slot) in counts[..self.k].iter_mut().enumerate() {
                *slot = (q & self.classes[c]).count_ones() as usize;
                inside += *slot * slot.saturating_sub(1) / 2;
            }
            while free > 0 {
                let c = (0..self.k).min_by_key(|&c| counts[c]).expect("k >= 1");
                counts[c] += 1;
                free -= 1;
            }
            forced += counts[..self.k].iter().map(|&x| x * x.saturating_sub(1) / 2).sum::<usize>();
        }
        cost - inside + forced
    }
}

/// Greedy partition of part of the edge set into cliques: each uncovered
/// edge in lexicographic order seeds a clique grown by least-index common
/// neighbors over uncovered edges.
fn edge_disjoint_cliques(g: &Graph) -> Vec<u64> {
    let mut free: Vec<u64> = (0..g.n()).map(|v| g.row(v)).collect();
    let mut cliques = Vec::new();
    for e in g.edges() {
        let (u, v) = (e.u(), e.v());
        if free[u] & (1 << v) == 0 {
            continue;
        }
        let mut q = (1u64 << u) | (1 << v);
        let mut cand = free[u] & free[v];
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            q |= 1 << w;
            cand &= free[w];
        }
        if q.count_ones() < 3 {
            continue;
        }
        for x in VertexSet::from_bits(q).iter() {
            free[x] &= !q;
        }
        cliques.push(q);
    }
    cliques
}

/// Start from the highest-degree vertex, then repeatedly take the vertex
/// with the most already-ordered neighbors (ties: higher degree, then lower
/// index).
fn connectivity_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    for _ in 0..n {
        let mut pick = usize::MAX;
        let mut best = (0u32, 0u32);
        for v in g.vertices().difference(VertexSet::from_bits(placed)) {
            let key = ((g.row(v) & placed).count_ones(), g.row(v).count_ones());
            if pick == usize::MAX || key > best {
                pick = v;
                best = key;
            }
        }
        order.push(pick);
        placed |= 1 << pick;
    }
    order
}

/// Largest order accepted by [`vertex_stability_oracle`].
pub const VERTEX_ORACLE_MAX_N: usize = 10;
/// Largest size accepted by [`edge_stability_oracle`].
pub const EDGE_ORACLE_MAX_EDGES: usize = 15;

/// `vs_χ(G)` (or `ivs_χ(G)` with `independent_only`) by plain subset
/// enumeration and exhaustive coloring of every remainder. `n <= 10`.
pub fn vertex_stability_oracle(g: &Graph, independent_only: bool) -> Result<usize> {
    if g.n() > VERTEX_ORACLE_MAX_N {
        return Err(Error::OracleGuard { what: "vertex count", actual: g.n(), limit: VERTEX_ORACLE_MAX_N });
    }
    if !g.has_any_edge() {
        return Err(Error::Edgeless);
    }
    let n = g.n();
    let chi = brute_force_chromatic(g);
    let mut best = None;
    for mask in 1u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let s = VertexSet::from_bits(mask);
        if independent_only && !g.is_independent_set(s) {
            continue;
        }
        if brute_force_chromatic(&g.delete_vertices(s).graph) == chi - 1 {
            best = Some(size);
        }
    }
    Ok(best.expect("deleting a color class always works"))
}

/// `es_χ(G)` by trying edge subsets in increasing size. `|E| <= 15`.
pub fn edge_stability_oracle(g: &Graph) -> Result<usize> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.len() > EDGE_ORACLE_MAX_EDGES {
        return Err(Error::OracleGuard {
            what: "edge count",
            actual: edges.len(),
            limit: EDGE_ORACLE_MAX_EDGES,
        });
    }
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    let chi = chromatic_number(g).0;
    let mut best = edges.len();
    for mask in 1u32..(1 << edges.len()) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let removed: Vec<Edge> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let rest = g.delete_edges(&removed)?;
        if chromatic_number(&rest).0 == chi - 1 {
            best = size;
        }
    }
    Ok(best)
}

/// Computes the invariant component by component: only components whose
/// chromatic number equals `χ(G)` need to be reduced, and the minimum
/// deletion set is the union of their minimum deletion sets.
pub fn stability_by_components(g: &Graph, kind: StabilityKind) -> Result<StabilityResult> {
    if !g.has_any_edge() {
        return Err(Error::Edgeless);
    }
    let parts: Vec<_> = g
        .connected_components()
        .into_iter()
        .map(|c| {
            let sub = g.induced(c);
            let chi = chromatic_number(&sub.graph).0;
            (sub, chi)
        })
        .collect();
    let chi = parts.iter().map(|(_, chi)| *chi).max().expect("graph has a vertex");

    let mut vertices = VertexSet::EMPTY;
    let mut edges = Vec::new();
    for (sub, _) in parts.iter().filter(|(_, c)| *c == chi) {
        match stability_with_chi(&sub.graph, kind, chi).witness {
            Witness::Vertices(vs) => {
                vertices = vertices.union(sub.lift(vs.into_iter().collect()));
            }
            Witness::Edges(es) => edges.extend(es.into_iter().map(|e| sub.lift_edge(e))),
        }
    }
    // for equal-size sets the lexicographic order is decided by the least
    // element of the symmetric difference, so the union of per-component
    // least witnesses is the least witness of the whole graph
    let witness = match kind {
        StabilityKind::Edge => {
            edges.sort();
            Witness::Edges(edges)
        }
        _ => Witness::Vertices(vertices.to_vec()),
    };
    Ok(StabilityResult { kind, value: witness.len(), witness, chi_before: chi, chi_after: chi - 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_number;
    use crate::constructions::{g_k, g_prime_k, gnk, petersen, standard_graph, thm4_sharpness, StandardKind};
    use crate::graph::LabeledGraphs;

    fn cycle(n: usize) -> Graph {
        standard_graph(StandardKind::Cycle, n).unwrap()
    }

    fn complete(n: usize) -> Graph {
        standard_graph(StandardKind::Complete, n).unwrap()
    }

    fn path(n: usize) -> Graph {
        standard_graph(StandardKind::Path, n).unwrap()
    }

    fn union(parts: &[Graph]) -> Graph {
        parts.iter().skip(1).fold(parts[0].clone(), |acc, g| acc.disjoint_union(g).unwrap())
    }

    /// Checks the structural invariants of a result.
    fn assert_valid(g: &Graph, r: &StabilityResult) {
        assert_eq!(r.chi_after + 1, r.chi_before);
        assert_eq!(r.witness.len(), r.value);
        assert_eq!(chromatic_number(g).0, r.chi_before);
        let rest = r.witness.apply(g).unwrap();
        assert_eq!(chromatic_number(&rest).0, r.chi_after, "{g:?} {r:?}");
        match &r.witness {
            Witness::Vertices(v) => {
                assert!(v.windows(2).all(|w| w[0] < w[1]));
                if r.kind == StabilityKind::IndependentVertex {
                    assert!(g.is_independent_set(v.iter().copied().collect()));
                }
            }
            Witness::Edges(e) => assert!(e.windows(2).all(|w| w[0] < w[1])),
        }
    }

    #[test]
    fn vertex_examples() {
        let p = petersen();
        let r = vertex_stability(&p).unwrap();
        assert_eq!(r.value, 3);
        assert_valid(&p, &r);
        for n in 2..=7 {
            let r = vertex_stability(&complete(n)).unwrap();
            assert_eq!(r.value, 1);
            assert_eq!(r.witness, Witness::Vertices(vec![0]));
        }
        let (g, _) = gnk(2, 3).unwrap();
        let r = vertex_stability(&g).unwrap();
        assert_eq!(r.value, 4);
        assert_valid(&g, &r);
    }

    #[test]
    fn independent_examples() {
        let (g, _) = gnk(2, 3).unwrap();
        let r = independent_vertex_stability(&g).unwrap();
        assert_eq!(r.value, 6);
        assert_valid(&g, &r);

        let (g, _) = g_prime_k(3).unwrap();
        assert_eq!(independent_vertex_stability(&g).unwrap().value, 4);

        let r = independent_vertex_stability(&cycle(5)).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, Witness::Vertices(vec![0]));
    }

    #[test]
    fn edge_examples() {
        let (g, _) = thm4_sharpness(4).unwrap();
        let r = edge_stability(&g).unwrap();
        assert_eq!(r.value, 2);
        assert_valid(&g, &r);
        assert_eq!(vertex_stability(&g).unwrap().value, 1);

        let r = edge_stability(&cycle(7)).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, Witness::Edges(vec![Edge::new(0, 1).unwrap()]));

        let r = edge_stability(&complete(4)).unwrap();
        assert_eq!(r.value, 1);
        assert_valid(&complete(4), &r);
    }

    #[test]
    fn edgeless_inputs_are_rejected() {
        let g = Graph::edgeless(4).unwrap();
        for kind in StabilityKind::ALL {
            assert_eq!(stability(&g, kind), Err(Error::Edgeless));
            assert_eq!(stability_by_components(&g, kind), Err(Error::Edgeless));
        }
        assert_eq!(vertex_stability_oracle(&g, false), Err(Error::Edgeless));
        assert_eq!(edge_stability_oracle(&g), Err(Error::Edgeless));
    }

    #[test]
    fn oracle_examples_and_guards() {
        let p3 = path(3);
        assert_eq!(vertex_stability_oracle(&p3, false), Ok(1));
        assert_eq!(vertex_stability_oracle(&p3, true), Ok(1));
        assert_eq!(edge_stability_oracle(&complete(3)), Ok(1));
        assert_eq!(edge_stability_oracle(&cycle(5)), Ok(1));

        assert!(matches!(
            vertex_stability_oracle(&complete(11), false),
            Err(Error::OracleGuard { limit: 10, .. })
        ));
        assert!(matches!(edge_stability_oracle(&complete(7)), Err(Error::OracleGuard { .. })));
        assert_eq!(vertex_stability_oracle(&petersen(), false), Ok(3));
        assert_eq!(edge_stability_oracle(&petersen()), Ok(3));
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        // brute-force every minimum witness on small graphs and compare
        for n in 2..=5 {
            for g in LabeledGraphs::new(n).unwrap().filter(|g| g.has_any_edge()) {
                let chi = chromatic_number(&g).0;
                for kind in [StabilityKind::Vertex, StabilityKind::IndependentVertex] {
                    let r = stability(&g, kind).unwrap();
                    let least = (1u64..(1 << n))
                        .map(VertexSet::from_bits)
                        .filter(|s| s.len() == r.value)
                        .filter(|s| kind == StabilityKind::Vertex || g.is_independent_set(*s))
                        .filter(|s| chromatic_number(&g.delete_vertices(*s).graph).0 == chi - 1)
                        .map(|s| s.to_vec())
                        .min()
                        .unwrap();
                    assert_eq!(r.witness, Witness::Vertices(least), "{kind:?} {g:?}");
                }
                let r = edge_stability(&g).unwrap();
                let edges: Vec<Edge> = g.edges().collect();
                let least = (1u32..(1 << edges.len()))
                    .filter(|m| m.count_ones() as usize == r.value)
                    .map(|m| {
                        (0..edges.len()).filter(|&i| m >> i & 1 == 1).map(|i| edges[i]).collect::<Vec<_>>()
                    })
                    .filter(|f| chromatic_number(&g.delete_edges(f).unwrap()).0 == chi - 1)
                    .min()
                    .unwrap();
                assert_eq!(r.witness, Witness::Edges(least), "{g:?}");
            }
        }
    }

    #[test]
    fn components_examples() {
        let k4k4 = union(&[complete(4), complete(4)]);
        let r = stability_by_components(&k4k4, StabilityKind::Vertex).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, Witness::Vertices(vec![0, 4]));
        assert_eq!(r, vertex_stability(&k4k4).unwrap());

        let k4c4 = union(&[complete(4), cycle(4)]);
        let r = stability_by_components(&k4c4, StabilityKind::Vertex).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r, vertex_stability(&k4c4).unwrap());

        let odd = union(&[cycle(3), cycle(5), cycle(7)]);
        for kind in StabilityKind::ALL {
            let by_parts = stability_by_components(&odd, kind).unwrap();
            assert_eq!(by_parts.value, 3);
            assert_eq!(by_parts, stability(&odd, kind).unwrap());
        }
    }

    #[test]
    fn family_values() {
        for k in [3, 5, 7] {
            let (g, _) = g_k(k).unwrap();
            assert_eq!(vertex_stability(&g).unwrap().value, 2);
            assert_eq!(independent_vertex_stability(&g).unwrap().value, 3);
        }
    }
}
