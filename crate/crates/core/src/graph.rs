//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported order, the graph6 short-form ceiling.
pub const MAX_VERTICES: usize = 62;

/// Largest order [`LabeledGraphs`] will enumerate at all; `n(n-1)/2` edge
/// slots must fit in a 64-bit mask.
pub const ENUMERATION_HARD_LIMIT: usize = 11;

/// Default enumeration guard: `2^21` labeled graphs at `n = 7`.
pub const ENUMERATION_DEFAULT_LIMIT: usize = 7;

/// An undirected edge `(u, v)` with `u < v`. Ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(into = "[usize; 2]", try_from = "[usize; 2]")
)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Fails on a self-loop.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop { vertex: a }),
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> [usize; 2] {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from([a, b]: [usize; 2]) -> Result<Edge> {
        Edge::new(a, b)
    }
}

/// A simple graph stored as one neighbor bitmask per vertex.
///
/// Values are immutable once built; every operation that changes the graph
/// returns a new one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

/// Result of deleting vertices: the compacted graph plus, for every new
/// vertex, its label in the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a set of new labels back to original labels.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }

    pub fn lift_edge(&self, e: Edge) -> Edge {
        let (a, b) = (self.original[e.u], self.original[e.v]);
        // relabeling preserves order, so a < b still holds
        Edge { u: a, v: b }
    }
}

impl Graph {
    /// The graph with `n` vertices and no edges. `n = 0` is allowed.
    pub fn edgeless(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from `(u, v)` pairs. Endpoint order does not matter,
    /// but each unordered pair may appear only once.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::with_order(n)?;
        for &(a, b) in edges {
            g.add_checked(a, b)?;
        }
        Ok(g)
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Graph> {
        let mut g = Graph::with_order(n)?;
        for e in edges {
            g.add_checked(e.u, e.v)?;
        }
        Ok(g)
    }

    fn with_order(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Graph::edgeless(n)
    }

    fn add_checked(&mut self, a: usize, b: usize) -> Result<()> {
        for x in [a, b] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let e = Edge::new(a, b)?;
        if self.has_edge(a, b) {
            return Err(Error::DuplicateEdge { u: e.u, v: e.v });
        }
        self.connect(a, b);
        Ok(())
    }

    /// Adds `uv` without validation. Crate-internal builders only.
    #[inline]
    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_any_edge(&self) -> bool {
        self.rows().iter().any(|&r| r != 0)
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            let above = self.adj[u] & !((2u64 << u) - 1);
            VertexSet::from_bits(above).iter().map(move |v| Edge { u, v })
        })
    }

    /// `Δ(G)`; zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let mut adj = [0; MAX_VERTICES];
        for (v, row) in adj.iter_mut().enumerate().take(self.n) {
            *row = !self.adj[v] & full & !(1 << v);
        }
        Graph { n: self.n, adj }
    }

    /// `G[V \ removed]`, relabeled to `0..n-|removed|` in the original order.
    pub fn delete_vertices(&self, removed: VertexSet) -> InducedSubgraph {
        self.induced(self.vertices().difference(removed))
    }

    /// `G[keep]`, relabeled to `0..|keep|` in the original order.
    pub fn induced(&self, keep: VertexSet) -> InducedSubgraph {
        let keep = keep.intersection(self.vertices());
        let original = keep.to_vec();
        let mut adj = [0; MAX_VERTICES];
        for (new_u, &u) in original.iter().enumerate() {
            let row = self.adj[u] & keep.bits();
            adj[new_u] = compress(row, keep.bits());
        }
        InducedSubgraph { graph: Graph { n: original.len(), adj }, original }
    }

    /// Same vertex set with the listed edges removed. Every listed edge must
    /// be present, and may be listed once.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for e in edges {
            if !g.has_edge(e.u, e.v) {
                return Err(Error::EdgeNotPresent { u: e.u, v: e.v });
            }
            g.adj[e.u] &= !(1 << e.v);
            g.adj[e.v] &= !(1 << e.u);
        }
        Ok(g)
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach(start, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet::from_bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        VertexSet::from_bits(seen)
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// `self ⊔ other`, with `other`'s vertices shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::edgeless(n)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }
}

/// Packs the bits of `row` selected by `keep` into the low bits, in order.
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0;
    for (i, v) in VertexSet::from_bits(keep).iter().enumerate() {
        if row & (1 << v) != 0 {
            out |= 1 << i;
        }
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().map(|e| (e.u, e.v)).collect::<Vec<_>>())
            .finish()
    }
}

/// Index of the pair `(i, j)`, `i < j`, in column-major upper-triangle
/// order: `(0,1), (0,2), (1,2), (0,3), ...`. Shared by graph6 and the
/// enumeration order.
#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Every labeled simple graph on `n` vertices, exactly once, in edge-mask
/// order. Bit `pair_index(i, j)` of the mask is the edge `ij`.
///
/// The stream can be restarted or split: [`LabeledGraphs::range`] yields a
/// sub-range of masks and [`LabeledGraphs::graph_at`] decodes a single mask,
/// so independent workers can each take a slice of `0..count()`.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// All graphs of order `n`, `1 <= n <= 7`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, ENUMERATION_DEFAULT_LIMIT)
    }

    /// Like [`LabeledGraphs::new`] with a caller-chosen guard (never above
    /// [`ENUMERATION_HARD_LIMIT`]).
    pub fn with_limit(n: usize, max_n: usize) -> Result<Self> {
        let max = max_n.min(ENUMERATION_HARD_LIMIT);
        if n == 0 || n > max {
            return Err(Error::EnumerationRange { n, max });
        }
        let end = 1u64 << (n * (n - 1) / 2);
        Ok(LabeledGraphs { n, next: 0, end })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Total number of graphs, `2^(n(n-1)/2)`.
    pub fn total(&self) -> u64 {
        1u64 << (self.n * (self.n - 1) / 2)
    }

    /// The masks `start..end` only.
    pub fn range(&self, start: u64, end: u64) -> Self {
        let total = self.total();
        LabeledGraphs { n: self.n, next: start.min(total), end: end.min(total) }
    }

    pub fn graph_at(&self, mask: u64) -> Graph {
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for j in 1..self.n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 == 1 {
                    g.connect(i, j);
                }
            }
        }
        g
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.graph_at(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next.min(self.end)) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}
