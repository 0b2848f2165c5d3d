//! Exact vertex coloring.
//!
//! The workhorse is [`is_k_colorable`], a DSATUR branch-and-bound decision
//! procedure on bitset adjacency. [`chromatic_number`] brackets `χ` between
//! a greedy clique and a greedy DSATUR coloring and closes the gap with it.
//! [`chromatic_oracle`] is a deliberately naive exhaustive search used only
//! to cross-check the fast path.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

const UNCOLORED: u8 = u8::MAX;

/// A proper coloring. Colors are `0..num_colors()` and every one of them is
/// used by some vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Coloring {
    colors: Vec<u8>,
    num_colors: usize,
}

impl Coloring {
    fn from_raw(colors: Vec<u8>) -> Coloring {
        let num_colors = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        Coloring { colors, num_colors }
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v] as usize
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Color classes `C_0, C_1, ...`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::EMPTY; self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c as usize].insert(v);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|e| self.colors[e.u()] != self.colors[e.v()])
    }
}

/// A proper coloring of `g` with at most `k` colors, if one exists.
///
/// Deterministic: ties in the branching order are broken by least vertex
/// index and colors are tried in increasing order, so the same input always
/// yields the same coloring.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    color_within(g, g.vertices(), k).map(|colors| Coloring::from_raw(colors[..g.n()].to_vec()))
}

/// `k`-colors `G[active]`. Vertices outside `active` are left as
/// `UNCOLORED` in the returned array.
pub(crate) fn color_within(g: &Graph, active: VertexSet, k: usize) -> Option<[u8; MAX_VERTICES]> {
    let mut colors = [UNCOLORED; MAX_VERTICES];
    if active.is_empty() {
        return Some(colors);
    }
    if k == 0 {
        return None;
    }
    if k >= active.len() {
        for (c, v) in active.iter().enumerate() {
            colors[v] = c as u8;
        }
        return Some(colors);
    }
    if k == 2 {
        return two_color(g, active);
    }
    let has_edge = active.iter().any(|v| g.row(v) & active.bits() != 0);
    if k == 1 {
        if has_edge {
            return None;
        }
        for v in active {
            colors[v] = 0;
        }
        return Some(colors);
    }
    if clique_within(g, active) > k {
        return None;
    }
    let mut search = DsaturSearch { g, k, classes: [0; MAX_VERTICES], colors, uncolored: active.bits() };
    if search.run(0) {
        Some(search.colors)
    } else {
        None
    }
}

/// Breadth-first 2-coloring, components taken in order of least vertex.
fn two_color(g: &Graph, active: VertexSet) -> Option<[u8; MAX_VERTICES]> {
    let mut colors = [UNCOLORED; MAX_VERTICES];
    let mut sides = [0u64; 2];
    let mut left = active.bits();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        sides[0] |= 1 << start;
        let mut frontier = [1u64 << start, 0];
        let mut side = 0;
        while frontier[side] != 0 {
            let mut next = 0;
            for v in VertexSet::from_bits(frontier[side]) {
                let nb = g.row(v) & active.bits();
                if nb & sides[side] != 0 {
                    return None;
                }
                next |= nb;
            }
            next &= !sides[1 - side];
            sides[1 - side] |= next;
            frontier[side] = 0;
            side = 1 - side;
            frontier[side] = next;
        }
        left &= !(sides[0] | sides[1]);
    }
    for v in VertexSet::from_bits(sides[1]) {
        colors[v] = 1;
    }
    for v in VertexSet::from_bits(sides[0]) {
        colors[v] = 0;
    }
    Some(colors)
}

struct DsaturSearch<'a> {
    g: &'a Graph,
    k: usize,
    classes: [u64; MAX_VERTICES],
    colors: [u8; MAX_VERTICES],
    uncolored: u64,
}

impl DsaturSearch<'_> {
    /// `used` colors are open; a vertex may open at most one new color.
    fn run(&mut self, used: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        // highest saturation, then highest degree into the uncolored part,
        // then least index
        let mut pick = usize::MAX;
        let mut pick_forbidden = 0u64;
        let mut best = (0u32, 0u32);
        for v in VertexSet::from_bits(self.uncolored) {
            let row = self.g.row(v);
            let mut forbidden = 0u64;
            for c in 0..used {
                if row & self.classes[c] != 0 {
                    forbidden |= 1 << c;
                }
            }
            let sat = forbidden.count_ones();
            if sat as usize >= self.k {
                return false;
            }
            let key = (sat, (row & self.uncolored).count_ones());
            if pick == usize::MAX || key > best {
                pick = v;
                pick_forbidden = forbidden;
                best = key;
            }
        }

        let v = pick;
        self.uncolored &= !(1 << v);
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if pick_forbidden & (1 << c) != 0 {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.colors[v] = c as u8;
            if self.run(used.max(c + 1)) {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        self.colors[v] = UNCOLORED;
        self.uncolored |= 1 << v;
        false
    }
}

/// Size of the largest clique found by growing one clique from each start
/// vertex, always adding the least-indexed common neighbor.
pub fn greedy_clique_lower_bound(g: &Graph) -> usize {
    clique_within(g, g.vertices())
}

fn clique_within(g: &Graph, active: VertexSet) -> usize {
    let mut best = 0;
    for v in active {
        let mut size = 1;
        let mut cand = g.row(v) & active.bits();
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            size += 1;
            cand &= g.row(u);
        }
        best = best.max(size);
    }
    best
}

/// Greedy DSATUR coloring; an upper bound on `χ`.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![UNCOLORED; n];
    let mut classes: Vec<u64> = Vec::new();
    let mut uncolored = g.vertices().bits();
    while uncolored != 0 {
        let mut pick = usize::MAX;
        let mut best = (0u32, 0u32);
        for v in VertexSet::from_bits(uncolored) {
            let row = g.row(v);
            let sat = classes.iter().filter(|&&cls| row & cls != 0).count() as u32;
            let key = (sat, (row & uncolored).count_ones());
            if pick == usize::MAX || key > best {
                pick = v;
                best = key;
            }
        }
        let row = g.row(pick);
        let c = match classes.iter().position(|&cls| row & cls == 0) {
            Some(c) => c,
            None => {
                classes.push(0);
                classes.len() - 1
            }
        };
        classes[c] |= 1 << pick;
        colors[pick] = c as u8;
        uncolored &= !(1 << pick);
    }
    Coloring::from_raw(colors)
}

/// `χ(G)` together with a proper `χ`-coloring.
///
/// The graph with no vertices has `χ = 0`; an edgeless graph has `χ = 1`.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    if g.n() == 0 {
        return (0, Coloring::from_raw(Vec::new()));
    }
    let lower = greedy_clique_lower_bound(g);
    let greedy = dsatur_greedy(g);
    let upper = greedy.num_colors();
    for k in lower..upper {
        if let Some(c) = is_k_colorable(g, k) {
            debug_assert_eq!(c.num_colors(), k);
            return (k, c);
        }
    }
    (upper, greedy)
}

/// Largest order accepted by [`chromatic_oracle`].
pub const CHROMATIC_ORACLE_MAX_N: usize = 8;

/// `χ(G)` by trying every color vector for `k = 1, 2, ...`. Only for
/// cross-checking; limited to `n <= 8`.
pub fn chromatic_oracle(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_ORACLE_MAX_N {
        return Err(Error::OracleGuard {
            what: "vertex count",
            actual: g.n(),
            limit: CHROMATIC_ORACLE_MAX_N,
        });
    }
    Ok(brute_force_chromatic(g))
}

/// Exhaustive search shared by the oracles; no size guard.
pub(crate) fn brute_force_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u(), e.v())).collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // odometer increment
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

/// The connected graphs with `χ = Δ + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum BrooksClass {
    /// `K_n` with `n >= 2`.
    CompleteExtremal,
    /// `C_n` with `n` odd and at least 5 (`C_3` is reported as complete).
    OddCycleExtremal,
    NotExtremal,
}

/// Classifies a connected graph. By Brooks' theorem the two extremal
/// classes are exactly the connected graphs with `χ = Δ + 1` and `Δ >= 1`.
pub fn brooks_classify(g: &Graph) -> Result<BrooksClass> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n >= 2 && g.is_complete() {
        return Ok(BrooksClass::CompleteExtremal);
    }
    if n >= 3 && n % 2 == 1 && (0..n).all(|v| g.degree(v) == 2) {
        return Ok(BrooksClass::OddCycleExtremal);
    }
    Ok(BrooksClass::NotExtremal)
}
