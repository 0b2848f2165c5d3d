//! Named graphs and the extremal families, each paired with the invariant
//! values claimed for it.
//!
//! Labels are fixed per family: cycle or hub vertices first, then clique
//! fillers block by block, so encodings are stable across releases.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    Cycle,
    Path,
}

/// Invariant values claimed for a family. Only claimed values are set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExpectedInvariants {
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub chi: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub delta: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub vs: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub ivs: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub es: Option<usize>,
    /// Fields above that follow from the construction itself rather than
    /// from a published claim.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "<[_]>::is_empty"))]
    pub derived: &'static [&'static str],
}

/// A constructed graph and what it should satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub expected: ExpectedInvariants,
}

pub fn standard_graph(kind: StandardKind, n: usize) -> Result<Graph> {
    let (family, min, reason) = match kind {
        StandardKind::Complete => ("complete", 1, "n must be at least 1"),
        StandardKind::Cycle => ("cycle", 3, "n must be at least 3"),
        StandardKind::Path => ("path", 1, "n must be at least 1"),
    };
    if n < min {
        return Err(Error::InvalidParameter { family, reason });
    }
    let mut g = Graph::edgeless(n)?;
    match kind {
        StandardKind::Complete => add_clique(&mut g, &(0..n).collect::<Vec<_>>()),
        StandardKind::Cycle | StandardKind::Path => {
            for i in 1..n {
                g.connect(i - 1, i);
            }
            if kind == StandardKind::Cycle {
                g.connect(n - 1, 0);
            }
        }
    }
    Ok(g)
}

fn add_clique(g: &mut Graph, vertices: &[usize]) {
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            g.connect(a, b);
        }
    }
}

/// Adds `count` cliques of order `size`, all sharing `hub`, using fresh
/// vertices from `*next` on.
fn add_fan_of_cliques(g: &mut Graph, hub: usize, count: usize, size: usize, next: &mut usize) {
    for _ in 0..count {
        let mut clique = Vec::with_capacity(size);
        clique.push(hub);
        clique.extend(*next..*next + size - 1);
        *next += size - 1;
        add_clique(g, &clique);
    }
}

fn check_order(family: &'static str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::InvalidParameter { family, reason: "construction exceeds 62 vertices" });
    }
    Ok(())
}

/// The Kneser graph `K(5, 2)`: vertices are the 2-subsets of `{0..4}` in
/// lexicographic order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut g = Graph::edgeless(pairs.len()).expect("10 vertices");
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.connect(i, j);
            }
        }
    }
    g
}

/// `G_{n,k}`: the cycle `C_{2n}` (vertices `0..2n`) with two copies of
/// `K_k` hanging off every cycle vertex. `n >= 2`, `k >= 3`.
pub fn gnk(n: usize, k: usize) -> Result<(Graph, ExpectedInvariants)> {
    if n < 2 {
        return Err(Error::InvalidParameter { family: "gnk", reason: "n must be at least 2" });
    }
    if k < 3 {
        return Err(Error::InvalidParameter { family: "gnk", reason: "k must be at least 3" });
    }
    let order = 2 * n * (2 * k - 1);
    check_order("gnk", order)?;
    let mut g = Graph::edgeless(order)?;
    let len = 2 * n;
    for i in 0..len {
        g.connect(i, (i + 1) % len);
    }
    let mut next = len;
    for hub in 0..len {
        add_fan_of_cliques(&mut g, hub, 2, k, &mut next);
    }
    debug_assert_eq!(next, order);
    let expected = ExpectedInvariants {
        chi: Some(k),
        delta: Some(2 * k),
        vs: Some(2 * n),
        ivs: Some(3 * n),
        ..Default::default()
    };
    Ok((g, expected))
}

fn odd_k(family: &'static str, k: usize) -> Result<()> {
    if k.is_multiple_of(2) {
        return Err(Error::InvalidParameter { family, reason: "k must be odd" });
    }
    if k < 3 {
        return Err(Error::InvalidParameter { family, reason: "k must be at least 3" });
    }
    Ok(())
}

/// `H_k`: two copies of `K_{(k+1)/2}` sharing vertex 0. `k` odd, `k >= 3`.
pub fn h_k(k: usize) -> Result<Graph> {
    odd_k("hk", k)?;
    check_order("hk", k)?;
    let mut g = Graph::edgeless(k)?;
    let mut next = 1;
    add_fan_of_cliques(&mut g, 0, 2, k.div_ceil(2), &mut next);
    Ok(g)
}

/// `G_k`: two copies of `H_k` (hubs `0` and `k`) joined by the edge between
/// the hubs.
pub fn g_k(k: usize) -> Result<(Graph, ExpectedInvariants)> {
    odd_k("gk", k)?;
    check_order("gk", 2 * k)?;
    let half = h_k(k)?;
    let mut g = half.disjoint_union(&half)?;
    g.connect(0, k);
    let expected = ExpectedInvariants {
        chi: Some(k.div_ceil(2)),
        delta: Some(k),
        vs: Some(2),
        ivs: Some(3),
        ..Default::default()
    };
    Ok((g, expected))
}

/// `H'_k`: `k` triangles sharing vertex 0 (the friendship graph). `k >= 1`.
pub fn h_prime_k(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter { family: "hprimek", reason: "k must be at least 1" });
    }
    check_order("hprimek", 2 * k + 1)?;
    let mut g = Graph::edgeless(2 * k + 1)?;
    let mut next = 1;
    add_fan_of_cliques(&mut g, 0, k, 3, &mut next);
    Ok(g)
}

/// `G'_k`: two copies of `H'_k` (hubs `0` and `2k+1`) joined by an edge
/// between the hubs.
pub fn g_prime_k(k: usize) -> Result<(Graph, ExpectedInvariants)> {
    if k < 1 {
        return Err(Error::InvalidParameter { family: "gprimek", reason: "k must be at least 1" });
    }
    let half_order = 2 * k + 1;
    check_order("gprimek", 2 * half_order)?;
    let half = h_prime_k(k)?;
    let mut g = half.disjoint_union(&half)?;
    g.connect(0, half_order);
    let expected = ExpectedInvariants {
        chi: Some(3),
        delta: Some(2 * k + 1),
        vs: Some(2),
        ivs: Some(k + 1),
        derived: &["delta"],
        ..Default::default()
    };
    Ok((g, expected))
}

/// Two copies of `K_{k/2+1}` sharing vertex 0. `k` even, `k >= 2`.
pub fn thm4_sharpness(k: usize) -> Result<(Graph, ExpectedInvariants)> {
    if k % 2 == 1 {
        return Err(Error::InvalidParameter { family: "thm4sharp", reason: "k must be even" });
    }
    if k < 2 {
        return Err(Error::InvalidParameter { family: "thm4sharp", reason: "k must be at least 2" });
    }
    check_order("thm4sharp", k + 1)?;
    let mut g = Graph::edgeless(k + 1)?;
    let mut next = 1;
    add_fan_of_cliques(&mut g, 0, 2, k / 2 + 1, &mut next);
    let expected = ExpectedInvariants {
        chi: Some(k / 2 + 1),
        delta: Some(k),
        vs: Some(1),
        es: Some(2),
        ..Default::default()
    };
    Ok((g, expected))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Petersen,
    Complete,
    Cycle,
    Path,
    Gnk,
    Hk,
    Gk,
    HPrimeK,
    GPrimeK,
    Thm4Sharp,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Petersen,
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::Gnk,
        Family::Hk,
        Family::Gk,
        Family::HPrimeK,
        Family::GPrimeK,
        Family::Thm4Sharp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Petersen => "petersen",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Gnk => "gnk",
            Family::Hk => "hk",
            Family::Gk => "gk",
            Family::HPrimeK => "hprimek",
            Family::GPrimeK => "gprimek",
            Family::Thm4Sharp => "thm4sharp",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Names of the integer parameters, in order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Petersen => &[],
            Family::Gnk => &["n", "k"],
            Family::Complete | Family::Cycle | Family::Path => &["n"],
            _ => &["k"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family plus its parameters, validated by [`ConstructionSpec::build`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl ConstructionSpec {
    pub fn new(family: Family, params: &[usize]) -> Self {
        ConstructionSpec { family, params: params.to_vec() }
    }

    pub fn build(&self) -> Result<Construction> {
        let family = self.family;
        if self.params.len() != family.params().len() {
            return Err(Error::InvalidParameter {
                family: family.name(),
                reason: match family.params().len() {
                    0 => "takes no parameters",
                    1 => "takes exactly one parameter",
                    _ => "takes exactly two parameters (n k)",
                },
            });
        }
        let p = &self.params;
        let plain = |graph: Graph| Construction { graph, expected: ExpectedInvariants::default() };
        let with = |(graph, expected): (Graph, ExpectedInvariants)| Construction { graph, expected };
        Ok(match family {
            Family::Petersen => Construction {
                graph: petersen(),
                expected: ExpectedInvariants { vs: Some(3), ..Default::default() },
            },
            Family::Complete => plain(standard_graph(StandardKind::Complete, p[0])?),
            Family::Cycle => plain(standard_graph(StandardKind::Cycle, p[0])?),
            Family::Path => plain(standard_graph(StandardKind::Path, p[0])?),
            Family::Gnk => with(gnk(p[0], p[1])?),
            Family::Hk => plain(h_k(p[0])?),
            Family::Gk => with(g_k(p[0])?),
            Family::HPrimeK => plain(h_prime_k(p[0])?),
            Family::GPrimeK => with(g_prime_k(p[0])?),
            Family::Thm4Sharp => with(thm4_sharpness(p[0])?),
        })
    }
}
