//! Per-graph checks of the structural results about `vs_χ`, `ivs_χ` and
//! `es_χ`.
//!
//! A check first decides whether its hypothesis applies to the graph; only
//! then is the conclusion evaluated. Hypotheses of the form
//! `χ > Δ/2 + 1` are evaluated in integers as `2χ > Δ + 2`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::chromatic::{chromatic_number, color_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::stability::{stability_with_chi, StabilityKind, StabilityResult};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    /// `χ ∈ {Δ, Δ+1}` implies `vs = ivs`.
    TheoremMain,
    /// `χ > Δ/2 + 1` implies `vs = es`.
    TheoremEs,
    /// `vs(G) + vs(Ḡ) <= n + 1` unless `G` is edgeless or complete.
    NordhausGaddum,
    /// Connected, `χ = Δ` and `vs = 1` implies some maximum-degree vertex
    /// alone lowers `χ`.
    LemmaDelta,
    /// `vs <= ivs`, `vs <= es` and `ivs <= floor(n / χ)`.
    Bounds,
    /// Open question: does `2χ >= Δ + offset` imply `vs = ivs`? The
    /// question as posed uses `offset = 2`.
    Problem1 { offset: usize },
}

impl Check {
    /// The checks whose conclusions are proved; a violation of any of them
    /// means a solver bug.
    pub const PROVED: [Check; 5] =
        [Check::TheoremMain, Check::TheoremEs, Check::NordhausGaddum, Check::LemmaDelta, Check::Bounds];

    pub const PROBLEM1: Check = Check::Problem1 { offset: 2 };

    pub fn id(self) -> &'static str {
        match self {
            Check::TheoremMain => "theorem-main",
            Check::TheoremEs => "theorem-es",
            Check::NordhausGaddum => "nordhaus-gaddum",
            Check::LemmaDelta => "lemma-delta",
            Check::Bounds => "bounds",
            Check::Problem1 { .. } => "problem1",
        }
    }

    /// Parses a check id; `problem1` gets the default offset.
    pub fn from_id(id: &str) -> Option<Check> {
        Check::PROVED.into_iter().chain([Check::PROBLEM1]).find(|c| c.id() == id)
    }

    /// Human-readable hypothesis and conclusion.
    pub fn statement(self) -> String {
        use alloc::format;
        match self {
            Check::TheoremMain => "chi in {Delta, Delta+1} => vs = ivs".into(),
            Check::TheoremEs => "2*chi > Delta + 2 => vs = es".into(),
            Check::NordhausGaddum => {
                "G has an edge and is not complete => vs(G) + vs(complement G) <= n + 1".into()
            }
            Check::LemmaDelta => {
                "connected, chi = Delta, vs = 1 => some vertex of degree Delta has chi(G - v) = Delta - 1"
                    .into()
            }
            Check::Bounds => "vs <= ivs, vs <= es, ivs <= floor(n / chi)".into(),
            Check::Problem1 { offset } => format!("2*chi >= Delta + {offset} => vs = ivs"),
        }
    }
}

/// Quantities computed while evaluating a check; unset ones were not needed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Quantities {
    pub n: usize,
    pub edges: usize,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub delta: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub chi: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub connected: Option<bool>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub vs: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub ivs: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub es: Option<usize>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub vs_complement: Option<usize>,
    /// Maximum-degree vertex whose deletion lowers `χ` (lemma check).
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub lowering_vertex: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheckOutcome {
    pub check_id: &'static str,
    /// graph6 of the checked graph.
    pub graph: String,
    pub hypothesis_applies: bool,
    /// Present exactly when the hypothesis applies.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub holds: Option<bool>,
    pub data: Quantities,
    /// Stability results computed along the way, with their witnesses.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Vec::is_empty"))]
    pub witnesses: Vec<StabilityResult>,
}

impl CheckOutcome {
    pub fn is_violation(&self) -> bool {
        self.holds == Some(false)
    }
}

/// Lazily computed invariants of one graph, shared between checks.
pub struct Profile<'a> {
    g: &'a Graph,
    chi: Option<usize>,
    results: [Option<StabilityResult>; 3],
    complement_vs: Option<usize>,
}

impl<'a> Profile<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Profile { g, chi: None, results: [None, None, None], complement_vs: None }
    }

    pub fn graph(&self) -> &'a Graph {
        self.g
    }

    pub fn chi(&mut self) -> usize {
        *self.chi.get_or_insert_with(|| chromatic_number(self.g).0)
    }

    /// Panics on an edgeless graph.
    pub fn stability(&mut self, kind: StabilityKind) -> &StabilityResult {
        let slot = match kind {
            StabilityKind::Vertex => 0,
            StabilityKind::IndependentVertex => 1,
            StabilityKind::Edge => 2,
        };
        if self.results[slot].is_none() {
            let chi = self.chi();
            self.results[slot] = Some(stability_with_chi(self.g, kind, chi));
        }
        self.results[slot].as_ref().expect("just computed")
    }

    fn value(&mut self, kind: StabilityKind) -> usize {
        self.stability(kind).value
    }

    fn complement_vs(&mut self) -> usize {
        let g = self.g;
        *self.complement_vs.get_or_insert_with(|| {
            let c = g.complement();
            let chi = chromatic_number(&c).0;
            stability_with_chi(&c, StabilityKind::Vertex, chi).value
        })
    }

    fn computed(&self, kinds: &[StabilityKind]) -> Vec<StabilityResult> {
        kinds.iter().filter_map(|k| self.results.iter().flatten().find(|r| r.kind == *k).cloned()).collect()
    }
}

/// Evaluates `check` on any graph. Checks that require an edge report an
/// edgeless graph as outside their hypothesis.
pub fn evaluate(check: Check, g: &Graph) -> CheckOutcome {
    evaluate_profile(check, &mut Profile::new(g))
}

pub fn evaluate_profile(check: Check, p: &mut Profile<'_>) -> CheckOutcome {
    let g = p.g;
    let mut data = Quantities { n: g.n(), edges: g.edge_count(), ..Default::default() };
    let outcome = |applies: bool, holds: bool, data: Quantities, kinds: &[StabilityKind], p: &Profile<'_>| {
        CheckOutcome {
            check_id: check.id(),
            graph: to_graph6(g).unwrap_or_default(),
            hypothesis_applies: applies,
            holds: applies.then_some(holds),
            data,
            witnesses: p.computed(kinds),
        }
    };
    use StabilityKind::{Edge as Es, IndependentVertex as Ivs, Vertex as Vs};

    if !g.has_any_edge() {
        return outcome(false, false, data, &[], p);
    }
    let delta = g.max_degree();
    let chi = p.chi();
    data.delta = Some(delta);
    data.chi = Some(chi);

    match check {
        Check::TheoremMain | Check::Problem1 { .. } => {
            let applies = match check {
                Check::TheoremMain => chi == delta || chi == delta + 1,
                Check::Problem1 { offset } => 2 * chi >= delta + offset,
                _ => unreachable!(),
            };
            if !applies {
                return outcome(false, false, data, &[], p);
            }
            let (vs, ivs) = (p.value(Vs), p.value(Ivs));
            data.vs = Some(vs);
            data.ivs = Some(ivs);
            outcome(true, vs == ivs, data, &[Vs, Ivs], p)
        }
        Check::TheoremEs => {
            if 2 * chi <= delta + 2 {
                return outcome(false, false, data, &[], p);
            }
            let (vs, es) = (p.value(Vs), p.value(Es));
            data.vs = Some(vs);
            data.es = Some(es);
            outcome(true, vs == es, data, &[Vs, Es], p)
        }
        Check::NordhausGaddum => {
            if g.is_complete() {
                return outcome(false, false, data, &[], p);
            }
            let vs = p.value(Vs);
            let vs_c = p.complement_vs();
            data.vs = Some(vs);
            data.vs_complement = Some(vs_c);
            outcome(true, vs + vs_c <= g.n() + 1, data, &[Vs], p)
        }
        Check::LemmaDelta => {
            let connected = g.is_connected();
            data.connected = Some(connected);
            if !connected || chi != delta {
                return outcome(false, false, data, &[], p);
            }
            let vs = p.value(Vs);
            data.vs = Some(vs);
            if vs != 1 {
                return outcome(false, false, data, &[], p);
            }
            data.lowering_vertex = lowering_max_degree_vertex(g, delta);
            let holds = data.lowering_vertex.is_some();
            outcome(true, holds, data, &[Vs], p)
        }
        Check::Bounds => {
            let (vs, ivs, es) = (p.value(Vs), p.value(Ivs), p.value(Es));
            data.vs = Some(vs);
            data.ivs = Some(ivs);
            data.es = Some(es);
            let holds = vs <= ivs && vs <= es && ivs <= g.n() / chi;
            outcome(true, holds, data, &[Vs, Ivs, Es], p)
        }
    }
}

/// Least vertex of degree `Δ` whose deletion leaves a `(Δ-1)`-colorable
/// graph.
fn lowering_max_degree_vertex(g: &Graph, delta: usize) -> Option<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == delta).find(|&v| {
        let rest = g.vertices().difference(VertexSet::singleton(v));
        color_within(g, rest, delta - 1).is_some()
    })
}

fn require_edge(g: &Graph) -> Result<()> {
    if g.has_any_edge() {
        Ok(())
    } else {
        Err(Error::Edgeless)
    }
}

pub fn check_theorem_main(g: &Graph) -> Result<CheckOutcome> {
    require_edge(g)?;
    Ok(evaluate(Check::TheoremMain, g))
}

pub fn check_theorem_es(g: &Graph) -> Result<CheckOutcome> {
    require_edge(g)?;
    Ok(evaluate(Check::TheoremEs, g))
}

/// Defined on every graph; edgeless and complete graphs fall outside the
/// hypothesis.
pub fn check_nordhaus_gaddum(g: &Graph) -> CheckOutcome {
    evaluate(Check::NordhausGaddum, g)
}

pub fn check_lemma_delta(g: &Graph) -> Result<CheckOutcome> {
    require_edge(g)?;
    Ok(evaluate(Check::LemmaDelta, g))
}

pub fn check_bounds(g: &Graph) -> Result<CheckOutcome> {
    require_edge(g)?;
    Ok(evaluate(Check::Bounds, g))
}

/// The open-question check with hypothesis `2χ >= Δ + offset`.
pub fn check_problem1(g: &Graph, offset: usize) -> Result<CheckOutcome> {
    require_edge(g)?;
    Ok(evaluate(Check::Problem1 { offset }, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{g_k, gnk, petersen, standard_graph, thm4_sharpness, StandardKind};

    fn std_graph(kind: StandardKind, n: usize) -> Graph {
        standard_graph(kind, n).unwrap()
    }

    #[test]
    fn theorem_main_examples() {
        let k5 = check_theorem_main(&std_graph(StandardKind::Complete, 5)).unwrap();
        assert!(k5.hypothesis_applies);
        assert_eq!(k5.holds, Some(true));
        assert_eq!((k5.data.vs, k5.data.ivs), (Some(1), Some(1)));

        let p = check_theorem_main(&petersen()).unwrap();
        assert!(p.hypothesis_applies);
        assert_eq!(p.holds, Some(true));
        assert_eq!(p.data.vs, Some(3));
        assert_eq!(p.data.ivs, Some(3));
        assert_eq!(p.witnesses.len(), 2);

        let gnk23 = check_theorem_main(&gnk(2, 3).unwrap().0).unwrap();
        assert!(!gnk23.hypothesis_applies);
        assert_eq!(gnk23.holds, None);

        assert_eq!(check_theorem_main(&Graph::edgeless(3).unwrap()), Err(Error::Edgeless));
    }

    #[test]
    fn theorem_es_examples() {
        let k4 = check_theorem_es(&std_graph(StandardKind::Complete, 4)).unwrap();
        assert_eq!(k4.holds, Some(true));
        assert_eq!((k4.data.vs, k4.data.es), (Some(1), Some(1)));

        // exactly on the boundary chi = Delta/2 + 1
        let sharp = check_theorem_es(&thm4_sharpness(4).unwrap().0).unwrap();
        assert!(!sharp.hypothesis_applies);

        let c7 = check_theorem_es(&std_graph(StandardKind::Cycle, 7)).unwrap();
        assert_eq!(c7.holds, Some(true));
    }

    #[test]
    fn nordhaus_gaddum_examples() {
        let c5 = check_nordhaus_gaddum(&std_graph(StandardKind::Cycle, 5));
        assert_eq!(c5.holds, Some(true));
        assert_eq!((c5.data.vs, c5.data.vs_complement), (Some(1), Some(1)));

        assert!(!check_nordhaus_gaddum(&std_graph(StandardKind::Complete, 6)).hypothesis_applies);
        assert!(!check_nordhaus_gaddum(&Graph::edgeless(3).unwrap()).hypothesis_applies);

        let p4 = check_nordhaus_gaddum(&std_graph(StandardKind::Path, 4));
        assert_eq!(p4.holds, Some(true));
        // P4 is self-complementary; vertex cover number 2
        assert_eq!((p4.data.vs, p4.data.vs_complement), (Some(2), Some(2)));
    }

    #[test]
    fn lemma_delta_examples() {
        let p3 = check_lemma_delta(&std_graph(StandardKind::Path, 3)).unwrap();
        assert!(p3.hypothesis_applies);
        assert_eq!(p3.holds, Some(true));
        assert_eq!(p3.data.lowering_vertex, Some(1));

        let c4 = check_lemma_delta(&std_graph(StandardKind::Cycle, 4)).unwrap();
        assert!(!c4.hypothesis_applies);
        assert_eq!(c4.data.vs, Some(2));

        assert!(!check_lemma_delta(&thm4_sharpness(4).unwrap().0).unwrap().hypothesis_applies);
    }

    #[test]
    fn bounds_examples() {
        let p = check_bounds(&petersen()).unwrap();
        assert_eq!(p.holds, Some(true));
        assert_eq!((p.data.vs, p.data.ivs, p.data.es), (Some(3), Some(3), Some(3)));

        let k2 = check_bounds(&std_graph(StandardKind::Complete, 2)).unwrap();
        assert_eq!((k2.data.vs, k2.data.ivs, k2.data.es), (Some(1), Some(1), Some(1)));
        assert_eq!(k2.holds, Some(true));
    }

    #[test]
    fn problem1_boundaries() {
        for k in [3, 5] {
            let out = check_problem1(&g_k(k).unwrap().0, 2).unwrap();
            assert!(!out.hypothesis_applies);
            // with the weakened threshold 2chi >= Delta + 1 the family is a counterexample
            let weak = check_problem1(&g_k(k).unwrap().0, 1).unwrap();
            assert!(weak.hypothesis_applies);
            assert_eq!(weak.holds, Some(false));
        }
        let g = gnk(2, 3).unwrap().0;
        assert!(!check_problem1(&g, 2).unwrap().hypothesis_applies);
        let weak = check_problem1(&g, 0).unwrap();
        assert_eq!(weak.holds, Some(false));

        // boundary graph is included by the non-strict inequality
        let sharp = check_problem1(&thm4_sharpness(4).unwrap().0, 2).unwrap();
        assert!(sharp.hypothesis_applies);
    }

    #[test]
    fn ids_round_trip() {
        for c in Check::PROVED.into_iter().chain([Check::PROBLEM1]) {
            assert_eq!(Check::from_id(c.id()), Some(c));
        }
        assert_eq!(Check::from_id("bogus"), None);
    }
}
