//! The checked statement catalog.
//!
//! Every statement is a hypothesis-gated decidable predicate over one
//! finite *-ring. An outcome is one of: holds (possibly vacuously, when
//! the quantified domain was empty), violated (with a replayable witness),
//! or hypothesis-not-met (naming the failing hypothesis). A `violated` on
//! any corpus ring is a defect in either the checker or the construction,
//! so the corpus runner treats it as fatal.

use crate::analysis::RingAnalysis;
use crate::annihilators::{is_ideal, is_properly_maximal};
use crate::bitset::ElementSet;
use crate::graph_analysis::{
    self, all_pairs_distances, components_without, cut_vertices, girth, is_clique,
    is_complemented, metrics, pendant_vertices, Dist,
};
use crate::ring::{ElementId, RingSpec};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TheoremId {
    ProdConn,
    CentralConn,
    SplitIdeal,
    SideIdeal,
    NonzdSum,
    CutPropmax,
    SideIdempotent,
    Side,
    CutAtom,
    CutIffPendant,
    AnnSize2,
    CutsetClique,
    DistCover,
    Cp4Bipartite,
    Dist3,
    CompConnCp6,
    UniversalCp4,
    CompGirth,
    TriangleFree,
    Girth,
    CompDiam2Girth3,
    NotComplemented,
    Z3Z3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 23] = [
        TheoremId::ProdConn,
        TheoremId::CentralConn,
        TheoremId::SplitIdeal,
        TheoremId::SideIdeal,
        TheoremId::NonzdSum,
        TheoremId::CutPropmax,
        TheoremId::SideIdempotent,
        TheoremId::Side,
        TheoremId::CutAtom,
        TheoremId::CutIffPendant,
        TheoremId::AnnSize2,
        TheoremId::CutsetClique,
        TheoremId::DistCover,
        TheoremId::Cp4Bipartite,
        TheoremId::Dist3,
        TheoremId::CompConnCp6,
        TheoremId::UniversalCp4,
        TheoremId::CompGirth,
        TheoremId::TriangleFree,
        TheoremId::Girth,
        TheoremId::CompDiam2Girth3,
        TheoremId::NotComplemented,
        TheoremId::Z3Z3,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::ProdConn => "TH-PROD-CONN",
            TheoremId::CentralConn => "COR-CENTRAL-CONN",
            TheoremId::SplitIdeal => "TH-SPLIT-IDEAL",
            TheoremId::SideIdeal => "TH-SIDE-IDEAL",
            TheoremId::NonzdSum => "PROP-NONZD-SUM",
            TheoremId::CutPropmax => "PROP-CUT-PROPMAX",
            TheoremId::SideIdempotent => "TH-SIDE-IDEMPOTENT",
            TheoremId::Side => "COR-SIDE",
            TheoremId::CutAtom => "TH-CUT-ATOM",
            TheoremId::CutIffPendant => "TH-CUT-IFF-PENDANT",
            TheoremId::AnnSize2 => "COR-ANN-SIZE-2",
            TheoremId::CutsetClique => "TH-CUTSET-CLIQUE",
            TheoremId::DistCover => "LEM-DIST-COVER",
            TheoremId::Cp4Bipartite => "PROP-CP4-BIPARTITE",
            TheoremId::Dist3 => "LEM-DIST3",
            TheoremId::CompConnCp6 => "TH-COMP-CONN-CP6",
            TheoremId::UniversalCp4 => "COR-UNIVERSAL-CP4",
            TheoremId::CompGirth => "PROP-COMP-GIRTH",
            TheoremId::TriangleFree => "LEM-TRIANGLEFREE",
            TheoremId::Girth => "TH-GIRTH",
            TheoremId::CompDiam2Girth3 => "TH-COMP-DIAM2-GIRTH3",
            TheoremId::NotComplemented => "LEM-NOT-COMPLEMENTED",
            TheoremId::Z3Z3 => "TH-Z3Z3",
        }
    }

    /// One-line statement of the checked predicate.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::ProdConn => {
                "a product of two *-rings, each with strong zero-divisors, has a connected strong graph of diameter at most 4"
            }
            TheoremId::CentralConn => {
                "a *-ring with a nontrivial central projection has a connected strong graph"
            }
            TheoremId::SplitIdeal => "if the strong graph splits via a, then {0, a} is an ideal",
            TheoremId::SideIdeal => {
                "if the strong graph splits via a and X minus a is a complete side, V(X) with 0 is an ideal"
            }
            TheoremId::NonzdSum => {
                "if the strong graph has a cut vertex, sums of non-vertices land among the vertices or 0"
            }
            TheoremId::CutPropmax => {
                "the principal annihilator of a cut vertex is properly maximal"
            }
            TheoremId::SideIdempotent => {
                "in a p.q.-Baer *-ring, a complete split side of more than two vertices forces b^2 in {0, b} off the cut vertex"
            }
            TheoremId::Side => {
                "in a p.q.-Baer *-ring, a non-near-idempotent on a split side blocks completeness, and a complete side joins 0 into an ideal"
            }
            TheoremId::CutAtom => {
                "in a p.q.-Baer *-ring, every cut vertex is an atom of the central projection lattice"
            }
            TheoremId::CutIffPendant => {
                "in a p.q.-Baer *-ring, the strong graph has a cut vertex iff it has a pendant vertex"
            }
            TheoremId::AnnSize2 => {
                "in a p.q.-Baer *-ring, the strong graph has a cut vertex iff some element has a two-element right annihilator"
            }
            TheoremId::CutsetClique => {
                "in a p.q.-Baer *-ring, the cut vertices form a complete subgraph"
            }
            TheoremId::DistCover => {
                "in a p.q.-Baer *-ring, distances agree with distances between distinct central covers"
            }
            TheoremId::Cp4Bipartite => {
                "a p.q.-Baer *-ring with exactly four central projections has a complete bipartite strong graph with disconnected complement"
            }
            TheoremId::Dist3 => {
                "orthogonal nontrivial central projections e, f with e + f != 1 put 1-e and 1-f at distance exactly 3"
            }
            TheoremId::CompConnCp6 => {
                "the complement of the strong graph is connected iff the ring has at least six central projections"
            }
            TheoremId::UniversalCp4 => {
                "a vertex adjacent to all others forces exactly four central projections"
            }
            TheoremId::CompGirth => {
                "a disconnected complement of the strong graph has girth 3 or infinity"
            }
            TheoremId::TriangleFree => {
                "in a triangle-free strong graph over a p.q.-Baer *-ring, adjacency means complementary central covers"
            }
            TheoremId::Girth => {
                "girth 3 iff orthogonal non-complementary nontrivial central projections exist iff the lattice has a 3-chain avoiding 0; girth 4 iff triangle-free with two cover classes of size at least 2"
            }
            TheoremId::CompDiam2Girth3 => {
                "a connected complement of the strong graph has diameter 2 and girth 3"
            }
            TheoremId::NotComplemented => {
                "a connected complement of the strong graph is never complemented"
            }
            TheoremId::Z3Z3 => {
                "with some vertex differing from its central cover, the complement is complemented iff the ring is the order-9 product of two 3-element fields"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let up = s.to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.code() == up)
            .ok_or_else(|| format!("unknown theorem id: {s}"))
    }
}

/// Replayable counterexample data: the elements involved, their labels,
/// and a short description of what failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: &'static str,
    pub elements: Vec<ElementId>,
    pub labels: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Holds { vacuous: bool },
    Violated(Witness),
    HypothesisNotMet {
        hypothesis: String,
        witness: Option<Witness>,
    },
}

impl CheckStatus {
    pub fn is_violated(&self) -> bool {
        matches!(self, CheckStatus::Violated(_))
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, CheckStatus::Holds { .. })
    }

    pub fn is_vacuous_holds(&self) -> bool {
        matches!(self, CheckStatus::Holds { vacuous: true })
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: TheoremId,
    pub status: CheckStatus,
    pub elapsed: Duration,
}

pub fn check(id: TheoremId, an: &RingAnalysis) -> CheckResult {
    let start = Instant::now();
    let run = match id {
        TheoremId::ProdConn => check_prod_conn(an),
        TheoremId::CentralConn => check_central_conn(an),
        TheoremId::SplitIdeal => check_split_ideal(an),
        TheoremId::SideIdeal => check_side_ideal(an),
        TheoremId::NonzdSum => check_nonzd_sum(an),
        TheoremId::CutPropmax => check_cut_propmax(an),
        TheoremId::SideIdempotent => check_side_idempotent(an),
        TheoremId::Side => check_side(an),
        TheoremId::CutAtom => check_cut_atom(an),
        TheoremId::CutIffPendant => check_cut_iff_pendant(an),
        TheoremId::AnnSize2 => check_ann_size_2(an),
        TheoremId::CutsetClique => check_cutset_clique(an),
        TheoremId::DistCover => check_dist_cover(an),
        TheoremId::Cp4Bipartite => check_cp4_bipartite(an),
        TheoremId::Dist3 => check_dist3(an),
        TheoremId::CompConnCp6 => check_comp_conn_cp6(an),
        TheoremId::UniversalCp4 => check_universal_cp4(an),
        TheoremId::CompGirth => check_comp_girth(an),
        TheoremId::TriangleFree => check_triangle_free(an),
        TheoremId::Girth => check_girth(an),
        TheoremId::CompDiam2Girth3 => check_comp_diam2_girth3(an),
        TheoremId::NotComplemented => check_not_complemented(an),
        TheoremId::Z3Z3 => check_z3z3(an),
    };
    let status = match run {
        Ok(s) | Err(s) => s,
    };
    CheckResult {
        id,
        status,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(an: &RingAnalysis) -> Vec<CheckResult> {
    TheoremId::ALL.iter().map(|&id| check(id, an)).collect()
}

type Gate = Result<(), CheckStatus>;
type Outcome = Result<CheckStatus, CheckStatus>;

fn wit(an: &RingAnalysis, kind: &'static str, ids: Vec<ElementId>, detail: String) -> Witness {
    let labels = ids.iter().map(|&a| an.label(a)).collect();
    Witness {
        kind,
        elements: ids,
        labels,
        detail,
    }
}

fn holds(vacuous: bool) -> CheckStatus {
    CheckStatus::Holds { vacuous }
}

fn not_met(hypothesis: impl Into<String>, witness: Option<Witness>) -> CheckStatus {
    CheckStatus::HypothesisNotMet {
        hypothesis: hypothesis.into(),
        witness,
    }
}

fn require_pq(an: &RingAnalysis) -> Gate {
    if an.classification.is_pq_baer {
        return Ok(());
    }
    let witness = an.classification.pq_witness.map(|a| {
        wit(
            an,
            "not-pq-baer",
            vec![a],
            format!(
                "r_R(aR) for a = {} is not generated by a projection",
                an.label(a)
            ),
        )
    });
    Err(not_met("not p.q.-Baer", witness))
}

fn require_cp_at_least(an: &RingAnalysis, bound: usize) -> Gate {
    if an.cp.len() >= bound {
        return Ok(());
    }
    let ids: Vec<ElementId> = an.cp.elements().to_vec();
    Err(not_met(
        format!("|CP(R)| < {bound}"),
        Some(wit(
            an,
            "central-projections",
            ids,
            format!("only {} central projections", an.cp.len()),
        )),
    ))
}

fn require_nonempty_graph(an: &RingAnalysis) -> Gate {
    if an.strong.vertex_count() > 0 {
        Ok(())
    } else {
        Err(not_met("empty strong vertex set", None))
    }
}

/// The standing scope for the lattice-based results: p.q.-Baer with at
/// least four central projections.
fn require_pq_cp4(an: &RingAnalysis) -> Gate {
    require_pq(an)?;
    require_cp_at_least(an, 4)
}

fn cut_vertex_list(an: &RingAnalysis) -> Vec<ElementId> {
    cut_vertices(&an.strong).to_vec()
}

/// The split sides {a} + K over single components K of G - a. A side
/// spanning two or more components always contains a non-adjacent pair,
/// so these are the only sides a completeness hypothesis can select --
/// which keeps the side checks polynomial even on star graphs whose full
/// bipartition count explodes.
fn component_sides(an: &RingAnalysis, a: ElementId) -> Vec<Vec<ElementId>> {
    components_without(&an.strong, a)
        .expect("cut vertex is in the graph")
        .into_iter()
        .map(|mut comp| {
            comp.push(a);
            comp.sort_unstable();
            comp
        })
        .collect()
}

/// Whether any split via `a` has a side with more than two vertices: some
/// component has two, or three components allow bundling two singletons.
fn has_large_side(an: &RingAnalysis, a: ElementId) -> bool {
    let comps = components_without(&an.strong, a).expect("cut vertex is in the graph");
    comps.len() >= 3 || comps.iter().any(|c| c.len() >= 2)
}

// ---------------------------------------------------------------------
// Connectivity of products and of rings with central projections
// ---------------------------------------------------------------------

fn check_prod_conn(an: &RingAnalysis) -> Outcome {
    let (left, right) = match an.ring.spec() {
        RingSpec::Product(l, r) => (l.clone(), r.clone()),
        _ => return Err(not_met("not constructed as a direct product", None)),
    };
    for factor in [&left, &right] {
        let ring = factor
            .build(an.ring.order())
            .expect("factor of an already-built product");
        let table = crate::annihilators::AnnihilatorTable::build(&ring);
        let has_vertex = ring
            .elements()
            .any(|a| a != ring.zero() && table.has_nonzero_principal_ann(a));
        if !has_vertex {
            return Err(not_met(
                format!("factor {} has an empty strong vertex set", factor),
                None,
            ));
        }
    }
    let m = metrics(&an.strong);
    if !m.connected {
        return Err(CheckStatus::Violated(wit(
            an,
            "disconnected-product-graph",
            vec![],
            format!("{} components", m.component_count),
        )));
    }
    match m.diameter {
        Some(Dist::Finite(d)) if d <= 4 => Ok(holds(false)),
        other => Err(CheckStatus::Violated(wit(
            an,
            "diameter-exceeds-4",
            vec![],
            format!("diameter {:?}", other),
        ))),
    }
}

fn check_central_conn(an: &RingAnalysis) -> Outcome {
    let Some(e) = an.cp.nontrivial().next() else {
        return Err(not_met("no nontrivial central projection", None));
    };
    let m = metrics(&an.strong);
    if m.connected {
        Ok(holds(false))
    } else {
        Err(CheckStatus::Violated(wit(
            an,
            "disconnected-despite-central-projection",
            vec![e],
            format!(
                "nontrivial central projection {} but {} components",
                an.label(e),
                m.component_count
            ),
        )))
    }
}

// ---------------------------------------------------------------------
// Cut vertices and splits
// ---------------------------------------------------------------------

fn check_split_ideal(an: &RingAnalysis) -> Outcome {
    require_nonempty_graph(an)?;
    let cuts = cut_vertex_list(an);
    for &a in &cuts {
        let set = ElementSet::from_ids(an.ring.order(), [an.ring.zero(), a]);
        if !is_ideal(&an.ring, &set) {
            return Err(CheckStatus::Violated(wit(
                an,
                "zero-a-not-ideal",
                vec![a],
                format!("{{0, {}}} is not an ideal", an.label(a)),
            )));
        }
    }
    Ok(holds(cuts.is_empty()))
}

fn check_side_ideal(an: &RingAnalysis) -> Outcome {
    require_nonempty_graph(an)?;
    let mut exercised = false;
    for a in cut_vertex_list(an) {
        for side in component_sides(an, a) {
            let others: Vec<ElementId> = side.iter().copied().filter(|&v| v != a).collect();
            if others.len() < 2 || !is_clique(&an.strong, &others).unwrap() {
                continue;
            }
            exercised = true;
            let mut ids = side.clone();
            ids.push(an.ring.zero());
            let set = ElementSet::from_ids(an.ring.order(), ids.iter().copied());
            if !is_ideal(&an.ring, &set) {
                return Err(CheckStatus::Violated(wit(
                    an,
                    "side-not-ideal",
                    ids,
                    "complete split side plus 0 is not an ideal".to_string(),
                )));
            }
        }
    }
    Ok(holds(!exercised))
}

fn check_nonzd_sum(an: &RingAnalysis) -> Outcome {
    require_nonempty_graph(an)?;
    if cut_vertex_list(an).is_empty() {
        return Ok(holds(true));
    }
    let in_closure =
        |x: ElementId| x == an.ring.zero() || an.strong.contains_vertex(x);
    let outside: Vec<ElementId> = an.ring.elements().filter(|&x| !in_closure(x)).collect();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i..] {
            let s = an.ring.add(x, y);
            if !in_closure(s) {
                return Err(CheckStatus::Violated(wit(
                    an,
                    "non-vertex-sum-escapes",
                    vec![x, y, s],
                    format!(
                        "{} + {} = {} is neither 0 nor a vertex",
                        an.label(x),
                        an.label(y),
                        an.label(s)
                    ),
                )));
            }
        }
    }
    Ok(holds(false))
}

fn check_cut_propmax(an: &RingAnalysis) -> Outcome {
    require_nonempty_graph(an)?;
    let cuts = cut_vertex_list(an);
    for &a in &cuts {
        if !is_properly_maximal(&an.ring, &an.table, a) {
            return Err(CheckStatus::Violated(wit(
                an,
                "cut-vertex-not-properly-maximal",
                vec![a],
                format!("r_R({}R) is not properly maximal", an.label(a)),
            )));
        }
    }
    Ok(holds(cuts.is_empty()))
}

fn near_idempotent(an: &RingAnalysis, b: ElementId) -> bool {
    let sq = an.ring.mul(b, b);
    sq == an.ring.zero() || sq == b
}

fn check_side_idempotent(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let mut exercised = false;
    for a in cut_vertex_list(an) {
        exercised |= has_large_side(an, a);
        for side in component_sides(an, a) {
            if side.len() <= 2 || !is_clique(&an.strong, &side).unwrap() {
                continue;
            }
            for &b in side.iter().filter(|&&v| v != a) {
                if !near_idempotent(an, b) {
                    return Err(CheckStatus::Violated(wit(
                        an,
                        "complete-side-square-escapes",
                        vec![a, b, an.ring.mul(b, b)],
                        format!(
                            "{}^2 = {} is neither 0 nor {}",
                            an.label(b),
                            an.label(an.ring.mul(b, b)),
                            an.label(b)
                        ),
                    )));
                }
            }
        }
    }
    Ok(holds(!exercised))
}

fn check_side(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let mut exercised = false;
    for a in cut_vertex_list(an) {
        exercised |= has_large_side(an, a);
        for side in component_sides(an, a) {
            if side.len() <= 2 {
                continue;
            }
            let complete = is_clique(&an.strong, &side).unwrap();
            if !complete {
                continue;
            }
            // (a): a non-near-idempotent off the cut vertex rules out completeness
            if side.iter().any(|&b| b != a && !near_idempotent(an, b)) {
                return Err(CheckStatus::Violated(wit(
                    an,
                    "complete-side-with-bad-square",
                    side.clone(),
                    "side is complete despite a member with b^2 outside {0, b}".to_string(),
                )));
            }
            // (b): a complete side absorbs 0 into an ideal
            let mut ids = side.clone();
            ids.push(an.ring.zero());
            let set = ElementSet::from_ids(an.ring.order(), ids.iter().copied());
            if !is_ideal(&an.ring, &set) {
                return Err(CheckStatus::Violated(wit(
                    an,
                    "complete-side-not-ideal",
                    ids,
                    "complete split side plus 0 is not an ideal".to_string(),
                )));
            }
        }
    }
    Ok(holds(!exercised))
}

fn check_cut_atom(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let cuts = cut_vertex_list(an);
    for &a in &cuts {
        if !(an.cp.contains(a) && an.cp.is_atom(a)) {
            return Err(CheckStatus::Violated(wit(
                an,
                "cut-vertex-not-atom",
                vec![a],
                format!(
                    "cut vertex {} is not an atom of the central projection lattice",
                    an.label(a)
                ),
            )));
        }
    }
    Ok(holds(cuts.is_empty()))
}

/// The cut/pendant and |r_R(a)| = 2 equivalences degenerate on a strong
/// graph that is a single edge (both endpoints are pendants, neither is a
/// cut vertex), which among p.q.-Baer rings happens exactly for the
/// order-4 product of two 2-element fields. Both checks therefore require
/// at least three vertices.
fn require_at_least_three_vertices(an: &RingAnalysis) -> Gate {
    if an.strong.vertex_count() >= 3 {
        Ok(())
    } else {
        Err(not_met(
            "strong graph has fewer than three vertices",
            None,
        ))
    }
}

fn check_cut_iff_pendant(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    require_at_least_three_vertices(an)?;
    let cuts = cut_vertex_list(an);
    let pendants = pendant_vertices(&an.strong).to_vec();
    match (cuts.is_empty(), pendants.is_empty()) {
        (false, true) => Err(CheckStatus::Violated(wit(
            an,
            "cut-without-pendant",
            cuts,
            "cut vertices exist but no pendant vertex".to_string(),
        ))),
        (true, false) => Err(CheckStatus::Violated(wit(
            an,
            "pendant-without-cut",
            pendants,
            "pendant vertices exist but no cut vertex".to_string(),
        ))),
        _ => Ok(holds(false)),
    }
}

fn check_ann_size_2(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    require_at_least_three_vertices(an)?;
    let has_cut = !cut_vertex_list(an).is_empty();
    let small_ann = an
        .ring
        .elements()
        .find(|&a| an.table.right_ann_of_element(a).len() == 2);
    match (has_cut, small_ann) {
        (true, None) => Err(CheckStatus::Violated(wit(
            an,
            "cut-without-small-annihilator",
            vec![],
            "cut vertex exists but no element has |r_R(a)| = 2".to_string(),
        ))),
        (false, Some(a)) => Err(CheckStatus::Violated(wit(
            an,
            "small-annihilator-without-cut",
            vec![a],
            format!("|r_R({})| = 2 but no cut vertex", an.label(a)),
        ))),
        _ => Ok(holds(false)),
    }
}

fn check_cutset_clique(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let cuts = cut_vertex_list(an);
    if !is_clique(&an.strong, &cuts).unwrap() {
        return Err(CheckStatus::Violated(wit(
            an,
            "cut-set-not-clique",
            cuts,
            "two cut vertices are non-adjacent".to_string(),
        )));
    }
    Ok(holds(cuts.len() <= 1))
}

// ---------------------------------------------------------------------
// Distances, covers, and the complement
// ---------------------------------------------------------------------

fn check_dist_cover(an: &RingAnalysis) -> Outcome {
    require_pq(an)?;
    require_nonempty_graph(an)?;
    let dist = all_pairs_distances(&an.strong);
    let verts = an.strong.vertices();
    let mut exercised = false;
    for i in 0..verts.len() {
        let ca = an.vertex_cover(verts[i]);
        for j in i + 1..verts.len() {
            let cb = an.vertex_cover(verts[j]);
            // Distinct vertices sharing a cover sit at distance >= 2 while
            // their covers coincide, so the statement is scoped to
            // distinct covers.
            if ca == cb {
                continue;
            }
            exercised = true;
            let ci = an.strong.index_of(ca).unwrap();
            let cj = an.strong.index_of(cb).unwrap();
            if dist[i][j] != dist[ci][cj] {
                let show = |d: u32| {
                    if d == u32::MAX {
                        Dist::Infinite
                    } else {
                        Dist::Finite(d)
                    }
                };
                return Err(CheckStatus::Violated(wit(
                    an,
                    "cover-distance-mismatch",
                    vec![verts[i], verts[j], ca, cb],
                    format!(
                        "d({}, {}) = {} but d(C(a), C(b)) = {}",
                        an.label(verts[i]),
                        an.label(verts[j]),
                        show(dist[i][j]),
                        show(dist[ci][cj])
                    ),
                )));
            }
        }
    }
    Ok(holds(!exercised))
}

fn check_cp4_bipartite(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    if an.cp.len() != 4 {
        return Err(not_met("|CP(R)| != 4", None));
    }
    let nontrivial: Vec<ElementId> = an.cp.nontrivial().collect();
    let (e, f) = (nontrivial[0], nontrivial[1]);
    let class_e = an.cover_class(e);
    let class_f = an.cover_class(f);
    let mut expected: Vec<ElementId> = class_e.iter().chain(&class_f).copied().collect();
    expected.sort_unstable();
    if expected != an.strong.vertices() {
        return Err(CheckStatus::Violated(wit(
            an,
            "vertex-set-not-two-cover-classes",
            expected,
            "strong vertices are not exactly C_e and C_{1-e}".to_string(),
        )));
    }
    for &x in &class_e {
        for &y in &class_f {
            if !an.strong.adjacent_ids(x, y).unwrap() {
                return Err(CheckStatus::Violated(wit(
                    an,
                    "missing-cross-edge",
                    vec![x, y],
                    "cross pair not adjacent".to_string(),
                )));
            }
        }
    }
    for class in [&class_e, &class_f] {
        for (i, &x) in class.iter().enumerate() {
            for &y in &class[i + 1..] {
                if an.strong.adjacent_ids(x, y).unwrap() {
                    return Err(CheckStatus::Violated(wit(
                        an,
                        "edge-inside-part",
                        vec![x, y],
                        "edge inside a cover class".to_string(),
                    )));
                }
            }
        }
    }
    if metrics(&an.complement).connected {
        return Err(CheckStatus::Violated(wit(
            an,
            "complement-connected",
            vec![],
            "complement of a complete bipartite strong graph must be disconnected".to_string(),
        )));
    }
    Ok(holds(false))
}

fn check_dist3(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let nontrivial: Vec<ElementId> = an.cp.nontrivial().collect();
    let one = an.ring.one();
    let mut exercised = false;
    for (i, &e) in nontrivial.iter().enumerate() {
        for &f in &nontrivial[i + 1..] {
            if an.ring.mul(e, f) != an.ring.zero() || an.ring.add(e, f) == one {
                continue;
            }
            exercised = true;
            let ce = an.ring.sub(one, e);
            let cf = an.ring.sub(one, f);
            let d = graph_analysis::distance(&an.strong, ce, cf).unwrap();
            if d != Dist::Finite(3) {
                return Err(CheckStatus::Violated(wit(
                    an,
                    "distance-not-3",
                    vec![e, f, ce, cf],
                    format!(
                        "d(1-{}, 1-{}) = {} instead of 3",
                        an.label(e),
                        an.label(f),
                        d
                    ),
                )));
            }
        }
    }
    Ok(holds(!exercised))
}

fn check_comp_conn_cp6(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let connected = metrics(&an.complement).connected;
    let cp6 = an.cp.len() >= 6;
    if connected == cp6 {
        Ok(holds(false))
    } else {
        Err(CheckStatus::Violated(wit(
            an,
            "complement-connectivity-mismatch",
            an.cp.elements().to_vec(),
            format!(
                "complement connected = {connected} but |CP(R)| = {}",
                an.cp.len()
            ),
        )))
    }
}

fn check_universal_cp4(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let nv = an.strong.vertex_count();
    let universal = (0..nv).find(|&i| an.strong.degree(i) == nv - 1);
    let Some(u) = universal else {
        return Ok(holds(true));
    };
    if an.cp.len() == 4 {
        Ok(holds(false))
    } else {
        Err(CheckStatus::Violated(wit(
            an,
            "universal-vertex-but-cp-not-4",
            vec![an.strong.vertex_at(u)],
            format!("universal vertex with |CP(R)| = {}", an.cp.len()),
        )))
    }
}

fn check_comp_girth(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    if metrics(&an.complement).connected {
        return Err(not_met("complement of the strong graph is connected", None));
    }
    let g = girth(&an.complement);
    if g == Dist::Finite(3) || g == Dist::Infinite {
        Ok(holds(false))
    } else {
        Err(CheckStatus::Violated(wit(
            an,
            "complement-girth-outside-3-inf",
            vec![],
            format!("girth {g}"),
        )))
    }
}

fn check_triangle_free(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    if girth(&an.strong) == Dist::Finite(3) {
        return Err(not_met("strong graph contains a triangle", None));
    }
    let verts = an.strong.vertices();
    let one = an.ring.one();
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            let adj = an.strong.adjacent_ids(a, b).unwrap();
            let complementary = an.vertex_cover(a) == an.ring.sub(one, an.vertex_cover(b));
            if adj != complementary {
                return Err(CheckStatus::Violated(wit(
                    an,
                    "adjacency-cover-mismatch",
                    vec![a, b],
                    format!(
                        "adjacent = {adj} but C({}) {} 1 - C({})",
                        an.label(a),
                        if complementary { "=" } else { "!=" },
                        an.label(b)
                    ),
                )));
            }
        }
    }
    Ok(holds(false))
}

fn check_girth(an: &RingAnalysis) -> Outcome {
    require_pq(an)?;
    require_nonempty_graph(an)?;
    let g = girth(&an.strong);
    let zero = an.ring.zero();
    let one = an.ring.one();
    let nontrivial: Vec<ElementId> = an.cp.nontrivial().collect();

    let orthogonal_pair = nontrivial.iter().enumerate().any(|(i, &e)| {
        nontrivial[i + 1..]
            .iter()
            .any(|&f| an.ring.mul(e, f) == zero && an.ring.add(e, f) != one)
    });
    // A 3-element chain avoiding 0 exists iff two nontrivial members are
    // strictly comparable (then {e, f, 1} is such a chain).
    let chain3 = nontrivial.iter().any(|&e| {
        nontrivial
            .iter()
            .any(|&f| e != f && an.cp.leq(e, f))
    });
    let girth3 = g == Dist::Finite(3);
    if girth3 != orthogonal_pair || girth3 != chain3 {
        return Err(CheckStatus::Violated(wit(
            an,
            "girth3-equivalence-broken",
            vec![],
            format!(
                "girth = {g}; orthogonal non-complementary pair = {orthogonal_pair}; 3-chain avoiding 0 = {chain3}"
            ),
        )));
    }

    let girth4 = g == Dist::Finite(4);
    let two_big_classes = nontrivial.iter().any(|&e| {
        let comp = an.ring.sub(one, e);
        an.cover_class(e).len() >= 2 && an.cover_class(comp).len() >= 2
    });
    let rhs4 = !girth3 && two_big_classes;
    if girth4 != rhs4 {
        return Err(CheckStatus::Violated(wit(
            an,
            "girth4-characterization-broken",
            vec![],
            format!(
                "girth = {g}; triangle-free with two cover classes of size >= 2 = {rhs4}"
            ),
        )));
    }
    Ok(holds(false))
}

fn check_comp_diam2_girth3(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let m = metrics(&an.complement);
    if !m.connected {
        return Err(not_met("complement of the strong graph is disconnected", None));
    }
    if m.diameter == Some(Dist::Finite(2)) && m.girth == Dist::Finite(3) {
        Ok(holds(false))
    } else {
        Err(CheckStatus::Violated(wit(
            an,
            "connected-complement-metrics",
            vec![],
            format!("diameter {:?}, girth {}", m.diameter, m.girth),
        )))
    }
}

fn check_not_complemented(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    if !metrics(&an.complement).connected {
        return Err(not_met("complement of the strong graph is disconnected", None));
    }
    if is_complemented(&an.complement) {
        Err(CheckStatus::Violated(wit(
            an,
            "connected-complement-complemented",
            vec![],
            "connected complement admits an orthogonal partner for every vertex".to_string(),
        )))
    } else {
        Ok(holds(false))
    }
}

/// Structural fingerprint of the order-9 product of two 3-element fields:
/// exactly what the complementedness characterization pins down.
fn z3z3_fingerprint(an: &RingAnalysis) -> bool {
    if an.ring.order() != 9 || an.ring.characteristic() != 3 || an.cp.len() != 4 {
        return false;
    }
    an.cp
        .nontrivial()
        .all(|e| an.cover_class(e).len() == 2)
}

fn check_z3z3(an: &RingAnalysis) -> Outcome {
    require_pq_cp4(an)?;
    let off_cover = an
        .strong
        .vertices()
        .iter()
        .copied()
        .find(|&a| an.vertex_cover(a) != a);
    if off_cover.is_none() {
        return Err(not_met("every vertex equals its central cover", None));
    }
    let complemented = is_complemented(&an.complement);
    let fingerprint = z3z3_fingerprint(an);
    if complemented == fingerprint {
        Ok(holds(false))
    } else {
        Err(CheckStatus::Violated(wit(
            an,
            "complemented-characterization-broken",
            vec![],
            format!("complement complemented = {complemented} but Z3 x Z3 fingerprint = {fingerprint}"),
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::RingAnalysis;
    use crate::ring::{FiniteStarRing, MatrixInvolution, RingSpec, DEFAULT_MAX_ORDER};

    fn analyze(spec: RingSpec) -> RingAnalysis {
        RingAnalysis::new(spec.build_default().unwrap())
    }

    fn status_of(id: TheoremId, an: &RingAnalysis) -> CheckStatus {
        check(id, an).status
    }

    #[test]
    fn theorem_id_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.code().parse::<TheoremId>().unwrap(), id);
        }
        assert!("TH-NOPE".parse::<TheoremId>().is_err());
    }

    #[test]
    fn comp_conn_cp6_examples() {
        let z222 = analyze(RingSpec::product_of(&[2, 2, 2]));
        assert_eq!(status_of(TheoremId::CompConnCp6, &z222), CheckStatus::Holds { vacuous: false });

        let z6 = analyze(RingSpec::Zmod(6));
        assert_eq!(status_of(TheoremId::CompConnCp6, &z6), CheckStatus::Holds { vacuous: false });
    }

    #[test]
    fn cut_iff_pendant_gates_on_pq() {
        let z24 = analyze(RingSpec::product_of(&[2, 4]));
        match status_of(TheoremId::CutIffPendant, &z24) {
            CheckStatus::HypothesisNotMet { hypothesis, witness } => {
                assert_eq!(hypothesis, "not p.q.-Baer");
                let w = witness.expect("gate carries the failing element");
                assert_eq!(w.labels, vec!["(0,2)"]);
            }
            other => panic!("expected gate, got {other:?}"),
        }
    }

    #[test]
    fn cut_atom_vacuous_on_m2z6() {
        let base = FiniteStarRing::zmod(6, DEFAULT_MAX_ORDER).unwrap();
        let ring =
            FiniteStarRing::matrix_ring(base, 2, MatrixInvolution::Identity, DEFAULT_MAX_ORDER)
                .unwrap();
        let an = RingAnalysis::new(ring);
        assert_eq!(status_of(TheoremId::CutAtom, &an), CheckStatus::Holds { vacuous: true });
        // no cut vertex, so the pendant equivalence holds non-vacuously
        assert_eq!(
            status_of(TheoremId::CutIffPendant, &an),
            CheckStatus::Holds { vacuous: false }
        );
    }

    #[test]
    fn z3z3_holds_with_its_fingerprint() {
        let an = analyze(RingSpec::product_of(&[3, 3]));
        assert_eq!(status_of(TheoremId::Z3Z3, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::CompConnCp6, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::Girth, &an), CheckStatus::Holds { vacuous: false });
    }

    #[test]
    fn fields_gate_out_of_graph_checks() {
        let an = analyze(RingSpec::Zmod(7));
        for id in TheoremId::ALL {
            let r = check(id, &an);
            assert!(
                !r.status.is_violated(),
                "{id} must not be violated on a field"
            );
            if matches!(
                id,
                TheoremId::SplitIdeal | TheoremId::Girth | TheoremId::CompConnCp6
            ) {
                assert!(
                    matches!(r.status, CheckStatus::HypothesisNotMet { .. }),
                    "{id} should be gated on a field, got {:?}",
                    r.status
                );
            }
        }
    }

    #[test]
    fn run_all_z6_nothing_violated() {
        let an = analyze(RingSpec::Zmod(6));
        for r in run_all(&an) {
            assert!(!r.status.is_violated(), "{} violated: {:?}", r.id, r.status);
        }
        // spot checks
        assert_eq!(status_of(TheoremId::SplitIdeal, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::CutPropmax, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::UniversalCp4, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::Cp4Bipartite, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::TriangleFree, &an), CheckStatus::Holds { vacuous: false });
    }

    #[test]
    fn side_ideal_fires_on_z16() {
        let an = analyze(RingSpec::Zmod(16));
        assert_eq!(status_of(TheoremId::SideIdeal, &an), CheckStatus::Holds { vacuous: false });
    }

    #[test]
    fn side_checks_exercised_on_z2xz6() {
        let an = analyze(RingSpec::product_of(&[2, 6]));
        assert_eq!(status_of(TheoremId::Side, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::CutIffPendant, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::CutAtom, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(status_of(TheoremId::CutsetClique, &an), CheckStatus::Holds { vacuous: false });
    }

    #[test]
    fn k2_ring_is_gated_from_pendant_equivalences() {
        let an = analyze(RingSpec::product_of(&[2, 2]));
        assert!(matches!(
            status_of(TheoremId::CutIffPendant, &an),
            CheckStatus::HypothesisNotMet { .. }
        ));
        assert!(matches!(
            status_of(TheoremId::AnnSize2, &an),
            CheckStatus::HypothesisNotMet { .. }
        ));
        // everything else still passes
        for r in run_all(&an) {
            assert!(!r.status.is_violated(), "{} violated on Z2 x Z2", r.id);
        }
    }

    #[test]
    fn dist3_exercised_on_z2_cubed() {
        let an = analyze(RingSpec::product_of(&[2, 2, 2]));
        assert_eq!(status_of(TheoremId::Dist3, &an), CheckStatus::Holds { vacuous: false });
        assert_eq!(
            status_of(TheoremId::CompDiam2Girth3, &an),
            CheckStatus::Holds { vacuous: false }
        );
        assert_eq!(
            status_of(TheoremId::NotComplemented, &an),
            CheckStatus::Holds { vacuous: false }
        );
    }

    #[test]
    fn prod_conn_gates_and_fires() {
        let z4z4 = analyze(RingSpec::product_of(&[4, 4]));
        assert_eq!(status_of(TheoremId::ProdConn, &z4z4), CheckStatus::Holds { vacuous: false });

        // Z2 has no strong zero-divisors, so the product hypothesis fails
        let z2z4 = analyze(RingSpec::product_of(&[2, 4]));
        assert!(matches!(
            status_of(TheoremId::ProdConn, &z2z4),
            CheckStatus::HypothesisNotMet { .. }
        ));

        let z6 = analyze(RingSpec::Zmod(6));
        assert!(matches!(
            status_of(TheoremId::ProdConn, &z6),
            CheckStatus::HypothesisNotMet { .. }
        ));
    }
}
