//! Ring corpus enumeration, the full-corpus regression runner, and the
//! converse-counterexample finder.
//!
//! Rings are enumerated in a canonical order (residue rings ascending,
//! then products by order and factor tuple, then matrix rings), deduped by
//! construction descriptor, and verified independently; results merge back
//! in enumeration order, so summaries are byte-identical across runs and
//! worker counts.

use crate::analysis::RingAnalysis;
use crate::annihilators::is_ideal;
use crate::bitset::ElementSet;
use crate::graph::GraphError;
use crate::graph_analysis::{cut_vertices, is_clique, splits_via};
use crate::ring::{ElementId, MatrixInvolution, RingError, RingSpec};
use crate::theorems::{run_all, CheckStatus, TheoremId, Witness};
use rayon::prelude::*;
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    /// Z_n for 2 <= n <= zmod_max.
    pub zmod_max: u32,
    /// Factor pool for direct products (taken with repetition, at least
    /// two factors).
    pub factors: Vec<u32>,
    /// Cap on the order of enumerated products.
    pub product_order_max: u64,
    /// M_2(Z_n) for each n here, under both involution tags.
    pub matrix_moduli: Vec<u32>,
    /// Global construction cap.
    pub max_order: u32,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            zmod_max: 100,
            factors: vec![2, 3, 4, 5, 6, 8, 9],
            product_order_max: 256,
            matrix_moduli: vec![2, 3, 4, 6],
            max_order: crate::ring::DEFAULT_MAX_ORDER,
        }
    }
}

impl CorpusSpec {
    /// Canonical enumeration, deduplicated by construction descriptor.
    pub fn enumerate(&self) -> Vec<RingSpec> {
        let mut specs = Vec::new();
        for n in 2..=self.zmod_max {
            specs.push(RingSpec::Zmod(n));
        }

        // products: non-decreasing factor tuples, ordered by (order, tuple)
        let mut pool: Vec<u32> = self.factors.iter().copied().filter(|&n| n >= 2).collect();
        pool.sort_unstable();
        pool.dedup();
        let mut tuples: Vec<Vec<u32>> = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        fn grow(
            pool: &[u32],
            from: usize,
            order: u64,
            cap: u64,
            stack: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            for (i, &f) in pool.iter().enumerate().skip(from) {
                let next = order * f as u64;
                if next > cap {
                    continue;
                }
                stack.push(f);
                if stack.len() >= 2 {
                    out.push(stack.clone());
                }
                grow(pool, i, next, cap, stack, out);
                stack.pop();
            }
        }
        grow(
            &pool,
            0,
            1,
            self.product_order_max.min(self.max_order as u64),
            &mut stack,
            &mut tuples,
        );
        tuples.sort_by_key(|t| (t.iter().map(|&f| f as u64).product::<u64>(), t.clone()));
        for t in tuples {
            specs.push(RingSpec::product_of(&t));
        }

        for &n in &self.matrix_moduli {
            for involution in [MatrixInvolution::Transpose, MatrixInvolution::Identity] {
                let spec = RingSpec::Matrix {
                    dim: 2,
                    base: Box::new(RingSpec::Zmod(n)),
                    involution,
                };
                if spec.order() <= self.max_order as u128 {
                    specs.push(spec);
                }
            }
        }

        let mut seen = HashSet::new();
        specs.retain(|s| seen.insert(s.clone()));
        specs
    }
}

#[derive(Clone, Debug, Default)]
pub struct TheoremTally {
    /// Non-vacuous holds.
    pub holds: usize,
    /// Holds with an empty quantified domain.
    pub vacuous: usize,
    pub hypothesis_not_met: usize,
    pub violated: usize,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub ring: String,
    pub id: TheoremId,
    pub witness: Witness,
}

#[derive(Clone, Debug)]
pub struct CorpusSummary {
    pub ring_count: usize,
    pub tallies: Vec<(TheoremId, TheoremTally)>,
    pub violations: Vec<Violation>,
}

impl CorpusSummary {
    pub fn tally(&self, id: TheoremId) -> &TheoremTally {
        &self
            .tallies
            .iter()
            .find(|(t, _)| *t == id)
            .expect("every id is tallied")
            .1
    }
}

impl fmt::Display for CorpusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rings checked: {}", self.ring_count)?;
        writeln!(
            f,
            "{:<22} {:>7} {:>8} {:>7} {:>9}",
            "theorem", "holds", "vacuous", "gated", "violated"
        )?;
        for (id, t) in &self.tallies {
            writeln!(
                f,
                "{:<22} {:>7} {:>8} {:>7} {:>9}",
                id.code(),
                t.holds,
                t.vacuous,
                t.hypothesis_not_met,
                t.violated
            )?;
        }
        for v in &self.violations {
            writeln!(f, "VIOLATED {} on {}: {}", v.id, v.ring, v.witness.detail)?;
        }
        Ok(())
    }
}

/// Run every check over every corpus ring. `jobs` bounds the worker count;
/// results are merged in enumeration order regardless of scheduling.
pub fn run_corpus(spec: &CorpusSpec, jobs: Option<usize>) -> Result<CorpusSummary, RingError> {
    let specs = spec.enumerate();
    let max_order = spec.max_order;
    let run = || -> Result<Vec<Vec<(CheckStatus, TheoremId)>>, RingError> {
        specs
            .par_iter()
            .map(|rs| {
                let ring = rs.build(max_order)?;
                let an = RingAnalysis::new(ring);
                Ok(run_all(&an)
                    .into_iter()
                    .map(|r| (r.status, r.id))
                    .collect())
            })
            .collect()
    };
    let per_ring = match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }?;

    let mut tallies: Vec<(TheoremId, TheoremTally)> = TheoremId::ALL
        .iter()
        .map(|&id| (id, TheoremTally::default()))
        .collect();
    let mut violations = Vec::new();
    for (rs, results) in specs.iter().zip(&per_ring) {
        for (status, id) in results {
            let slot = &mut tallies.iter_mut().find(|(t, _)| t == id).unwrap().1;
            match status {
                CheckStatus::Holds { vacuous: false } => slot.holds += 1,
                CheckStatus::Holds { vacuous: true } => slot.vacuous += 1,
                CheckStatus::HypothesisNotMet { .. } => slot.hypothesis_not_met += 1,
                CheckStatus::Violated(w) => {
                    slot.violated += 1;
                    violations.push(Violation {
                        ring: rs.canonical_text(),
                        id: *id,
                        witness: w.clone(),
                    });
                }
            }
        }
    }
    Ok(CorpusSummary {
        ring_count: specs.len(),
        tallies,
        violations,
    })
}

/// A ring on which the converse of a recorded statement fails, plus the
/// witness data.
#[derive(Clone, Debug)]
pub struct ConverseCounterexample {
    pub ring: RingSpec,
    pub witness: Witness,
}

/// Statements whose converses the catalog records as false.
pub fn has_recorded_converse(id: TheoremId) -> bool {
    matches!(
        id,
        TheoremId::SideIdeal | TheoremId::NonzdSum | TheoremId::CutPropmax | TheoremId::CutAtom
    )
}

/// Whether the converse of `id` fails on this ring, and how. The converse
/// direction is gated exactly like the forward statement. The side-ideal
/// converse quantifies over whole splits, so it enumerates bipartitions
/// and surfaces the cap error instead of truncating.
pub fn converse_failure(id: TheoremId, an: &RingAnalysis) -> Result<Option<Witness>, GraphError> {
    match id {
        // converse: V(X) + {0} an ideal  =>  X complete
        TheoremId::SideIdeal => {
            if an.strong.vertex_count() == 0 {
                return Ok(None);
            }
            for a in cut_vertices(&an.strong).iter() {
                let splits = splits_via(&an.strong, a)?;
                for s in &splits {
                    for side in [&s.x, &s.y] {
                        let mut ids = side.clone();
                        ids.push(an.ring.zero());
                        let set = ElementSet::from_ids(an.ring.order(), ids.iter().copied());
                        if is_ideal(&an.ring, &set)
                            && !is_clique(&an.strong, side).unwrap()
                        {
                            let labels = ids.iter().map(|&v| an.label(v)).collect();
                            return Ok(Some(Witness {
                                kind: "ideal-side-not-complete",
                                elements: ids,
                                labels,
                                detail: format!(
                                    "split via {} has V(X) + {{0}} an ideal while X is not complete",
                                    an.label(a)
                                ),
                            }));
                        }
                    }
                }
            }
            Ok(None)
        }
        // converse: sums of non-vertices stay in V + {0}  =>  a cut vertex exists
        TheoremId::NonzdSum => {
            if an.strong.vertex_count() == 0 {
                return Ok(None);
            }
            let in_closure =
                |x: ElementId| x == an.ring.zero() || an.strong.contains_vertex(x);
            let outside: Vec<ElementId> =
                an.ring.elements().filter(|&x| !in_closure(x)).collect();
            let sums_closed = outside.iter().enumerate().all(|(i, &x)| {
                outside[i..]
                    .iter()
                    .all(|&y| in_closure(an.ring.add(x, y)))
            });
            if sums_closed && cut_vertices(&an.strong).is_empty() {
                return Ok(Some(Witness {
                    kind: "sum-closure-without-cut",
                    elements: vec![],
                    labels: vec![],
                    detail: "non-vertex sums stay in V + {0} yet no cut vertex exists"
                        .to_string(),
                }));
            }
            Ok(None)
        }
        // converse: r_R(aR) properly maximal  =>  a is a cut vertex
        TheoremId::CutPropmax => {
            if an.strong.vertex_count() == 0 {
                return Ok(None);
            }
            let cuts = cut_vertices(&an.strong);
            for &a in an.strong.vertices() {
                if crate::annihilators::is_properly_maximal(&an.ring, &an.table, a)
                    && !cuts.contains(a)
                {
                    return Ok(Some(Witness {
                        kind: "properly-maximal-not-cut",
                        elements: vec![a],
                        labels: vec![an.label(a)],
                        detail: format!(
                            "r_R({}R) is properly maximal but {} is not a cut vertex",
                            an.label(a),
                            an.label(a)
                        ),
                    }));
                }
            }
            Ok(None)
        }
        // converse: an atom of L(CP(R))  =>  a cut vertex
        TheoremId::CutAtom => {
            if !an.classification.is_pq_baer || an.cp.len() < 4 {
                return Ok(None);
            }
            let cuts = cut_vertices(&an.strong);
            for &e in an.cp.atoms() {
                if an.strong.contains_vertex(e) && !cuts.contains(e) {
                    return Ok(Some(Witness {
                        kind: "atom-not-cut",
                        elements: vec![e],
                        labels: vec![an.label(e)],
                        detail: format!(
                            "{} is an atom of the central projection lattice but not a cut vertex",
                            an.label(e)
                        ),
                    }));
                }
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}

/// First ring, in canonical enumeration order, on which the converse of
/// `id` fails. `None` when the corpus contains no such ring or the
/// statement has no recorded converse.
pub fn find_converse_counterexample(
    id: TheoremId,
    corpus: &CorpusSpec,
) -> Result<Option<ConverseCounterexample>, CorpusError> {
    if !has_recorded_converse(id) {
        return Ok(None);
    }
    for rs in corpus.enumerate() {
        let ring = rs.build(corpus.max_order)?;
        let an = RingAnalysis::new(ring);
        if let Some(witness) = converse_failure(id, &an)? {
            return Ok(Some(ConverseCounterexample { ring: rs, witness }));
        }
    }
    Ok(None)
}
