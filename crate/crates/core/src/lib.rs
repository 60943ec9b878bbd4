//! Computational engine for finite unital rings with involution: builds
//! strong zero-divisor graphs and their complements, classifies rings
//! (Rickart / Baer / quasi-Baer / p.q.-Baer / semiproper), and replays a
//! catalog of structural statements over enumerated ring corpora.

pub mod analysis;
pub mod annihilators;
pub mod bitset;
pub mod classify;
pub mod corpus;
pub mod graph;
pub mod graph_analysis;
pub mod parse;
pub mod projections;
pub mod report;
pub mod ring;
pub mod theorems;
pub mod validate;

pub use analysis::RingAnalysis;
pub use annihilators::{
    is_ideal, is_properly_maximal, left_annihilator, right_annihilator, AnnihilatorTable,
};
pub use bitset::ElementSet;
pub use classify::{classify, ClassificationReport};
pub use corpus::{
    find_converse_counterexample, run_corpus, ConverseCounterexample, CorpusSpec, CorpusSummary,
};
pub use graph::{Graph, GraphError, GraphKind};
pub use graph_analysis::{
    all_pairs_distances, cut_vertices, distance, girth, is_clique, is_complemented,
    is_complete_bipartite, metrics, orthogonal, pendant_vertices, splits_via, Dist, GraphMetrics,
    Split,
};
pub use parse::{parse_ring_spec, ParseError};
pub use projections::{projections, CentralProjectionLattice, NoCentralCover};
pub use report::{build_report, Report};
pub use ring::{
    ElementId, FiniteStarRing, MatrixInvolution, RingError, RingSpec, DEFAULT_MAX_ORDER,
};
pub use theorems::{check, run_all, CheckResult, CheckStatus, TheoremId, Witness};
pub use validate::{validate_star_ring, validate_star_ring_with, ValidationReport};
