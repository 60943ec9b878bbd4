//! Per-ring derived data bundled for the theorem checks and reports.

use crate::annihilators::AnnihilatorTable;
use crate::classify::{classify, ClassificationReport};
use crate::graph::{Graph, GraphKind};
use crate::projections::CentralProjectionLattice;
use crate::ring::{ElementId, FiniteStarRing};
use std::sync::Arc;

/// Everything the checks need about one ring, computed once. Immutable and
/// shareable; corpus workers each own one.
pub struct RingAnalysis {
    pub ring: Arc<FiniteStarRing>,
    pub table: AnnihilatorTable,
    pub classification: ClassificationReport,
    pub cp: CentralProjectionLattice,
    /// Central cover per element id; always present on finite unital rings
    /// (1 fixes everything and fixers are meet-closed).
    cover: Vec<Option<ElementId>>,
    pub strong: Graph,
    pub complement: Graph,
}

impl RingAnalysis {
    pub fn new(ring: Arc<FiniteStarRing>) -> Self {
        let table = AnnihilatorTable::build(&ring);
        let classification = classify(&ring, &table);
        let cp = CentralProjectionLattice::build(Arc::clone(&ring));
        let cover = ring
            .elements()
            .map(|a| cp.central_cover(a).ok())
            .collect();
        let strong = Graph::build(&ring, &table, GraphKind::Strong);
        let complement = strong.complement();
        RingAnalysis {
            ring,
            table,
            classification,
            cp,
            cover,
            strong,
            complement,
        }
    }

    pub fn cover_of(&self, a: ElementId) -> Option<ElementId> {
        self.cover[a.idx()]
    }

    /// C(a) for a graph vertex; vertices always have one.
    pub fn vertex_cover(&self, a: ElementId) -> ElementId {
        self.cover[a.idx()].expect("vertices of a finite unital ring have central covers")
    }

    pub fn label(&self, a: ElementId) -> String {
        self.ring.label(a)
    }

    /// Elements whose central cover is exactly e (the class C_e).
    pub fn cover_class(&self, e: ElementId) -> Vec<ElementId> {
        self.ring
            .elements()
            .filter(|&a| self.cover[a.idx()] == Some(e))
            .collect()
    }
}
