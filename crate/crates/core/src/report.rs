//! The machine-readable analysis report.
//!
//! Field names are frozen; evolution is additive only. Metric values
//! serialize as a number, the string "infinite", or the string
//! "undefined" (empty graph).

use crate::analysis::RingAnalysis;
use crate::graph::Graph;
use crate::graph_analysis::{
    cut_vertices, is_complete_bipartite, metrics, pendant_vertices, Dist,
};
use crate::theorems::{CheckResult, CheckStatus};
use serde::ser::Serializer;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricValue {
    Number(u32),
    Infinite,
    Undefined,
}

impl MetricValue {
    fn from_dist(d: Dist) -> Self {
        match d {
            Dist::Finite(n) => MetricValue::Number(n),
            Dist::Infinite => MetricValue::Infinite,
        }
    }

    pub fn render(&self) -> String {
        match self {
            MetricValue::Number(n) => n.to_string(),
            MetricValue::Infinite => "infinite".to_string(),
            MetricValue::Undefined => "undefined".to_string(),
        }
    }
}

impl Serialize for MetricValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MetricValue::Number(n) => s.serialize_u32(*n),
            MetricValue::Infinite => s.serialize_str("infinite"),
            MetricValue::Undefined => s.serialize_str("undefined"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationJson {
    pub is_rickart: bool,
    pub is_baer: bool,
    pub is_quasi_baer: bool,
    pub is_pq_baer: bool,
    pub is_semiproper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rickart_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pq_baer_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semiproper_witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CpJson {
    pub count: usize,
    pub atoms: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: MetricValue,
    pub girth: MetricValue,
    pub connected: bool,
    pub cut_vertices: Vec<String>,
    pub pendants: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_bipartite: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphsJson {
    pub strong: GraphJson,
    pub complement: GraphJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub kind: String,
    pub elements: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckJson {
    pub id: String,
    /// "holds" | "violated" | "hypothesis_not_met"
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vacuous: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub spec: String,
    pub order: u32,
    pub involution_proper: bool,
    pub classification: ClassificationJson,
    pub cp: CpJson,
    pub graphs: GraphsJson,
    pub checks: Vec<CheckJson>,
}

pub fn graph_json(g: &Graph) -> GraphJson {
    let m = metrics(g);
    let ring = g.ring();
    GraphJson {
        vertices: m.vertex_count,
        edges: m.edge_count,
        diameter: m
            .diameter
            .map_or(MetricValue::Undefined, MetricValue::from_dist),
        girth: MetricValue::from_dist(m.girth),
        connected: m.connected,
        cut_vertices: cut_vertices(g).iter().map(|v| ring.label(v)).collect(),
        pendants: pendant_vertices(g).iter().map(|v| ring.label(v)).collect(),
        complete_bipartite: is_complete_bipartite(g),
    }
}

pub fn check_json(r: &CheckResult) -> CheckJson {
    let witness_json = |w: &crate::theorems::Witness| WitnessJson {
        kind: w.kind.to_string(),
        elements: w.labels.clone(),
        detail: w.detail.clone(),
    };
    match &r.status {
        CheckStatus::Holds { vacuous } => CheckJson {
            id: r.id.code().to_string(),
            status: "holds".to_string(),
            vacuous: if *vacuous { Some(true) } else { None },
            hypothesis: None,
            witness: None,
        },
        CheckStatus::Violated(w) => CheckJson {
            id: r.id.code().to_string(),
            status: "violated".to_string(),
            vacuous: None,
            hypothesis: None,
            witness: Some(witness_json(w)),
        },
        CheckStatus::HypothesisNotMet { hypothesis, witness } => CheckJson {
            id: r.id.code().to_string(),
            status: "hypothesis_not_met".to_string(),
            vacuous: None,
            hypothesis: Some(hypothesis.clone()),
            witness: witness.as_ref().map(witness_json),
        },
    }
}

/// Assemble the full report; `spec_text` is echoed verbatim so a report
/// round-trips to its invocation.
pub fn build_report(an: &RingAnalysis, spec_text: &str, checks: &[CheckResult]) -> Report {
    let c = &an.classification;
    Report {
        spec: spec_text.to_string(),
        order: an.ring.order(),
        involution_proper: an.ring.involution_proper(),
        classification: ClassificationJson {
            is_rickart: c.is_rickart,
            is_baer: c.is_baer,
            is_quasi_baer: c.is_quasi_baer,
            is_pq_baer: c.is_pq_baer,
            is_semiproper: c.is_semiproper,
            rickart_witness: c.rickart_witness.map(|a| an.label(a)),
            pq_baer_witness: c.pq_witness.map(|a| an.label(a)),
            semiproper_witness: c.semiproper_witness.map(|a| an.label(a)),
        },
        cp: CpJson {
            count: an.cp.len(),
            atoms: an.cp.atoms().iter().map(|&e| an.label(e)).collect(),
        },
        graphs: GraphsJson {
            strong: graph_json(&an.strong),
            complement: graph_json(&an.complement),
        },
        checks: checks.iter().map(check_json).collect(),
    }
}
