//! Zero-divisor graphs of a finite *-ring.
//!
//! Three builders over the same vertex-id scheme:
//!   strong     — vertices {a != 0 : r_R(aR) != 0}, a ~ b iff aRb* = 0
//!   star       — vertices are nonzero left zero-divisors, a ~ b iff ab* = 0
//!   undirected — vertices are nonzero one-sided zero-divisors, a ~ b iff
//!                ab = 0 or ba = 0
//!
//! Adjacency is kept as one bitset row per vertex (indexed by vertex
//! position, not element id). Vertices are stored in ascending element-id
//! order so exports and metrics are deterministic.

use crate::annihilators::AnnihilatorTable;
use crate::bitset::ElementSet;
use crate::ring::{ElementId, FiniteStarRing};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphKind {
    Strong,
    Star,
    Undirected,
    ComplementOf(Box<GraphKind>),
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Strong => write!(f, "strong"),
            GraphKind::Star => write!(f, "star"),
            GraphKind::Undirected => write!(f, "undirected"),
            GraphKind::ComplementOf(inner) => write!(f, "complement of {inner}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("element is not a vertex of this graph: {0:?}")]
    UnknownVertex(ElementId),
    #[error("split enumeration over {components} components exceeds the {cap} cap")]
    SplitCapExceeded { components: usize, cap: usize },
}

pub struct Graph {
    ring: Arc<FiniteStarRing>,
    kind: GraphKind,
    vertices: Vec<ElementId>,
    /// element id -> vertex position, u32::MAX when absent
    vindex: Vec<u32>,
    /// bitset rows over vertex positions
    adj: Vec<ElementSet>,
    edge_count: usize,
}

impl Graph {
    /// Build one of the three base graph kinds from the annihilator table.
    pub fn build(ring: &Arc<FiniteStarRing>, table: &AnnihilatorTable, kind: GraphKind) -> Graph {
        assert!(
            !matches!(kind, GraphKind::ComplementOf(_)),
            "complements are derived via Graph::complement"
        );
        let zero = ring.zero();
        let vertices: Vec<ElementId> = match kind {
            GraphKind::Strong => ring
                .elements()
                .filter(|&a| a != zero && table.has_nonzero_principal_ann(a))
                .collect(),
            GraphKind::Star => ring
                .elements()
                .filter(|&a| a != zero && table.is_left_zero_divisor(a))
                .collect(),
            GraphKind::Undirected => {
                // right zero-divisors are the union of the element annihilators
                let mut right_zd = ElementSet::new(ring.order());
                for b in ring.elements() {
                    if b != zero {
                        right_zd.union_with(table.right_ann_of_element(b));
                    }
                }
                right_zd.remove(zero);
                ring.elements()
                    .filter(|&a| {
                        a != zero && (table.is_left_zero_divisor(a) || right_zd.contains(a))
                    })
                    .collect()
            }
            GraphKind::ComplementOf(_) => unreachable!(),
        };

        let nv = vertices.len() as u32;
        let mut vindex = vec![u32::MAX; ring.order() as usize];
        for (i, v) in vertices.iter().enumerate() {
            vindex[v.idx()] = i as u32;
        }

        let adjacent = |a: ElementId, b: ElementId| -> bool {
            match kind {
                // The disjunction symmetrizes pseudo-involutions; for a
                // proper involution aRb* = 0 already implies bRa* = 0.
                GraphKind::Strong => {
                    table.right_ann_of_principal(a).contains(ring.star(b))
                        || table.right_ann_of_principal(b).contains(ring.star(a))
                }
                GraphKind::Star => {
                    table.right_ann_of_element(a).contains(ring.star(b))
                        || table.right_ann_of_element(b).contains(ring.star(a))
                }
                GraphKind::Undirected => {
                    table.right_ann_of_element(a).contains(b)
                        || table.right_ann_of_element(b).contains(a)
                }
                GraphKind::ComplementOf(_) => unreachable!(),
            }
        };

        let mut adj = vec![ElementSet::new(nv); vertices.len()];
        let mut edge_count = 0;
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if adjacent(vertices[i], vertices[j]) {
                    adj[i].insert(ElementId(j as u32));
                    adj[j].insert(ElementId(i as u32));
                    edge_count += 1;
                }
            }
        }

        Graph {
            ring: Arc::clone(ring),
            kind,
            vertices,
            vindex,
            adj,
            edge_count,
        }
    }

    /// Same vertex set, adjacency flipped on all distinct pairs. Taking a
    /// complement twice restores the original kind.
    pub fn complement(&self) -> Graph {
        let nv = self.vertices.len() as u32;
        let mut adj = Vec::with_capacity(self.adj.len());
        for (i, row) in self.adj.iter().enumerate() {
            let mut flipped = ElementSet::full(nv);
            for v in row.iter() {
                flipped.remove(v);
            }
            flipped.remove(ElementId(i as u32));
            adj.push(flipped);
        }
        let total_pairs = self.vertices.len() * self.vertices.len().saturating_sub(1) / 2;
        let kind = match &self.kind {
            GraphKind::ComplementOf(inner) => (**inner).clone(),
            other => GraphKind::ComplementOf(Box::new(other.clone())),
        };
        Graph {
            ring: Arc::clone(&self.ring),
            kind,
            vertices: self.vertices.clone(),
            vindex: self.vindex.clone(),
            adj,
            edge_count: total_pairs - self.edge_count,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteStarRing> {
        &self.ring
    }

    pub fn kind(&self) -> &GraphKind {
        &self.kind
    }

    /// Vertices in ascending element-id order.
    pub fn vertices(&self) -> &[ElementId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains_vertex(&self, a: ElementId) -> bool {
        a.idx() < self.vindex.len() && self.vindex[a.idx()] != u32::MAX
    }

    pub fn index_of(&self, a: ElementId) -> Result<usize, GraphError> {
        if self.contains_vertex(a) {
            Ok(self.vindex[a.idx()] as usize)
        } else {
            Err(GraphError::UnknownVertex(a))
        }
    }

    pub fn vertex_at(&self, i: usize) -> ElementId {
        self.vertices[i]
    }

    /// Neighbor row by vertex position.
    pub fn row(&self, i: usize) -> &ElementSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn adjacent_ids(&self, a: ElementId, b: ElementId) -> Result<bool, GraphError> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        Ok(self.adj[i].contains(ElementId(j as u32)))
    }

    /// Edges as element-id pairs (u, v) with u < v, lexicographic; the
    /// deterministic iterator exports are built on.
    pub fn edges(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        (0..self.vertices.len()).flat_map(move |i| {
            self.adj[i]
                .iter()
                .filter(move |j| j.idx() > i)
                .map(move |j| (self.vertices[i], self.vertices[j.idx()]))
        })
    }

    /// Edge set as label pairs, for golden tests against drawn figures.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .map(|(u, v)| (self.ring.label(u), self.ring.label(v)))
            .collect()
    }

    /// Compare vertex set and adjacency (kind aside).
    pub fn same_graph(&self, other: &Graph) -> bool {
        self.vertices == other.vertices && self.adj == other.adj
    }

    /// Test-support constructor for synthetic graphs over an existing ring.
    pub fn from_edge_list(
        ring: &Arc<FiniteStarRing>,
        kind: GraphKind,
        vertices: &[ElementId],
        edges: &[(ElementId, ElementId)],
    ) -> Graph {
        let mut vertices: Vec<ElementId> = vertices.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        let nv = vertices.len() as u32;
        let mut vindex = vec![u32::MAX; ring.order() as usize];
        for (i, v) in vertices.iter().enumerate() {
            vindex[v.idx()] = i as u32;
        }
        let mut adj = vec![ElementSet::new(nv); vertices.len()];
        let mut edge_count = 0;
        for &(u, v) in edges {
            let i = vindex[u.idx()] as usize;
            let j = vindex[v.idx()] as usize;
            assert!(i != j, "self-loops are not representable");
            if !adj[i].contains(ElementId(j as u32)) {
                adj[i].insert(ElementId(j as u32));
                adj[j].insert(ElementId(i as u32));
                edge_count += 1;
            }
        }
        Graph {
            ring: Arc::clone(ring),
            kind,
            vertices,
            vindex,
            adj,
            edge_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MatrixInvolution, RingSpec, DEFAULT_MAX_ORDER};

    fn strong(spec: RingSpec) -> Graph {
        let ring = spec.build_default().unwrap();
        let table = AnnihilatorTable::build(&ring);
        Graph::build(&ring, &table, GraphKind::Strong)
    }

    #[test]
    fn strong_graph_of_z6_is_the_path_2_3_4() {
        let g = strong(RingSpec::Zmod(6));
        let labels: Vec<String> = g.vertices().iter().map(|&v| g.ring().label(v)).collect();
        assert_eq!(labels, vec!["2", "3", "4"]);
        assert_eq!(
            g.edge_labels(),
            vec![
                ("2".to_string(), "3".to_string()),
                ("3".to_string(), "4".to_string())
            ]
        );
    }

    #[test]
    fn strong_graph_of_z2_cubed_matches_figure() {
        let g = strong(RingSpec::product_of(&[2, 2, 2]));
        assert_eq!(g.vertex_count(), 6);
        let expect = [
            ("(0,0,1)", "(1,1,0)"),
            ("(0,1,0)", "(0,0,1)"),
            ("(0,1,0)", "(1,0,1)"),
            ("(1,0,0)", "(0,0,1)"),
            ("(1,0,0)", "(0,1,0)"),
            ("(1,0,0)", "(0,1,1)"),
        ];
        let mut got = g.edge_labels();
        got.sort();
        let mut expect: Vec<(String, String)> = expect
            .iter()
            .map(|(u, v)| {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                (a.to_string(), b.to_string())
            })
            .collect();
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn star_graph_distinguishes_strong_adjacency() {
        let base = crate::ring::FiniteStarRing::zmod(6, DEFAULT_MAX_ORDER).unwrap();
        let ring = crate::ring::FiniteStarRing::matrix_ring(
            base,
            2,
            MatrixInvolution::Transpose,
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let table = AnnihilatorTable::build(&ring);
        let star = Graph::build(&ring, &table, GraphKind::Star);
        let strong = Graph::build(&ring, &table, GraphKind::Strong);
        let a = ring.element_by_label("[[0,2],[0,2]]").unwrap();
        let b = ring.element_by_label("[[2,0],[2,0]]").unwrap();
        assert!(star.adjacent_ids(a, b).unwrap());
        assert!(!strong.adjacent_ids(a, b).unwrap());
    }

    #[test]
    fn undirected_graph_distinguishes_strong_adjacency() {
        let base = crate::ring::FiniteStarRing::zmod(6, DEFAULT_MAX_ORDER).unwrap();
        let ring = crate::ring::FiniteStarRing::matrix_ring(
            base,
            2,
            MatrixInvolution::Transpose,
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let table = AnnihilatorTable::build(&ring);
        let bar = Graph::build(&ring, &table, GraphKind::Undirected);
        let strong = Graph::build(&ring, &table, GraphKind::Strong);
        let a = ring.element_by_label("[[0,2],[0,2]]").unwrap();
        let b = ring.element_by_label("[[2,2],[0,0]]").unwrap();
        assert_eq!(ring.mul(a, b), ring.zero());
        assert!(bar.adjacent_ids(a, b).unwrap());
        assert!(!strong.adjacent_ids(a, b).unwrap());
    }

    #[test]
    fn complement_of_z6_strong_graph() {
        let g = strong(RingSpec::Zmod(6));
        let c = g.complement();
        assert_eq!(
            c.edge_labels(),
            vec![("2".to_string(), "4".to_string())]
        );
        // vertex 3 is isolated but still a member
        let three = g.ring().element_by_label("3").unwrap();
        assert!(c.contains_vertex(three));
        assert_eq!(c.degree(c.index_of(three).unwrap()), 0);
    }

    #[test]
    fn double_complement_restores_graph_and_kind() {
        let g = strong(RingSpec::product_of(&[2, 4]));
        let cc = g.complement().complement();
        assert!(g.same_graph(&cc));
        assert_eq!(cc.kind(), g.kind());
    }

    #[test]
    fn complement_of_z3_z3_is_a_perfect_matching() {
        let g = strong(RingSpec::product_of(&[3, 3]));
        // the strong graph is the 4-cycle (1,0)-(0,1)-(2,0)-(0,2)-(1,0)
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let c = g.complement();
        let mut got = c.edge_labels();
        got.sort();
        assert_eq!(
            got,
            vec![
                ("(0,1)".to_string(), "(0,2)".to_string()),
                ("(1,0)".to_string(), "(2,0)".to_string()),
            ]
        );
    }

    #[test]
    fn strong_vertex_membership_replays_definition() {
        for spec in [RingSpec::Zmod(12), RingSpec::product_of(&[2, 4])] {
            let ring = spec.build_default().unwrap();
            let table = AnnihilatorTable::build(&ring);
            let g = Graph::build(&ring, &table, GraphKind::Strong);
            for a in ring.elements() {
                // replay the raw predicate r_R(aR) != {0}
                let direct = a != ring.zero()
                    && ring.elements().any(|x| {
                        x != ring.zero()
                            && ring.elements().all(|r| ring.mul3(a, r, x) == ring.zero())
                    });
                assert_eq!(g.contains_vertex(a), direct, "vertex membership for {a:?}");
            }
        }
    }
}
