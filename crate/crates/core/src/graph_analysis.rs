//! Exact graph analytics: connectivity, distances, diameter, girth,
//! articulation points, pendants, bipartiteness, orthogonality, and split
//! enumeration.
//!
//! Everything here is exact; the graphs stay small enough (about 1300
//! vertices at the default order cap) that per-vertex breadth-first scans
//! with bitset frontiers are plenty.

use crate::bitset::ElementSet;
use crate::graph::{Graph, GraphError};
use crate::ring::ElementId;
use std::fmt;

/// A hop count that may be infinite (different components / no cycle).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub component_count: usize,
    /// None for the empty graph (undefined, as opposed to infinite).
    pub diameter: Option<Dist>,
    pub girth: Dist,
}

const UNREACHED: u32 = u32::MAX;

/// BFS levels from `start` over vertex positions, skipping `removed`.
fn bfs_levels(g: &Graph, start: usize, removed: Option<usize>) -> Vec<u32> {
    let nv = g.vertex_count();
    let mut dist = vec![UNREACHED; nv];
    let mut frontier = ElementSet::new(nv as u32);
    let mut visited = ElementSet::new(nv as u32);
    frontier.insert(ElementId(start as u32));
    visited.insert(ElementId(start as u32));
    if let Some(r) = removed {
        visited.insert(ElementId(r as u32));
    }
    dist[start] = 0;
    let mut level = 0u32;
    while !frontier.is_empty() {
        level += 1;
        let mut next = ElementSet::new(nv as u32);
        for u in frontier.iter() {
            next.union_with(g.row(u.idx()));
        }
        // keep only the unvisited
        let mut fresh = next;
        for v in visited.iter() {
            fresh.remove(v);
        }
        for v in fresh.iter() {
            dist[v.idx()] = level;
            visited.insert(v);
        }
        frontier = fresh;
    }
    if let Some(r) = removed {
        dist[r] = UNREACHED;
    }
    dist
}

/// Connected components (as position lists) of the graph minus an optional
/// vertex, each ordered and listed by smallest position.
fn components_excluding(g: &Graph, removed: Option<usize>) -> Vec<Vec<usize>> {
    let nv = g.vertex_count();
    let mut seen = vec![false; nv];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut comps = Vec::new();
    for s in 0..nv {
        if seen[s] {
            continue;
        }
        let dist = bfs_levels(g, s, removed);
        let mut comp = Vec::new();
        for (v, &d) in dist.iter().enumerate() {
            if d != UNREACHED {
                seen[v] = true;
                comp.push(v);
            }
        }
        comps.push(comp);
    }
    comps
}

pub fn component_count(g: &Graph) -> usize {
    components_excluding(g, None).len()
}

/// Connected components of G minus one vertex, as ascending element-id
/// lists ordered by smallest member.
pub fn components_without(g: &Graph, a: ElementId) -> Result<Vec<Vec<ElementId>>, GraphError> {
    let i = g.index_of(a)?;
    Ok(components_excluding(g, Some(i))
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| g.vertex_at(v)).collect())
        .collect())
}

/// Shortest-path distance between two vertices.
pub fn distance(g: &Graph, a: ElementId, b: ElementId) -> Result<Dist, GraphError> {
    let i = g.index_of(a)?;
    let j = g.index_of(b)?;
    let dist = bfs_levels(g, i, None);
    Ok(match dist[j] {
        UNREACHED => Dist::Infinite,
        d => Dist::Finite(d),
    })
}

/// All-pairs distances over vertex positions; UNREACHED encodes infinity.
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.vertex_count()).map(|s| bfs_levels(g, s, None)).collect()
}

/// Length of the shortest cycle through any vertex, via the per-root BFS
/// scan: for each root, every non-tree edge (u, w) closes a cycle of
/// length `dist[u] + dist[w] + 1`, and the minimum over all roots is exact.
pub fn girth(g: &Graph) -> Dist {
    let nv = g.vertex_count();
    let mut best = u32::MAX;
    for root in 0..nv {
        let mut dist = vec![UNREACHED; nv];
        let mut parent = vec![UNREACHED; nv];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for w in g.row(u).iter() {
                let w = w.idx();
                if dist[w] == UNREACHED {
                    dist[w] = dist[u] + 1;
                    parent[w] = u as u32;
                    queue.push_back(w);
                }
            }
        }
        for u in 0..nv {
            if dist[u] == UNREACHED {
                continue;
            }
            for w in g.row(u).iter() {
                let w = w.idx();
                if w < u || dist[w] == UNREACHED {
                    continue;
                }
                if parent[w] as usize == u || parent[u] as usize == w {
                    continue;
                }
                best = best.min(dist[u] + dist[w] + 1);
            }
        }
        if best == 3 {
            return Dist::Finite(3);
        }
    }
    if best == u32::MAX {
        Dist::Infinite
    } else {
        Dist::Finite(best)
    }
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let nv = g.vertex_count();
    if nv == 0 {
        return GraphMetrics {
            vertex_count: 0,
            edge_count: 0,
            connected: true,
            component_count: 0,
            diameter: None,
            girth: Dist::Infinite,
        };
    }
    let comps = components_excluding(g, None);
    let connected = comps.len() == 1;
    let diameter = if connected {
        let mut max = 0u32;
        for s in 0..nv {
            for &d in &bfs_levels(g, s, None) {
                if d != UNREACHED {
                    max = max.max(d);
                }
            }
        }
        Some(Dist::Finite(max))
    } else {
        Some(Dist::Infinite)
    };
    GraphMetrics {
        vertex_count: nv,
        edge_count: g.edge_count(),
        connected,
        component_count: comps.len(),
        diameter,
        girth: girth(g),
    }
}

/// Articulation points, straight from the definition: vertices whose
/// removal strictly increases the component count.
pub fn cut_vertices(g: &Graph) -> ElementSet {
    let mut out = ElementSet::new(g.ring().order());
    if g.vertex_count() == 0 {
        return out;
    }
    let base = components_excluding(g, None).len();
    for i in 0..g.vertex_count() {
        if components_excluding(g, Some(i)).len() > base {
            out.insert(g.vertex_at(i));
        }
    }
    out
}

/// Vertices of degree exactly one.
pub fn pendant_vertices(g: &Graph) -> ElementSet {
    let mut out = ElementSet::new(g.ring().order());
    for i in 0..g.vertex_count() {
        if g.degree(i) == 1 {
            out.insert(g.vertex_at(i));
        }
    }
    out
}

/// If the graph is complete bipartite with both parts nonempty, return the
/// part sizes (m, n) with m >= n.
pub fn is_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    let nv = g.vertex_count();
    if nv == 0 {
        return None;
    }
    // Complete bipartite graphs with both parts nonempty are connected, so
    // a single BFS 2-coloring is the only candidate partition.
    if components_excluding(g, None).len() != 1 {
        return None;
    }
    let mut color = vec![2u8; nv];
    let mut queue = std::collections::VecDeque::new();
    color[0] = 0;
    queue.push_back(0usize);
    while let Some(u) = queue.pop_front() {
        for w in g.row(u).iter() {
            let w = w.idx();
            if color[w] == 2 {
                color[w] = 1 - color[u];
                queue.push_back(w);
            } else if color[w] == color[u] {
                return None; // odd cycle
            }
        }
    }
    let part_a: Vec<usize> = (0..nv).filter(|&v| color[v] == 0).collect();
    let part_b: Vec<usize> = (0..nv).filter(|&v| color[v] == 1).collect();
    if part_a.is_empty() || part_b.is_empty() {
        return None;
    }
    for &a in &part_a {
        for &b in &part_b {
            if !g.row(a).contains(ElementId(b as u32)) {
                return None;
            }
        }
    }
    let (m, n) = (part_a.len(), part_b.len());
    Some((m.max(n), m.min(n)))
}

/// Every two distinct members adjacent; vacuously true for |S| <= 1.
pub fn is_clique(g: &Graph, members: &[ElementId]) -> Result<bool, GraphError> {
    let idx: Vec<usize> = members
        .iter()
        .map(|&a| g.index_of(a))
        .collect::<Result<_, _>>()?;
    for (p, &i) in idx.iter().enumerate() {
        for &j in &idx[p + 1..] {
            if i != j && !g.row(i).contains(ElementId(j as u32)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Adjacent with no common neighbor.
pub fn orthogonal(g: &Graph, a: ElementId, b: ElementId) -> Result<bool, GraphError> {
    let i = g.index_of(a)?;
    let j = g.index_of(b)?;
    Ok(g.row(i).contains(ElementId(j as u32)) && !g.row(i).intersects(g.row(j)))
}

/// Every vertex has an orthogonal partner.
pub fn is_complemented(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|i| {
        g.row(i)
            .iter()
            .any(|j| !g.row(i).intersects(g.row(j.idx())))
    })
}

/// One side of a split, as ascending element ids (the cut vertex included
/// in both sides).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub x: Vec<ElementId>,
    pub y: Vec<ElementId>,
}

/// Bipartitions are enumerated exhaustively only up to this many
/// groupings; more components is an error, never a silent truncation.
pub const SPLIT_CAP: usize = 1 << 12;

/// All splits of the graph into X and Y via `a`: empty unless `a` is a cut
/// vertex, otherwise every bipartition of the components of G - a into two
/// nonempty groups, with `a` adjoined to both sides. Unordered pairs are
/// produced once, with the component containing the smallest vertex on the
/// X side.
pub fn splits_via(g: &Graph, a: ElementId) -> Result<Vec<Split>, GraphError> {
    let i = g.index_of(a)?;
    let base = components_excluding(g, None).len();
    let comps = components_excluding(g, Some(i));
    if comps.len() <= base {
        return Ok(Vec::new()); // not a cut vertex
    }
    let movable = comps.len() - 1;
    if (1usize << movable.min(63)) - 1 > SPLIT_CAP {
        return Err(GraphError::SplitCapExceeded {
            components: comps.len(),
            cap: SPLIT_CAP,
        });
    }
    let mut splits = Vec::new();
    for mask in 1u64..(1u64 << movable) {
        let mut x = vec![a];
        let mut y = vec![a];
        x.extend(comps[0].iter().map(|&v| g.vertex_at(v)));
        for (c, comp) in comps[1..].iter().enumerate() {
            let side = if mask >> c & 1 == 1 { &mut y } else { &mut x };
            side.extend(comp.iter().map(|&v| g.vertex_at(v)));
        }
        x.sort_unstable();
        y.sort_unstable();
        splits.push(Split { x, y });
    }
    Ok(splits)
}
