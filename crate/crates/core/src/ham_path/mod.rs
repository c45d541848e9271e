//! Hamilton paths of the 3-arc graph between two prescribed arcs.
//!
//! For a 2-edge-connected graph of minimum degree three in which every
//! vertex pair is joined by an odd-length path, the 3-arc graph is
//! Hamilton-connected. The construction mirrors the cycle pipeline but
//! routes an Eulerian trail through a case-specific multigraph whose
//! multiplicities encode the prescribed endpoints: the tour is cut open at
//! a chosen visit (same-tail case) or anchored between two pendant
//! vertices (distinct-tail case), and the endpoint visits are matched to
//! the prescribed arcs.

mod build;
mod distinct_tail;
mod kl;
mod same_tail;

pub use build::{
    build_distinct_tail_multigraph, build_same_tail_multigraph, choose_guard_neighbors,
    open_euler_trail_with_anchors, PendantTrailGraph,
};
pub use kl::build_k_and_l;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{is_two_edge_connected, Arc, SimpleGraph, Vertex};
use crate::three_arc::three_arc_graph;
use crate::verify::validate_path;

/// A simple path of odd length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddPath {
    verts: Vec<Vertex>,
}

impl OddPath {
    fn new(verts: Vec<Vertex>) -> Self {
        debug_assert!(verts.len() >= 2 && verts.len().is_multiple_of(2), "odd length needs even vertex count");
        OddPath { verts }
    }

    pub fn verts(&self) -> &[Vertex] {
        &self.verts
    }

    /// Number of edges; always odd.
    pub fn length(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.contains(&v)
    }

    pub fn position_of(&self, v: Vertex) -> Option<usize> {
        self.verts.iter().position(|&w| w == v)
    }

    pub fn reversed(&self) -> OddPath {
        let mut verts = self.verts.clone();
        verts.reverse();
        OddPath { verts }
    }

    /// Edges `{x_j, x_{j+1}}` with even `j`, normalized.
    pub fn even_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.edges_with_parity(0)
    }

    /// Edges `{x_j, x_{j+1}}` with odd `j`, normalized.
    pub fn odd_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.edges_with_parity(1)
    }

    fn edges_with_parity(&self, parity: usize) -> Vec<(Vertex, Vertex)> {
        (0..self.length())
            .filter(|j| j % 2 == parity)
            .map(|j| {
                let (a, b) = (self.verts[j], self.verts[j + 1]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// Minimal-odd-length simple path from `a` to `b` by iterative deepening
/// over lengths 1, 3, 5, ...; `None` when no odd simple path exists.
pub fn shortest_odd_path(g: &SimpleGraph, a: Vertex, b: Vertex) -> Option<OddPath> {
    if a == b {
        return None;
    }
    let n = g.vertex_count();
    let dist = bfs_distances(g, b);
    if dist[a] == usize::MAX {
        return None;
    }
    let mut len = 1;
    while len <= n.saturating_sub(1) {
        let mut on_path = vec![false; n];
        on_path[a] = true;
        let mut path = vec![a];
        if extend_exact(g, a, b, len, &dist, &mut on_path, &mut path) {
            return Some(OddPath::new(path));
        }
        len += 2;
    }
    None
}

fn bfs_distances(g: &SimpleGraph, from: Vertex) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn extend_exact(
    g: &SimpleGraph,
    v: Vertex,
    target: Vertex,
    remaining: usize,
    dist: &[usize],
    on_path: &mut [bool],
    path: &mut Vec<Vertex>,
) -> bool {
    if remaining == 0 {
        return v == target;
    }
    if dist[v] > remaining {
        return false;
    }
    for &w in g.neighbors(v) {
        if on_path[w] || (w == target && remaining != 1) {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        if extend_exact(g, w, target, remaining - 1, dist, on_path, path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}

/// True iff every pair of distinct vertices is joined by an odd path.
pub fn has_all_pairs_odd_paths(g: &SimpleGraph) -> bool {
    first_odd_path_failure(g).is_none()
}

fn first_odd_path_failure(g: &SimpleGraph) -> Option<(Vertex, Vertex)> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in (a + 1)..n {
            if shortest_odd_path(g, a, b).is_none() {
                return Some((a, b));
            }
        }
    }
    None
}

/// Witnessed evaluation of the Hamilton-connectedness hypotheses.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    /// Minimum degree at least three.
    pub min_degree_ok: bool,
    pub two_edge_connected: bool,
    /// Every vertex pair joined by an odd-length path.
    pub odd_paths_ok: bool,
    pub odd_witness: Option<(Vertex, Vertex)>,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.min_degree_ok && self.two_edge_connected && self.odd_paths_ok
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "minimum degree >= 3: {}", if self.min_degree_ok { "ok" } else { "FAIL" })?;
        writeln!(
            f,
            "2-edge-connected: {}",
            if self.two_edge_connected { "ok" } else { "FAIL" }
        )?;
        write!(
            f,
            "odd path between every vertex pair: {}{}",
            if self.odd_paths_ok { "ok" } else { "FAIL" },
            match self.odd_witness {
                Some((a, b)) => format!(" (no odd path between {a} and {b})"),
                None => String::new(),
            }
        )
    }
}

pub fn check_hypotheses(g: &SimpleGraph) -> HypothesisReport {
    let min_degree_ok = g.vertex_count() > 0 && g.min_degree() >= 3;
    let two_edge_connected = is_two_edge_connected(g);
    let odd_witness = first_odd_path_failure(g);
    HypothesisReport {
        min_degree_ok,
        two_edge_connected,
        odd_paths_ok: odd_witness.is_none(),
        odd_witness,
    }
}

/// An arc sequence claimed to be a Hamilton path of a 3-arc graph between
/// two prescribed arcs.
#[derive(Clone, Debug)]
pub struct CertifiedPath {
    pub arcs: Vec<Arc>,
    pub endpoints: (Arc, Arc),
    pub verified: bool,
}

impl CertifiedPath {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// Runs [`hamilton_path_of_x`] over every ordered pair of distinct arcs
/// and returns how many verified paths were produced. Fails on the first
/// pair that does not certify.
pub fn exhaustive_arc_pair_sweep(g: &SimpleGraph) -> Result<usize> {
    let mut arcs = Vec::new();
    for u in 0..g.vertex_count() {
        for &w in g.neighbors(u) {
            arcs.push(Arc::new(u, w));
        }
    }
    let mut done = 0;
    for &a1 in &arcs {
        for &a2 in &arcs {
            if a1 == a2 {
                continue;
            }
            let path = hamilton_path_of_x(g, a1, a2)?;
            if !path.verified {
                return Err(Error::Internal(format!("unverified path for {a1}, {a2}")));
            }
            done += 1;
        }
    }
    Ok(done)
}

/// Constructs a verified Hamilton path of the 3-arc graph of `g` from
/// `a1` to `a2`.
pub fn hamilton_path_of_x(g: &SimpleGraph, a1: Arc, a2: Arc) -> Result<CertifiedPath> {
    if a1 == a2 {
        return Err(Error::Input("endpoint arcs must be distinct".into()));
    }
    for a in [a1, a2] {
        if !g.has_edge(a.tail, a.head) {
            return Err(Error::Input(format!("{a} is not an arc of the graph")));
        }
    }
    let report = check_hypotheses(g);
    if !report.all_hold() {
        return Err(Error::Hypotheses(report));
    }

    let arcs = if a1.tail == a2.tail {
        same_tail::same_tail_path(g, a1.tail, a1.head, a2.head)?
    } else {
        distinct_tail::distinct_tail_path(g, a1, a2)?
    };

    let (x, idx) = three_arc_graph(g)?;
    validate_path(&x, &idx, &arcs, (a1, a2)).map_err(|e| {
        Error::Internal(format!(
            "constructed path failed validation ({e}); arcs: {:?}",
            arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>()
        ))
    })?;
    Ok(CertifiedPath { arcs, endpoints: (a1, a2), verified: true })
}
