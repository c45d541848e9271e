//! Simple graphs, edge-identified multigraphs, and trails.
//!
//! Vertices are dense 0-based indices. Multigraph edges carry dense ids so
//! that parallel copies of the same underlying edge stay distinguishable;
//! trail rewrites rely on that identity.

mod connectivity;
mod io;
mod trail;

pub use connectivity::{bridges, is_connected, is_connected_excluding, is_edge_cut_pair, is_two_edge_connected};
pub use io::{parse_edge_list, serialize_edge_list};
pub use trail::Trail;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
pub type Vertex = usize;
/// Dense multigraph edge id.
pub type EdgeId = usize;

/// An oriented edge `tail -> head` of a simple graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Arc { tail, head }
    }

    /// The same edge traversed the other way.
    pub fn reversed(self) -> Self {
        Arc { tail: self.head, head: self.tail }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.tail, self.head)
    }
}

/// Undirected loopless simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
}

impl SimpleGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Input(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Input(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::Input(format!("duplicate edge ({u}, {v})")));
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Vertices of degree exactly `d`, ascending.
    pub fn vertices_of_degree(&self, d: usize) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == d).collect()
    }
}

/// Multigraph with identified edges; parallel edges allowed, loops are not.
#[derive(Clone, Debug)]
pub struct Multigraph {
    n: usize,
    ends: Vec<(Vertex, Vertex)>,
    inc: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, ends: Vec::new(), inc: vec![Vec::new(); n] }
    }

    /// Adds a (possibly parallel) edge and returns its id.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        if u >= self.n || v >= self.n {
            return Err(Error::Input(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Input(format!("loop at vertex {u}")));
        }
        let id = self.ends.len();
        self.ends.push((u.min(v), u.max(v)));
        self.inc[u].push(id);
        self.inc[v].push(id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    /// Degree counting parallel edges.
    pub fn degree(&self, v: Vertex) -> usize {
        self.inc[v].len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.ends[e]
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.ends[e];
        debug_assert!(v == a || v == b);
        if v == a { b } else { a }
    }

    pub fn is_incident(&self, e: EdgeId, v: Vertex) -> bool {
        let (a, b) = self.ends[e];
        v == a || v == b
    }

    /// Incident edge ids of `v`, ascending.
    pub fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.inc[v]
    }

    /// Distinct neighbors of `v` in the underlying simple graph, ascending.
    pub fn simple_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.inc[v].iter().map(|&e| self.other_end(e, v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Per-neighbor edge multiplicities at `v`.
    pub fn neighbor_multiplicities(&self, v: Vertex) -> BTreeMap<Vertex, usize> {
        let mut out = BTreeMap::new();
        for &e in &self.inc[v] {
            *out.entry(self.other_end(e, v)).or_insert(0) += 1;
        }
        out
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.inc[u].iter().filter(|&&e| self.other_end(e, u) == v).count()
    }
}

/// Builds a multigraph from `g` with the given per-edge multiplicity.
///
/// Edge ids are assigned deterministically: edges of `g` in lexicographic
/// order, copies of each edge consecutive.
pub fn build_multigraph(
    g: &SimpleGraph,
    multiplicity: &BTreeMap<(Vertex, Vertex), usize>,
) -> Result<Multigraph> {
    let mut m = Multigraph::new(g.vertex_count());
    for (u, v) in g.edges() {
        let &k = multiplicity
            .get(&(u, v))
            .or_else(|| multiplicity.get(&(v, u)))
            .ok_or_else(|| Error::Input(format!("no multiplicity given for edge ({u}, {v})")))?;
        if k == 0 {
            return Err(Error::Input(format!("zero multiplicity for edge ({u}, {v})")));
        }
        for _ in 0..k {
            m.add_edge(u, v)?;
        }
    }
    Ok(m)
}

/// Multigraph with every edge of `g` doubled.
pub fn doubled(g: &SimpleGraph) -> Multigraph {
    let mult: BTreeMap<_, _> = g.edges().into_iter().map(|e| (e, 2)).collect();
    build_multigraph(g, &mult).expect("doubling a valid graph cannot fail")
}
