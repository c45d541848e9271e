//! The 3-arc graph operator `X(G)`, its iterates, and the split graph used
//! by the connectivity criterion.

use crate::error::{Error, Result};
use crate::graph::{Arc, SimpleGraph, Vertex};

/// Default vertex cap for iterated construction; `X` grows geometrically.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// Bijection between the arcs of a graph and the vertex indices of its
/// 3-arc graph. Arcs are sorted by `(tail, head)`, so `uv` and `vu` get
/// distinct, stable indices.
#[derive(Clone, Debug)]
pub struct ArcIndex {
    arcs: Vec<Arc>,
    offsets: Vec<usize>,
}

impl ArcIndex {
    pub fn new(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for u in 0..n {
            for &v in g.neighbors(u) {
                arcs.push(Arc::new(u, v));
            }
            offsets.push(arcs.len());
        }
        ArcIndex { arcs, offsets }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arc(&self, i: usize) -> Arc {
        self.arcs[i]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Index of an arc, or `None` if its endpoints are not adjacent.
    pub fn index_of(&self, a: Arc) -> Option<usize> {
        if a.tail + 1 >= self.offsets.len() {
            return None;
        }
        let lo = self.offsets[a.tail];
        let hi = self.offsets[a.tail + 1];
        self.arcs[lo..hi].binary_search_by_key(&a.head, |x| x.head).ok().map(|k| lo + k)
    }

    pub fn contains(&self, a: Arc) -> bool {
        self.index_of(a).is_some()
    }

    /// Lines `index tail head`, one per arc.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, a) in self.arcs.iter().enumerate() {
            out.push_str(&format!("{i} {} {}\n", a.tail, a.head));
        }
        out
    }
}

/// Builds the 3-arc graph of `g` together with the arc numbering.
///
/// Vertices of the output are arc indices; arcs `uv` and `xy` are adjacent
/// iff `u` and `x` are adjacent in `g`, `v != x`, and `y != u`.
pub fn three_arc_graph(g: &SimpleGraph) -> Result<(SimpleGraph, ArcIndex)> {
    if g.edge_count() == 0 {
        return Err(Error::Input("3-arc graph of a graph with no edges".into()));
    }
    let idx = ArcIndex::new(g);
    let mut x = SimpleGraph::new(idx.len());
    for (u, w) in g.edges() {
        // Each X-edge corresponds to the edge between the tails, so this
        // emits every adjacency exactly once.
        for &v in g.neighbors(u) {
            if v == w {
                continue;
            }
            let a = idx.index_of(Arc::new(u, v)).unwrap();
            for &y in g.neighbors(w) {
                if y == u {
                    continue;
                }
                let b = idx.index_of(Arc::new(w, y)).unwrap();
                x.add_edge(a, b)?;
            }
        }
    }
    Ok((x, idx))
}

/// `i`-fold application of [`three_arc_graph`] with the default size cap.
pub fn iterate_three_arc(g: &SimpleGraph, i: usize) -> Result<SimpleGraph> {
    iterate_three_arc_capped(g, i, DEFAULT_SIZE_CAP)
}

/// `i`-fold application of [`three_arc_graph`], failing once an intermediate
/// graph would exceed `cap` vertices.
pub fn iterate_three_arc_capped(g: &SimpleGraph, i: usize, cap: usize) -> Result<SimpleGraph> {
    if i == 0 {
        return Err(Error::Input("iteration count must be positive".into()));
    }
    let mut cur = g.clone();
    for _ in 0..i {
        let next_size = 2 * cur.edge_count();
        if next_size > cap {
            return Err(Error::SizeCap { size: next_size, cap });
        }
        let (x, _) = three_arc_graph(&cur)?;
        cur = x;
    }
    Ok(cur)
}

/// Splits every degree-two vertex `v` with neighbors `u, w` into two new
/// nonadjacent vertices, one joined only to `u` and one only to `w`. All
/// other vertices and edges are unchanged. The result is connected exactly
/// when the 3-arc graph of a minimum-degree-two graph is.
pub fn hat_graph(g: &SimpleGraph) -> SimpleGraph {
    let n = g.vertex_count();
    let split: Vec<bool> = (0..n).map(|v| g.degree(v) == 2).collect();

    // Unsplit vertices keep their relative order; each split vertex is
    // replaced by two fresh indices, one per neighbor.
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if !split[v] {
            map[v] = next;
            next += 1;
        }
    }
    let mut half = vec![[usize::MAX; 2]; n];
    for v in 0..n {
        if split[v] {
            half[v] = [next, next + 1];
            next += 2;
        }
    }
    let half_of = |v: Vertex, toward: Vertex| -> Vertex {
        let side = if g.neighbors(v)[0] == toward { 0 } else { 1 };
        half[v][side]
    };

    let mut out = SimpleGraph::new(next);
    for (u, v) in g.edges() {
        let a = if split[u] { half_of(u, v) } else { map[u] };
        let b = if split[v] { half_of(v, u) } else { map[v] };
        out.add_edge(a, b).unwrap();
    }
    out
}
