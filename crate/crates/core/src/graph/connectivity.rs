//! Connectivity predicates: BFS reachability, DFS low-link bridges,
//! and explicit-removal edge-pair cuts.

use super::{SimpleGraph, Vertex};

/// True iff `g` is nonempty and every vertex is reachable from vertex 0.
/// The empty graph counts as disconnected.
pub fn is_connected(g: &SimpleGraph) -> bool {
    let excluded = vec![false; g.vertex_count()];
    is_connected_excluding(g, &excluded)
}

/// Connectivity of the subgraph induced by the non-excluded vertices.
/// Returns false when no vertex remains.
pub fn is_connected_excluding(g: &SimpleGraph, excluded: &[bool]) -> bool {
    let n = g.vertex_count();
    debug_assert_eq!(excluded.len(), n);
    let start = match (0..n).find(|&v| !excluded[v]) {
        Some(v) => v,
        None => return false,
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !excluded[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == (0..n).filter(|&v| !excluded[v]).count()
}

/// Bridges of `g` by iterative DFS low-link, as `(u, v)` with `u < v`.
pub fn bridges(g: &SimpleGraph) -> Vec<(Vertex, Vertex)> {
    let n = g.vertex_count();
    let mut ord = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut next = 0usize;
    let mut out = Vec::new();

    // Frame: (vertex, parent, index into neighbor list, parent edge consumed).
    for root in 0..n {
        if ord[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(Vertex, Vertex, usize, bool)> = vec![(root, usize::MAX, 0, false)];
        ord[root] = next;
        low[root] = next;
        next += 1;
        while let Some(&mut (v, parent, ref mut i, ref mut parent_used)) = stack.last_mut() {
            if *i < g.neighbors(v).len() {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if w == parent && !*parent_used {
                    // Skip the tree edge back to the parent exactly once;
                    // a parallel-free simple graph has no second copy.
                    *parent_used = true;
                    continue;
                }
                if ord[w] == usize::MAX {
                    ord[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push((w, v, 0, false));
                } else {
                    low[v] = low[v].min(ord[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > ord[p] {
                        out.push((p.min(v), p.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// True iff `g` is connected and has no bridge.
pub fn is_two_edge_connected(g: &SimpleGraph) -> bool {
    is_connected(g) && bridges(g).is_empty()
}

/// True iff removing both edges disconnects `g`. Panics if either pair is
/// not an edge or the two coincide.
pub fn is_edge_cut_pair(g: &SimpleGraph, e1: (Vertex, Vertex), e2: (Vertex, Vertex)) -> bool {
    let norm = |(u, v): (Vertex, Vertex)| (u.min(v), u.max(v));
    let (e1, e2) = (norm(e1), norm(e2));
    assert!(g.has_edge(e1.0, e1.1), "e1 is not an edge");
    assert!(g.has_edge(e2.0, e2.1), "e2 is not an edge");
    assert_ne!(e1, e2, "edge pair must be distinct");

    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    let banned = |a: Vertex, b: Vertex| {
        let e = (a.min(b), a.max(b));
        e == e1 || e == e2
    };
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !banned(v, w) && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count != n
}
