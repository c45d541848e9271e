//! Named graphs and seeded random generators used by tests, sweeps and
//! benchmarks. Every generator is deterministic given its `Rng`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{SimpleGraph, Vertex};
use crate::graph::{bridges, is_connected};

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(a + b);
    for u in 0..a {
        for v in a..(a + b) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3);
    let mut g = SimpleGraph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n).unwrap();
    }
    g
}

/// Path on `n >= 2` vertices.
pub fn path(n: usize) -> SimpleGraph {
    assert!(n >= 2);
    let mut g = SimpleGraph::new(n);
    for v in 0..n - 1 {
        g.add_edge(v, v + 1).unwrap();
    }
    g
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v).unwrap();
    }
    g
}

/// Hypercube graph on `2^d` vertices.
pub fn hypercube(d: u32) -> SimpleGraph {
    let n = 1usize << d;
    let mut g = SimpleGraph::new(n);
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                g.add_edge(v, w).unwrap();
            }
        }
    }
    g
}

/// Petersen graph: outer cycle 0..5, inner pentagram 5..10, spokes i <-> i+5.
pub fn petersen() -> SimpleGraph {
    let mut g = SimpleGraph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    g
}

/// Join of `g` and `h`: disjoint union plus all cross edges. Vertices of
/// `h` are shifted by `g.vertex_count()`.
pub fn join(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let off = g.vertex_count();
    let mut out = SimpleGraph::new(off + h.vertex_count());
    for (u, v) in g.edges() {
        out.add_edge(u, v).unwrap();
    }
    for (u, v) in h.edges() {
        out.add_edge(u + off, v + off).unwrap();
    }
    for u in 0..off {
        for v in off..out.vertex_count() {
            out.add_edge(u, v).unwrap();
        }
    }
    out
}

/// Decodes a labeled graph on `n` vertices from an edge bitmask over the
/// lexicographic pair order (0,1), (0,2), ..., (n-2, n-1).
pub fn from_bitmask(n: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Random connected graph: a random spanning tree plus `extra` distinct
/// random edges.
pub fn random_connected(n: usize, extra: usize, rng: &mut impl Rng) -> SimpleGraph {
    assert!(n >= 1);
    let mut g = SimpleGraph::new(n);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).unwrap();
    }
    let max_edges = n * (n - 1) / 2;
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && g.edge_count() < max_edges && attempts < 100 * (extra + 1) {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
            added += 1;
        }
    }
    g
}

/// Random connected cubic graph on an even number of vertices, by the
/// pairing model with rejection.
pub fn random_cubic_connected(n: usize, rng: &mut impl Rng) -> SimpleGraph {
    assert!(n >= 4 && n.is_multiple_of(2), "cubic graphs need even n >= 4");
    loop {
        let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let mut g = SimpleGraph::new(n);
        let mut ok = true;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                ok = false;
                break;
            }
            g.add_edge(u, v).unwrap();
        }
        if ok && is_connected(&g) {
            return g;
        }
    }
}

/// Random connected graph with minimum degree at least three.
pub fn random_min_degree_three(n: usize, extra: usize, rng: &mut impl Rng) -> SimpleGraph {
    assert!(n >= 4);
    let mut g = random_connected(n, extra, rng);
    let mut attempts = 0;
    while g.min_degree() < 3 && attempts < 10_000 {
        attempts += 1;
        let v = (0..n).find(|&v| g.degree(v) < 3).unwrap();
        let w = rng.gen_range(0..n);
        if w != v && !g.has_edge(v, w) {
            g.add_edge(v, w).unwrap();
        }
    }
    assert!(g.min_degree() >= 3, "failed to reach minimum degree three");
    g
}

/// Random graph that is hamiltonian-3-arc eligible and contains degree-two
/// vertices: a connected core with minimum degree three, with `subdivisions`
/// edges subdivided once each. Subdivided edges are chosen so the core
/// minus those edges stays connected.
pub fn random_with_degree_two(
    core_n: usize,
    extra: usize,
    subdivisions: usize,
    rng: &mut impl Rng,
) -> SimpleGraph {
    let core = random_min_degree_three(core_n, extra, rng);
    let mut candidates = core.edges();
    candidates.shuffle(rng);
    let mut chosen: Vec<(Vertex, Vertex)> = Vec::new();
    for &(u, v) in &candidates {
        if chosen.len() == subdivisions {
            break;
        }
        // The core minus all chosen edges must stay connected.
        let mut trial = SimpleGraph::new(core_n);
        for (a, b) in core.edges() {
            let e = (a, b);
            if !chosen.contains(&e) && e != (u, v) {
                trial.add_edge(a, b).unwrap();
            }
        }
        if is_connected(&trial) {
            chosen.push((u, v));
        }
    }
    let n = core_n + chosen.len();
    let mut g = SimpleGraph::new(n);
    for (u, v) in core.edges() {
        if !chosen.contains(&(u, v)) {
            g.add_edge(u, v).unwrap();
        }
    }
    for (i, &(u, v)) in chosen.iter().enumerate() {
        let mid = core_n + i;
        g.add_edge(u, mid).unwrap();
        g.add_edge(mid, v).unwrap();
    }
    g
}

/// Random connected graph that is 2-edge-connected, has minimum degree
/// three, and joins every vertex pair by an odd-length path.
pub fn random_hamilton_path_eligible(n: usize, extra: usize, rng: &mut impl Rng) -> SimpleGraph {
    loop {
        let g = random_min_degree_three(n, extra, rng);
        if bridges(&g).is_empty() && crate::ham_path::has_all_pairs_odd_paths(&g) {
            return g;
        }
    }
}
