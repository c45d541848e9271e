//! Eulerian tours and trails: plain Hierholzer, the bounce-constrained
//! variant for degree-two vertices, anchored tours through a prescribed
//! 2-path, and open trails between prescribed endpoints.

use super::{occurrences_at, visit_at};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Trail, Vertex};

/// Hierholzer with deterministic edge order (ascending edge id per vertex).
/// Covers the enabled edges; returns the raw vertex/edge sequence.
fn hierholzer(
    m: &Multigraph,
    start: Vertex,
    enabled: &[bool],
) -> Result<(Vec<Vertex>, Vec<EdgeId>)> {
    let mut ptr = vec![0usize; m.vertex_count()];
    let mut used = vec![false; m.edge_count()];
    let mut stack_v: Vec<Vertex> = vec![start];
    let mut stack_e: Vec<Option<EdgeId>> = vec![None];
    let mut out_v: Vec<Vertex> = Vec::new();
    let mut out_e: Vec<Option<EdgeId>> = Vec::new();

    while let Some(&v) = stack_v.last() {
        let inc = m.incident_edges(v);
        let mut advanced = false;
        while ptr[v] < inc.len() {
            let e = inc[ptr[v]];
            ptr[v] += 1;
            if enabled[e] && !used[e] {
                used[e] = true;
                stack_v.push(m.other_end(e, v));
                stack_e.push(Some(e));
                advanced = true;
                break;
            }
        }
        if !advanced {
            out_v.push(stack_v.pop().unwrap());
            out_e.push(stack_e.pop().unwrap());
        }
    }
    out_v.reverse();
    out_e.reverse();

    let covered = used.iter().zip(enabled).all(|(&u, &en)| u == en);
    if !covered {
        return Err(Error::Input("edge set is disconnected from the start vertex".into()));
    }
    let edges: Vec<EdgeId> = out_e.into_iter().skip(1).map(Option::unwrap).collect();
    Ok((out_v, edges))
}

fn enabled_degree(m: &Multigraph, v: Vertex, enabled: &[bool]) -> usize {
    m.incident_edges(v).iter().filter(|&&e| enabled[e]).count()
}

/// Closed Eulerian tour of the enabled edges, starting and ending at `start`.
pub(crate) fn euler_tour_filtered(
    m: &Multigraph,
    start: Vertex,
    enabled: &[bool],
) -> Result<Trail> {
    for v in 0..m.vertex_count() {
        let d = enabled_degree(m, v, enabled);
        if !d.is_multiple_of(2) {
            return Err(Error::Input(format!("vertex {v} has odd degree {d}")));
        }
    }
    if enabled_degree(m, start, enabled) == 0 {
        return Err(Error::Input(format!("start vertex {start} is isolated")));
    }
    let (verts, edges) = hierholzer(m, start, enabled)?;
    let t = Trail::new(verts, edges, true);
    debug_assert!(t.validate(m).is_ok());
    Ok(t)
}

/// Closed Eulerian tour of the whole multigraph from `start`.
pub fn euler_tour(m: &Multigraph, start: Vertex) -> Result<Trail> {
    let enabled = vec![true; m.edge_count()];
    euler_tour_filtered(m, start, &enabled)
}

/// Open Eulerian trail over the enabled edges from `from` to `to`.
pub(crate) fn open_euler_trail(
    m: &Multigraph,
    from: Vertex,
    to: Vertex,
    enabled: &[bool],
) -> Result<Trail> {
    for v in 0..m.vertex_count() {
        let d = enabled_degree(m, v, enabled);
        let want_odd = (v == from) != (v == to);
        if (d % 2 == 1) != want_odd {
            return Err(Error::Input(format!(
                "vertex {v} has degree {d}, wrong parity for a trail {from} -> {to}"
            )));
        }
    }
    if enabled_degree(m, from, enabled) == 0 {
        return Err(Error::Input(format!("start vertex {from} is isolated")));
    }
    let (verts, edges) = hierholzer(m, from, enabled)?;
    if *verts.last().unwrap() != to {
        return Err(Error::Internal(format!(
            "open trail ended at {} instead of {to}",
            verts.last().unwrap()
        )));
    }
    let t = Trail::new(verts, edges, from == to);
    debug_assert!(t.validate(m).is_ok());
    Ok(t)
}

/// Eulerian tour of a doubled graph in which every passage through a
/// degree-two vertex bounces straight back: tour the rest, then splice the
/// bounce `u, v, u` at the first occurrence of each neighbor.
pub fn euler_tour_s2_compatible(m: &Multigraph, s2: &[Vertex]) -> Result<Trail> {
    let n = m.vertex_count();
    let is_s2 = {
        let mut mask = vec![false; n];
        for &v in s2 {
            mask[v] = true;
        }
        mask
    };
    let mut enabled = vec![true; m.edge_count()];
    for (e, slot) in enabled.iter_mut().enumerate() {
        let (a, b) = m.endpoints(e);
        if is_s2[a] || is_s2[b] {
            *slot = false;
        }
    }
    let start = (0..n)
        .find(|&v| !is_s2[v] && enabled_degree(m, v, &enabled) > 0)
        .ok_or_else(|| Error::Input("no usable start vertex outside the degree-two set".into()))?;
    let mut trail = euler_tour_filtered(m, start, &enabled)?;

    let mut s2_sorted = s2.to_vec();
    s2_sorted.sort_unstable();
    for &v in &s2_sorted {
        let mult = m.neighbor_multiplicities(v);
        let neighbors: Vec<Vertex> = mult.keys().copied().collect();
        if neighbors.len() != 2 || mult.values().any(|&k| k != 2) {
            return Err(Error::Input(format!(
                "vertex {v} is not a doubled degree-two vertex"
            )));
        }
        for &u in &neighbors {
            let ids: Vec<EdgeId> = m
                .incident_edges(v)
                .iter()
                .copied()
                .filter(|&e| m.other_end(e, v) == u)
                .collect();
            let pos = trail.position_of(u).ok_or_else(|| {
                Error::Input(format!("neighbor {u} of degree-two vertex {v} is not on the tour"))
            })?;
            trail = trail.with_detour(pos, v, ids[0], ids[1]);
        }
    }
    if trail.len() != m.edge_count() {
        return Err(Error::Internal("spliced tour does not cover the multigraph".into()));
    }
    debug_assert!(trail.validate(m).is_ok());
    Ok(trail)
}

/// Eulerian tour of `m` that traverses `a, e1, x, e2, v` consecutively, by
/// touring with the 2-path fused into a virtual edge and unfusing. Fails
/// when no such tour exists.
pub(crate) fn anchored_euler_tour(
    m: &Multigraph,
    a: Vertex,
    e1: EdgeId,
    x: Vertex,
    e2: EdgeId,
    v: Vertex,
) -> Result<Trail> {
    debug_assert!(m.is_incident(e1, a) && m.is_incident(e1, x));
    debug_assert!(m.is_incident(e2, x) && m.is_incident(e2, v));
    debug_assert_ne!(a, v);

    let mut aug = m.clone();
    let virt = aug.add_edge(a, v)?;
    let mut enabled = vec![true; aug.edge_count()];
    enabled[e1] = false;
    enabled[e2] = false;

    let tour = euler_tour_filtered(&aug, a, &enabled).map_err(|_| {
        Error::Internal(format!(
            "no Eulerian tour anchors the 2-path ({a}, {x}, {v}); \
             the fused multigraph is disconnected"
        ))
    })?;

    let k = tour.edges().iter().position(|&e| e == virt).unwrap();
    let mut verts = tour.verts().to_vec();
    let mut edges = tour.edges().to_vec();
    let forward = verts[k] == a;
    verts.insert(k + 1, x);
    if forward {
        edges.splice(k..=k, [e1, e2]);
    } else {
        edges.splice(k..=k, [e2, e1]);
    }
    let mut trail = Trail::new(verts, edges, true);
    if !forward {
        trail = trail.reversed();
    }
    trail.validate(m)?;
    debug_assert!(occurrences_at(&trail, x)
        .iter()
        .any(|(pos, _)| visit_at(&trail, *pos).entry == a && visit_at(&trail, *pos).exit == v));
    Ok(trail)
}
