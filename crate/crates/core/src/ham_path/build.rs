//! Case-specific multigraphs for the Hamilton-path constructions and the
//! anchored open Eulerian trail.

use std::collections::BTreeMap;

use super::OddPath;
use crate::error::{Error, Result};
use crate::euler::{open_euler_trail, visit_at, Visit};
use crate::graph::{build_multigraph, is_edge_cut_pair, EdgeId, Multigraph, SimpleGraph, Trail, Vertex};

/// A multigraph with two pendant vertices `t`, `t'` attached by single
/// edges; removing them restores the base.
#[derive(Clone, Debug)]
pub struct PendantTrailGraph {
    pub base: Multigraph,
    pub full: Multigraph,
    pub t: Vertex,
    pub t_prime: Vertex,
    pub attach_x: Vertex,
    pub attach_u: Vertex,
    pub pendant_edge_t: EdgeId,
    pub pendant_edge_t_prime: EdgeId,
}

/// Copies `m` onto two extra vertices and pends `t`, `t'` to the given
/// attachment points. Edge ids of `m` are preserved.
pub(crate) fn extend_with_pendants(
    m: &Multigraph,
    attach1: Vertex,
    attach2: Vertex,
) -> (Multigraph, Vertex, Vertex, EdgeId, EdgeId) {
    let n = m.vertex_count();
    let mut full = Multigraph::new(n + 2);
    for e in 0..m.edge_count() {
        let (a, b) = m.endpoints(e);
        full.add_edge(a, b).expect("copying a valid multigraph");
    }
    let e_t = full.add_edge(n, attach1).expect("pendant edge");
    let e_tp = full.add_edge(n + 1, attach2).expect("pendant edge");
    (full, n, n + 1, e_t, e_tp)
}

fn unique_edge_between(m: &Multigraph, a: Vertex, b: Vertex) -> Result<EdgeId> {
    let ids: Vec<EdgeId> = m
        .incident_edges(a)
        .iter()
        .copied()
        .filter(|&e| m.other_end(e, a) == b)
        .collect();
    if ids.len() != 1 {
        return Err(Error::Internal(format!(
            "expected a single edge between {a} and {b}, found {}",
            ids.len()
        )));
    }
    Ok(ids[0])
}

/// Multigraph for a path between two arcs `xy`, `xv` with the same tail,
/// along a minimal odd path `p` from `y` to `v`, together with the anchor
/// visit through `x` on the two single edges.
///
/// When `x` lies on `p` it must sit at position 1 (reverse the path and
/// swap the heads first); position `l - 1` is reported as such, anything
/// deeper contradicts minimality and is a defect.
pub fn build_same_tail_multigraph(
    g: &SimpleGraph,
    x: Vertex,
    y: Vertex,
    v: Vertex,
    p: &OddPath,
) -> Result<(Multigraph, Visit)> {
    if y == v || !g.has_edge(x, y) || !g.has_edge(x, v) {
        return Err(Error::Input("same-tail construction needs two distinct arcs at x".into()));
    }
    if p.verts().first() != Some(&y) || p.verts().last() != Some(&v) {
        return Err(Error::Input("path must join the two arc heads".into()));
    }
    let norm = |(a, b): (Vertex, Vertex)| (a.min(b), a.max(b));

    let anchor_entry = match p.position_of(x) {
        None => y,
        Some(1) => p.verts()[2],
        Some(j) if j == p.length() - 1 => {
            return Err(Error::Input(
                "tail sits at the far end of the path; reverse it and swap the heads".into(),
            ))
        }
        Some(j) => {
            return Err(Error::Internal(format!(
                "tail at interior position {j} of a minimal odd path"
            )))
        }
    };
    let case_two = anchor_entry != y;

    let mut mult: BTreeMap<(Vertex, Vertex), usize> =
        g.edges().into_iter().map(|e| (e, 2)).collect();
    if case_two {
        // The edge from the tail into the path stays doubled; the rest of
        // the path alternates tripled/single starting from its second edge.
        let skip = norm((p.verts()[0], p.verts()[1]));
        for e in p.even_edges() {
            if e != skip {
                mult.insert(e, 3);
            }
        }
        for e in p.odd_edges() {
            mult.insert(e, 1);
        }
    } else {
        for e in p.even_edges() {
            mult.insert(e, 3);
        }
        for e in p.odd_edges() {
            mult.insert(e, 1);
        }
        mult.insert(norm((x, y)), 1);
    }
    mult.insert(norm((x, v)), 1);

    let m = build_multigraph(g, &mult)?;
    if m.degree(x) != 2 * g.degree(x) - 2 {
        return Err(Error::Internal(format!(
            "tail degree {} instead of {}",
            m.degree(x),
            2 * g.degree(x) - 2
        )));
    }
    for z in 0..g.vertex_count() {
        if m.degree(z) % 2 != 0 {
            return Err(Error::Internal(format!("odd multigraph degree at {z}")));
        }
    }

    let e1 = unique_edge_between(&m, x, anchor_entry)?;
    let e2 = unique_edge_between(&m, x, v)?;
    Ok((m, Visit::new(anchor_entry, x, v, e1, e2)))
}

/// Multigraph for a path between arcs with distinct tails `x`, `u`, along
/// a minimal odd path `p` from `x` to `u`: path edges alternate
/// single/tripled, everything else is doubled, and pendants `t`, `t'`
/// hang off the two tails.
pub fn build_distinct_tail_multigraph(
    g: &SimpleGraph,
    x: Vertex,
    u: Vertex,
    p: &OddPath,
) -> Result<PendantTrailGraph> {
    if p.verts().first() != Some(&x) || p.verts().last() != Some(&u) {
        return Err(Error::Input("path must join the two tails".into()));
    }
    let mut mult: BTreeMap<(Vertex, Vertex), usize> =
        g.edges().into_iter().map(|e| (e, 2)).collect();
    for e in p.even_edges() {
        mult.insert(e, 1);
    }
    for e in p.odd_edges() {
        mult.insert(e, 3);
    }
    let base = build_multigraph(g, &mult)?;
    if base.degree(x) != 2 * g.degree(x) - 1 || base.degree(u) != 2 * g.degree(u) - 1 {
        return Err(Error::Internal("tail degrees are off in the pendant construction".into()));
    }
    let (full, t, t_prime, pendant_edge_t, pendant_edge_t_prime) =
        extend_with_pendants(&base, x, u);
    Ok(PendantTrailGraph {
        base,
        full,
        t,
        t_prime,
        attach_x: x,
        attach_u: u,
        pendant_edge_t,
        pendant_edge_t_prime,
    })
}

/// Picks guard neighbors `x'` of `x` (avoiding `y` and the path) and `u'`
/// of `u` (avoiding `v` and the path). In the fully degenerate case both
/// leftover edges must not form an edge cut; the choice is swapped until
/// they do not.
pub fn choose_guard_neighbors(
    g: &SimpleGraph,
    x: Vertex,
    y: Vertex,
    u: Vertex,
    v: Vertex,
    p: &OddPath,
) -> Result<(Vertex, Vertex)> {
    let x1 = p.verts()[1];
    let xl1 = p.verts()[p.length() - 1];
    let x_opts: Vec<Vertex> =
        g.neighbors(x).iter().copied().filter(|&w| w != y && w != x1).collect();
    let u_opts: Vec<Vertex> =
        g.neighbors(u).iter().copied().filter(|&w| w != v && w != xl1).collect();
    if x_opts.is_empty() || u_opts.is_empty() {
        return Err(Error::Input("no guard neighbor available; minimum degree too small".into()));
    }

    let degenerate = g.degree(x) == 3 && g.degree(u) == 3 && y == x1 && v == xl1;
    if !degenerate {
        return Ok((x_opts[0], u_opts[0]));
    }

    for &xg in &x_opts {
        for &ug in &u_opts {
            let z = g.neighbors(x).iter().copied().find(|&w| w != x1 && w != xg).unwrap();
            let w = g.neighbors(u).iter().copied().find(|&w| w != xl1 && w != ug).unwrap();
            let e1 = (x.min(z), x.max(z));
            let e2 = (u.min(w), u.max(w));
            let cuts = if e1 == e2 {
                // Same leftover edge: only a bridge could disconnect, and
                // 2-edge-connected inputs have none.
                false
            } else {
                is_edge_cut_pair(g, e1, e2)
            };
            if !cuts {
                return Ok((xg, ug));
            }
        }
    }
    Err(Error::Internal("every guard choice leaves an edge cut".into()))
}

/// Open Eulerian trail of the pendant multigraph from `t` to `t'` whose
/// first and last visits are `(t, x, x_guard)` and `(u_guard, u, t')`.
///
/// When `reinsert_x` names a neighbor `z` of `x`, the doubled edges to `z`
/// are withheld from the tour and spliced back as a bounce `z, x, z` at an
/// occurrence of `z`, forcing the remaining passage of the trail through
/// `x` to run between its other two neighbors (and likewise for
/// `reinsert_u`).
pub fn open_euler_trail_with_anchors(
    ptg: &PendantTrailGraph,
    x_guard: Vertex,
    u_guard: Vertex,
    reinsert_x: Option<Vertex>,
    reinsert_u: Option<Vertex>,
) -> Result<Trail> {
    let full = &ptg.full;
    let (x, u) = (ptg.attach_x, ptg.attach_u);
    let mut enabled = vec![true; full.edge_count()];
    enabled[ptg.pendant_edge_t] = false;
    enabled[ptg.pendant_edge_t_prime] = false;

    fn first_edge(m: &Multigraph, enabled: &[bool], a: Vertex, b: Vertex) -> Result<EdgeId> {
        m.incident_edges(a)
            .iter()
            .copied()
            .find(|&e| m.other_end(e, a) == b && enabled[e])
            .ok_or_else(|| Error::Internal(format!("no enabled edge between {a} and {b}")))
    }
    fn withheld(m: &Multigraph, enabled: &[bool], a: Vertex, z: Vertex) -> Result<Vec<EdgeId>> {
        let ids: Vec<EdgeId> = m
            .incident_edges(a)
            .iter()
            .copied()
            .filter(|&e| m.other_end(e, a) == z && enabled[e])
            .collect();
        if ids.len() != 2 {
            return Err(Error::Internal(format!(
                "expected a doubled edge between {a} and {z} to withhold, found {}",
                ids.len()
            )));
        }
        Ok(ids)
    }

    let exx = first_edge(full, &enabled, x, x_guard)?;
    enabled[exx] = false;
    let euu = first_edge(full, &enabled, u, u_guard)?;
    enabled[euu] = false;

    let x_bounce = match reinsert_x {
        Some(z) => {
            let ids = withheld(full, &enabled, x, z)?;
            enabled[ids[0]] = false;
            enabled[ids[1]] = false;
            Some((z, ids))
        }
        None => None,
    };
    let u_bounce = match reinsert_u {
        Some(w) => {
            let ids = withheld(full, &enabled, u, w)?;
            enabled[ids[0]] = false;
            enabled[ids[1]] = false;
            Some((w, ids))
        }
        None => None,
    };

    let inner = open_euler_trail(full, x_guard, u_guard, &enabled).map_err(|e| {
        Error::Internal(format!("anchored trail construction failed: {e}"))
    })?;

    let mut verts = Vec::with_capacity(inner.verts().len() + 4);
    verts.push(ptg.t);
    verts.push(x);
    verts.extend_from_slice(inner.verts());
    verts.push(u);
    verts.push(ptg.t_prime);
    let mut edges = Vec::with_capacity(inner.len() + 4);
    edges.push(ptg.pendant_edge_t);
    edges.push(exx);
    edges.extend_from_slice(inner.edges());
    edges.push(euu);
    edges.push(ptg.pendant_edge_t_prime);
    let mut trail = Trail::new(verts, edges, false);

    let bounces = [
        x_bounce.map(|(z, ids)| (z, x, ids)),
        u_bounce.map(|(w, ids)| (w, u, ids)),
    ];
    for (z, mid, ids) in bounces.into_iter().flatten() {
        let pos = trail
            .position_of(z)
            .ok_or_else(|| Error::Internal(format!("withheld neighbor {z} is not on the trail")))?;
        trail = trail.with_detour(pos, mid, ids[0], ids[1]);
    }

    trail.validate(full)?;
    if trail.len() != full.edge_count() {
        return Err(Error::Internal("anchored trail does not cover the multigraph".into()));
    }
    let first = visit_at(&trail, 1);
    let last = visit_at(&trail, trail.len() - 1);
    if (first.entry, first.mid, first.exit) != (ptg.t, x, x_guard)
        || (last.entry, last.mid, last.exit) != (u_guard, u, ptg.t_prime)
    {
        return Err(Error::Internal(format!(
            "anchored trail endpoints are wrong: first {first}, last {last}"
        )));
    }
    Ok(trail)
}
