//! Hamilton path between two arcs with the same tail.
//!
//! The tour of the case multigraph is anchored through the two single
//! edges at the tail, cleaned of twin visits away from the tail, and then
//! cut open at a visit chosen so that the first and last visits of the
//! resulting trail can be matched to the two prescribed arcs while the
//! remaining visits at the tail still match the remaining arcs. When no
//! induced visit supports the cut directly, a single bow-tie at the tail
//! produces one.

use super::build::{build_same_tail_multigraph, extend_with_pendants};
use super::kl::constrained_pm;
use super::shortest_odd_path;
use crate::error::{Error, Result};
use crate::euler::{
    anchored_euler_tour, bow_tie_at, interior_positions, occurrence_matchings, occurrences_at,
    repair_with, visit_occurrences,
};
use crate::graph::{Arc, SimpleGraph, Trail, Vertex};

pub(crate) fn same_tail_path(
    g: &SimpleGraph,
    x: Vertex,
    y: Vertex,
    v: Vertex,
) -> Result<Vec<Arc>> {
    // Orient the construction so that if the tail sits on the minimal odd
    // path between the heads, it sits right after the start.
    let p0 = shortest_odd_path(g, y, v)
        .ok_or_else(|| Error::Internal(format!("no odd path between {y} and {v}")))?;
    let (hy, hv, p, swapped) = match p0.position_of(x) {
        Some(j) if j == p0.length() - 1 && j != 1 => (v, y, p0.reversed(), true),
        _ => (y, v, p0, false),
    };

    let (m, anchor) = build_same_tail_multigraph(g, x, hy, hv, &p)?;
    let tour = anchored_euler_tour(&m, anchor.entry, anchor.entry_edge, x, anchor.exit_edge, anchor.exit)?;
    let mut tour = repair_with(&tour, &m, g, &[x], Some(&anchor))?;

    // Repair preserves the anchor only up to orientation.
    if !occurrences_at(&tour, x).iter().any(|(_, p)| *p == anchor) {
        tour = tour.reversed();
    }
    if !occurrences_at(&tour, x).iter().any(|(_, p)| *p == anchor) {
        return Err(Error::Internal("anchor visit lost after repair".into()));
    }

    let first_arc = Arc::new(x, hy);
    let last_arc = Arc::new(x, hv);
    let (tour, cut_pos) = select_cut(g, &tour, x, hy, hv)?;

    // Cut the tour open at the chosen visit, pending a start and an end
    // vertex onto the tail.
    let (full, t, tp, e_t, e_tp) = extend_with_pendants(&m, x, x);
    let rotated = if cut_pos == tour.len() { tour.clone() } else { tour.rotated(cut_pos) };
    let mut verts = Vec::with_capacity(rotated.verts().len() + 2);
    verts.push(t);
    verts.extend_from_slice(rotated.verts());
    verts.push(tp);
    let mut edges = Vec::with_capacity(rotated.len() + 2);
    edges.push(e_t);
    edges.extend_from_slice(rotated.edges());
    edges.push(e_tp);
    let w = Trail::new(verts, edges, false);
    w.validate(&full)?;

    let occs = occurrences_at(&w, x);
    let forced = vec![(1usize, first_arc), (w.len() - 1, last_arc)];
    let arcs_at_x: Vec<Arc> = g.neighbors(x).iter().map(|&h| Arc::new(x, h)).collect();
    let tail_pm = constrained_pm(&occs, &arcs_at_x, &forced).ok_or_else(|| {
        Error::Internal(format!("selected cut does not support the endpoint arcs; trail {w}"))
    })?;
    let interior = occurrence_matchings(&w, g, &[x])?;

    let mut seq: Vec<Arc> = visit_occurrences(&w)
        .iter()
        .map(|(pos, _)| tail_pm.get(pos).or_else(|| interior.get(pos)).copied().unwrap())
        .collect();
    if swapped {
        seq.reverse();
    }
    Ok(seq)
}

/// Finds a tour orientation, an optional bow-tie at the tail, and a cut
/// visit such that cutting there lets the trail ends take the two
/// prescribed arcs while the interior visits at the tail cover the rest.
fn select_cut(
    g: &SimpleGraph,
    tour: &Trail,
    x: Vertex,
    y: Vertex,
    v: Vertex,
) -> Result<(Trail, usize)> {
    let arcs_at_x: Vec<Arc> = g.neighbors(x).iter().map(|&h| Arc::new(x, h)).collect();
    let pool: Vec<Arc> =
        arcs_at_x.iter().copied().filter(|a| a.head != y && a.head != v).collect();

    let try_trail = |t: &Trail| -> Option<usize> {
        let occs = occurrences_at(t, x);
        for &(pos, vis) in &occs {
            // First trail visit will be (t, x, vis.exit), last
            // (vis.entry, x, t'); they must accept the endpoint arcs.
            if vis.exit == y || vis.entry == v {
                continue;
            }
            let rest: Vec<_> = occs.iter().copied().filter(|(q, _)| *q != pos).collect();
            if constrained_pm(&rest, &pool, &[]).is_some() {
                return Some(pos);
            }
        }
        None
    };

    for t in [tour.clone(), tour.reversed()] {
        if let Some(pos) = try_trail(&t) {
            return Ok((t, pos));
        }
    }
    // One bow-tie at the tail re-pairs its visits; the proofs only ever
    // need a single one.
    for base in [tour.clone(), tour.reversed()] {
        let occs = occurrences_at(&base, x);
        for i in 0..occs.len() {
            for j in (i + 1)..occs.len() {
                let (t, pos) = interior_positions(&base, &[occs[i].0, occs[j].0]);
                let cand = bow_tie_at(&t, pos[0].min(pos[1]), pos[0].max(pos[1]));
                if let Some(cut) = try_trail(&cand) {
                    return Ok((cand, cut));
                }
            }
        }
    }
    Err(Error::Internal(format!(
        "no cut at {x} supports the arcs {x}>{y} and {x}>{v}; tour: {tour}"
    )))
}
