//! Hamilton path between two arcs with distinct tails.
//!
//! The trail runs between pendant vertices hung off the two tails, so both
//! prescribed arcs are matched at genuine trail ends. After the interior
//! repair, each end needs its reduced visit/arc graph (all visits at the
//! tail except the end visit, against all arcs except the prescribed one)
//! to have a perfect matching; a single bow-tie among the interior visits
//! at that tail produces one whenever it is missing.

use super::build::{build_distinct_tail_multigraph, choose_guard_neighbors, open_euler_trail_with_anchors};
use super::kl::constrained_pm;
use super::shortest_odd_path;
use crate::error::{Error, Result};
use crate::euler::{
    bow_tie_at, occurrence_matchings, occurrences_at, repair_with, visit_at, visit_occurrences,
};
use crate::graph::{Arc, SimpleGraph, Trail, Vertex};

pub(crate) fn distinct_tail_path(g: &SimpleGraph, a1: Arc, a2: Arc) -> Result<Vec<Arc>> {
    let (x, y) = (a1.tail, a1.head);
    let (u, v) = (a2.tail, a2.head);
    let p = shortest_odd_path(g, x, u)
        .ok_or_else(|| Error::Internal(format!("no odd path between {x} and {u}")))?;
    let x1 = p.verts()[1];
    let xl1 = p.verts()[p.length() - 1];

    let (x_guard, u_guard) = choose_guard_neighbors(g, x, y, u, v, &p)?;
    let del_x = (g.degree(x) == 3 && y == x1)
        .then(|| g.neighbors(x).iter().copied().find(|&w| w != x1 && w != x_guard).unwrap());
    let del_u = (g.degree(u) == 3 && v == xl1)
        .then(|| g.neighbors(u).iter().copied().find(|&q| q != xl1 && q != u_guard).unwrap());

    let ptg = build_distinct_tail_multigraph(g, x, u, &p)?;
    let trail = open_euler_trail_with_anchors(&ptg, x_guard, u_guard, del_x, del_u)?;
    let trail = repair_with(&trail, &ptg.full, g, &[x, u], None)?;

    let trail = fix_endpoint(g, &trail, x, y, del_x.map(|_| (x_guard, x1)))?;
    let trail = fix_endpoint(g, &trail.reversed(), u, v, del_u.map(|_| (u_guard, xl1)))?.reversed();

    // The trail ends must have survived every rewrite.
    let first = visit_at(&trail, 1);
    let last = visit_at(&trail, trail.len() - 1);
    if (first.entry, first.mid, first.exit) != (ptg.t, x, x_guard)
        || (last.entry, last.mid, last.exit) != (u_guard, u, ptg.t_prime)
    {
        return Err(Error::Internal(format!(
            "endpoint visits were disturbed: first {first}, last {last}"
        )));
    }

    let arcs_x: Vec<Arc> = g.neighbors(x).iter().map(|&h| Arc::new(x, h)).collect();
    let arcs_u: Vec<Arc> = g.neighbors(u).iter().map(|&h| Arc::new(u, h)).collect();
    let pm_x = constrained_pm(&occurrences_at(&trail, x), &arcs_x, &[(1, a1)])
        .ok_or_else(|| Error::Internal(format!("no tail matching at {x} pinning {a1}")))?;
    let pm_u = constrained_pm(&occurrences_at(&trail, u), &arcs_u, &[(trail.len() - 1, a2)])
        .ok_or_else(|| Error::Internal(format!("no tail matching at {u} pinning {a2}")))?;
    let interior = occurrence_matchings(&trail, g, &[x, u])?;

    let seq = visit_occurrences(&trail)
        .iter()
        .map(|(pos, _)| {
            pm_x.get(pos)
                .or_else(|| pm_u.get(pos))
                .or_else(|| interior.get(pos))
                .copied()
                .expect("every visit position is assigned")
        })
        .collect();
    Ok(seq)
}

/// Ensures the visits at `tail` other than the trail's first visit can be
/// matched to the arcs other than `tail -> head`. If the induced
/// decomposition refuses, one bow-tie among those visits fixes it; the
/// optional `(guard, path_next)` pair re-checks the forced middle visit
/// that the withheld-bounce construction established.
fn fix_endpoint(
    g: &SimpleGraph,
    trail: &Trail,
    tail: Vertex,
    head: Vertex,
    forced_middle: Option<(Vertex, Vertex)>,
) -> Result<Trail> {
    let pool: Vec<Arc> = g
        .neighbors(tail)
        .iter()
        .filter(|&&h| h != head)
        .map(|&h| Arc::new(tail, h))
        .collect();
    let holds = |t: &Trail| -> bool {
        let occs = occurrences_at(t, tail);
        let rest: Vec<_> = occs.iter().copied().filter(|(p, _)| *p != 1).collect();
        if constrained_pm(&rest, &pool, &[]).is_none() {
            return false;
        }
        match forced_middle {
            None => true,
            Some((a, b)) => occs
                .iter()
                .any(|(_, q)| q.unordered_ends() == (a.min(b), a.max(b))),
        }
    };

    if holds(trail) {
        return Ok(trail.clone());
    }
    let occs = occurrences_at(trail, tail);
    for i in 0..occs.len() {
        if occs[i].0 == 1 {
            continue;
        }
        for j in (i + 1)..occs.len() {
            if occs[j].0 == 1 {
                continue;
            }
            let (a, b) = (occs[i].0.min(occs[j].0), occs[i].0.max(occs[j].0));
            let cand = bow_tie_at(trail, a, b);
            if holds(&cand) {
                return Ok(cand);
            }
        }
    }
    Err(Error::Internal(format!(
        "no rewrite at {tail} frees the arc {tail}>{head}; trail: {trail}"
    )))
}
