//! Iterated removal of twin visits from an Eulerian trail until every
//! vertex's visit/arc graph has a perfect matching.
//!
//! At an all-doubled vertex the fix is a single bow-tie. At a vertex joined
//! to its three neighbors by one, two and three parallel edges the twins
//! may cross, in which case the trail is split at the twins and re-joined
//! through the leftover visit. Crossed bounces at doubled degree-two
//! vertices split off a closed sub-trail that re-attaches at another
//! shared vertex.

use std::collections::BTreeMap;

use super::{
    bow_tie_at, concatenate_at, has_perfect_matching_at, interior_positions, occurrences_at,
    split_at,
};
use super::Visit;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, SimpleGraph, Trail, Vertex};

/// Rewrites an Eulerian tour of `m` until the visit decomposition at every
/// vertex admits a perfect matching against the arcs with that tail.
///
/// If `protected` is given, that visit survives every rewrite (up to
/// orientation); rewrites never touch visits away from the vertex under
/// repair. Fails loudly on multiplicity patterns outside the supported
/// ones (all edges doubled, or one single + one tripled + rest doubled)
/// and whenever a round fails to shrink the defect set.
pub fn repair_twin_visits(
    trail: &Trail,
    m: &Multigraph,
    protected: Option<&Visit>,
) -> Result<Trail> {
    let g = underlying_simple(m)?;
    repair_with(trail, m, &g, &[], protected)
}

fn underlying_simple(m: &Multigraph) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::new(m.vertex_count());
    for v in 0..m.vertex_count() {
        for w in m.simple_neighbors(v) {
            if v < w {
                g.add_edge(v, w)?;
            }
        }
    }
    Ok(g)
}

/// Defect set: vertices of `g` (outside `exempt`, not trail endpoints)
/// whose induced visit/arc graph has no perfect matching.
pub(crate) fn defect_set(
    trail: &Trail,
    g: &SimpleGraph,
    exempt: &[Vertex],
) -> Result<Vec<Vertex>> {
    let mut zs = Vec::new();
    for v in 0..g.vertex_count() {
        if exempt.contains(&v) || g.degree(v) == 0 {
            continue;
        }
        if !trail.is_closed() && (trail.start() == v || trail.end() == v) {
            continue;
        }
        if !has_perfect_matching_at(trail, g, v)? {
            zs.push(v);
        }
    }
    Ok(zs)
}

pub(crate) fn repair_with(
    trail: &Trail,
    m: &Multigraph,
    g: &SimpleGraph,
    exempt: &[Vertex],
    protected: Option<&Visit>,
) -> Result<Trail> {
    let mut cur = trail.clone();
    let mut prev_len = usize::MAX;
    for _ in 0..m.vertex_count() + 2 {
        if let Some(p) = protected {
            let present = occurrences_at(&cur, p.mid)
                .iter()
                .any(|(_, q)| q.same_occurrence_unoriented(p));
            if !present {
                return Err(Error::Internal(format!(
                    "repair lost the protected visit {p}; trail: {cur}"
                )));
            }
        }
        let z = defect_set(&cur, g, exempt)?;
        if z.is_empty() {
            return Ok(cur);
        }
        if z.len() >= prev_len {
            return Err(Error::Internal(format!(
                "repair failed to shrink the defect set {z:?}; trail: {cur}"
            )));
        }
        prev_len = z.len();
        cur = fix_vertex(&cur, m, g, z[0])?;
    }
    Err(Error::Internal("repair did not terminate".into()))
}

/// Positions of the first twin pair among the occurrences, ascending.
fn twin_positions(occs: &[(usize, Visit)]) -> Option<(usize, usize)> {
    for i in 0..occs.len() {
        for j in (i + 1)..occs.len() {
            if occs[i].1.is_twin_of(&occs[j].1) {
                return Some((i, j));
            }
        }
    }
    None
}

fn pattern_dump(v: Vertex, occs: &[(usize, Visit)], m: &Multigraph) -> String {
    format!(
        "vertex {v}: multiplicities {:?}, visits {:?}",
        m.neighbor_multiplicities(v),
        occs.iter().map(|(_, p)| p.to_string()).collect::<Vec<_>>()
    )
}

fn fix_vertex(trail: &Trail, m: &Multigraph, g: &SimpleGraph, v: Vertex) -> Result<Trail> {
    let occs = occurrences_at(trail, v);
    let mult = m.neighbor_multiplicities(v);
    let mut counts: Vec<usize> = mult.values().copied().collect();
    counts.sort_unstable();

    let (ti, tj) = twin_positions(&occs).ok_or_else(|| {
        Error::Internal(format!(
            "vertex lacks a perfect matching but has no twin visits; {}",
            pattern_dump(v, &occs, m)
        ))
    })?;
    let (t1, t2) = (occs[ti], occs[tj]);
    let same_oriented = t1.1.entry == t2.1.entry;

    if counts.iter().all(|&c| c == 2) {
        match m.degree(v) {
            4 => {
                if same_oriented {
                    let (t, pos) = interior_positions(trail, &[t1.0, t2.0]);
                    Ok(bow_tie_at(&t, pos[0].min(pos[1]), pos[0].max(pos[1])))
                } else {
                    fix_crossed_bounce(trail, m, g, v, t1.0, t2.0)
                }
            }
            6 => {
                // Bow-tie one twin against the leftover bounce visit.
                let third = occs
                    .iter()
                    .position(|&(pos, _)| pos != t1.0 && pos != t2.0)
                    .map(|k| occs[k].0)
                    .unwrap();
                let (t, pos) = interior_positions(trail, &[t1.0, third]);
                Ok(bow_tie_at(&t, pos[0].min(pos[1]), pos[0].max(pos[1])))
            }
            _ => Err(Error::Internal(format!(
                "all-doubled vertex of degree {} in the defect set; {}",
                m.degree(v),
                pattern_dump(v, &occs, m)
            ))),
        }
    } else if counts == [1, 2, 3] {
        fix_one_two_three(trail, m, v, &mult, t1, t2, &occs)
    } else {
        Err(Error::Internal(format!(
            "unhandled multiplicity pattern; {}",
            pattern_dump(v, &occs, m)
        )))
    }
}

/// Doubled degree-two vertex whose two passages cross. Split the tour at
/// the two visits (turning them into bounces) and re-join the pieces at a
/// shared vertex of degree at least six; if that vertex's matching breaks,
/// one bow-tie there restores it.
fn fix_crossed_bounce(
    trail: &Trail,
    m: &Multigraph,
    g: &SimpleGraph,
    v: Vertex,
    p1: usize,
    p2: usize,
) -> Result<Trail> {
    let (t, pos) = interior_positions(trail, &[p1, p2]);
    let (a, b) = (pos[0].min(pos[1]), pos[0].max(pos[1]));
    let (host, guest) = split_at(&t, a, b);

    let host_verts: Vec<Vertex> = host.verts().to_vec();
    let shared = guest
        .verts()
        .iter()
        .copied()
        .filter(|&s| s != v && m.degree(s) >= 6 && host_verts.contains(&s))
        .min()
        .ok_or_else(|| {
            Error::Internal(format!(
                "crossed bounce at {v}: the split trails share no vertex of degree >= 6"
            ))
        })?;

    let host_pos = occurrences_at(&host, shared)
        .first()
        .map(|&(pos, _)| pos)
        .ok_or_else(|| Error::Internal(format!("no visit of {shared} in the host trail")))?;
    let guest_pos = occurrences_at(&guest, shared).first().map(|&(pos, _)| pos).unwrap();
    let (host, hp) = interior_positions(&host, &[host_pos]);
    let mut merged = concatenate_at(&host, hp[0], &guest, guest_pos);

    // The junction vertex may have lost its matching; it is all-doubled of
    // degree >= 6, so a bow-tie there repairs it within the same round.
    if !has_perfect_matching_at(&merged, g, shared)? {
        merged = fix_vertex(&merged, m, g, shared)?;
    }
    Ok(merged)
}

/// One single, one tripled, rest doubled. The defective decomposition is
/// twins between the doubled and tripled neighbors plus one leftover
/// visit. Aligned twins take a bow-tie; crossed twins split the trail and
/// the leftover visit steers the re-join.
fn fix_one_two_three(
    trail: &Trail,
    m: &Multigraph,
    v: Vertex,
    mult: &BTreeMap<Vertex, usize>,
    t1: (usize, Visit),
    t2: (usize, Visit),
    occs: &[(usize, Visit)],
) -> Result<Trail> {
    let w1 = *mult.iter().find(|(_, &c)| c == 2).unwrap().0;
    let w2 = *mult.iter().find(|(_, &c)| c == 3).unwrap().0;
    let ends_ok = t1.1.unordered_ends() == (w1.min(w2), w1.max(w2));
    if !ends_ok || occs.len() != 3 {
        return Err(Error::Internal(format!(
            "unexpected defect shape; {}",
            pattern_dump(v, occs, m)
        )));
    }

    if t1.1.entry == t2.1.entry {
        let (t, pos) = interior_positions(trail, &[t1.0, t2.0]);
        return Ok(bow_tie_at(&t, pos[0].min(pos[1]), pos[0].max(pos[1])));
    }

    let (t, pos) = interior_positions(trail, &[t1.0, t2.0]);
    let (a, b) = (pos[0].min(pos[1]), pos[0].max(pos[1]));
    let (host, guest) = split_at(&t, a, b);
    let third_edge = occs.iter().find(|&&(pos, _)| pos != t1.0 && pos != t2.0).unwrap().1;

    if guest.edges().contains(&third_edge.entry_edge) {
        // Leftover visit sits in the detached part: join the host's new
        // bounce to it.
        let host_pos = occurrences_at(&host, v)
            .iter()
            .find(|(_, p)| p.entry == p.exit)
            .map(|&(pos, _)| pos)
            .ok_or_else(|| Error::Internal(format!("split lost the bounce visit at {v}")))?;
        let guest_pos = occurrences_at(&guest, v)
            .iter()
            .find(|(_, p)| {
                p.entry_edge == third_edge.entry_edge && p.exit_edge == third_edge.exit_edge
                    || p.entry_edge == third_edge.exit_edge && p.exit_edge == third_edge.entry_edge
            })
            .map(|&(pos, _)| pos)
            .unwrap();
        let (host, hp) = interior_positions(&host, &[host_pos]);
        Ok(concatenate_at(&host, hp[0], &guest, guest_pos))
    } else {
        // Leftover visit stayed in the host: join through the guest's
        // wrap-around bounce instead.
        let host_pos = occurrences_at(&host, v)
            .iter()
            .find(|(_, p)| {
                p.entry_edge == third_edge.entry_edge && p.exit_edge == third_edge.exit_edge
                    || p.entry_edge == third_edge.exit_edge && p.exit_edge == third_edge.entry_edge
            })
            .map(|&(pos, _)| pos)
            .ok_or_else(|| Error::Internal(format!("split lost the leftover visit at {v}")))?;
        let guest_pos = occurrences_at(&guest, v)
            .iter()
            .find(|(_, p)| p.entry == p.exit)
            .map(|&(pos, _)| pos)
            .unwrap();
        let (host, hp) = interior_positions(&host, &[host_pos]);
        Ok(concatenate_at(&host, hp[0], &guest, guest_pos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{euler_tour, visits_of_trail};
    use crate::gen;
    use crate::graph::{build_multigraph, doubled};
    use std::collections::BTreeMap as Map;

    fn sorted_edges(t: &Trail) -> Vec<usize> {
        let mut e = t.edges().to_vec();
        e.sort_unstable();
        e
    }

    #[test]
    fn clean_tour_is_returned_unchanged() {
        let g = gen::complete(4);
        let m = doubled(&g);
        let mut t = euler_tour(&m, 0).unwrap();
        // Pre-repair if needed so the input is clean.
        t = repair_twin_visits(&t, &m, None).unwrap();
        let again = repair_twin_visits(&t, &m, None).unwrap();
        assert_eq!(again, t);
    }

    #[test]
    fn doubled_petersen_tour_with_twins_is_repaired() {
        let g = gen::petersen();
        let m = doubled(&g);
        let mut t = euler_tour(&m, 0).unwrap();
        // Engineer twins somewhere if the plain tour is already clean.
        let z = defect_set(&t, &g, &[]).unwrap();
        if z.is_empty() {
            'outer: for v in 0..10 {
                let visits = visits_of_trail(&t, v).unwrap();
                for i in 0..visits.len() {
                    for j in (i + 1)..visits.len() {
                        let cand =
                            crate::euler::bow_tie(&t, &visits[i], &visits[j]).unwrap();
                        if !defect_set(&cand, &g, &[]).unwrap().is_empty() {
                            t = cand;
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert!(!defect_set(&t, &g, &[]).unwrap().is_empty(), "failed to engineer a bad tour");
        let repaired = repair_twin_visits(&t, &m, None).unwrap();
        repaired.validate(&m).unwrap();
        assert_eq!(sorted_edges(&repaired), sorted_edges(&t));
        assert!(defect_set(&repaired, &g, &[]).unwrap().is_empty());
    }

    #[test]
    fn one_two_three_crossed_twins_follow_the_expected_rewrite() {
        // Vertex 0 has neighbors 4 (doubled), 3 (tripled), 1 (single).
        // Single and tripled edges alternate around the cycle 0,1,2,3 so
        // every vertex degree doubles its simple degree.
        let g = crate::graph::SimpleGraph::from_edges(
            6,
            &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 5), (3, 5), (4, 5)],
        )
        .unwrap();
        let mut mult = Map::new();
        mult.insert((0, 1), 1); // id 0
        mult.insert((0, 3), 3); // ids 1, 2, 3
        mult.insert((0, 4), 2); // ids 4, 5
        mult.insert((1, 2), 3); // ids 6, 7, 8
        mult.insert((1, 4), 2); // ids 9, 10
        mult.insert((2, 3), 1); // id 11
        mult.insert((2, 5), 2); // ids 12, 13
        mult.insert((3, 5), 2); // ids 14, 15
        mult.insert((4, 5), 2); // ids 16, 17
        let m = build_multigraph(&g, &mult).unwrap();
        // Tour whose visits at 0 are the crossed twins (4,0,3), (3,0,4)
        // plus (1,0,3), with the leftover visit inside the detached part.
        let t = Trail::new(
            vec![4, 0, 3, 5, 2, 1, 0, 3, 2, 1, 4, 5, 2, 1, 4, 5, 3, 0, 4],
            vec![4, 1, 14, 12, 6, 0, 2, 11, 7, 9, 16, 13, 8, 10, 17, 15, 3, 5],
            true,
        );
        t.validate(&m).unwrap();
        let visits = visits_of_trail(&t, 0).unwrap();
        assert_eq!(visits.len(), 3);
        assert!(defect_set(&t, &g, &[]).unwrap().contains(&0));

        let repaired = repair_twin_visits(&t, &m, None).unwrap();
        repaired.validate(&m).unwrap();
        assert_eq!(sorted_edges(&repaired), sorted_edges(&t));
        assert!(defect_set(&repaired, &g, &[]).unwrap().is_empty());

        // The split/concatenate rewrite leaves {(4,0,1), (3,0,4), [3,0,3]}
        // at the repaired vertex; later rounds only flip orientations.
        let mut ends: Vec<(usize, usize)> = visits_of_trail(&repaired, 0)
            .unwrap()
            .iter()
            .map(|p| p.unordered_ends())
            .collect();
        ends.sort_unstable();
        assert_eq!(ends, vec![(1, 4), (3, 3), (3, 4)]);
    }

    #[test]
    fn protected_visit_survives_repair() {
        let g = gen::petersen();
        let m = doubled(&g);
        let mut t = euler_tour(&m, 0).unwrap();
        // Make the tour dirty deterministically, as above.
        if defect_set(&t, &g, &[]).unwrap().is_empty() {
            'outer: for v in 0..10 {
                let visits = visits_of_trail(&t, v).unwrap();
                for i in 0..visits.len() {
                    for j in (i + 1)..visits.len() {
                        let cand = crate::euler::bow_tie(&t, &visits[i], &visits[j]).unwrap();
                        if !defect_set(&cand, &g, &[]).unwrap().is_empty() {
                            t = cand;
                            break 'outer;
                        }
                    }
                }
            }
        }
        let z = defect_set(&t, &g, &[]).unwrap();
        assert!(!z.is_empty());
        // Protect a visit at a clean vertex.
        let clean = (0..10).find(|v| !z.contains(v)).unwrap();
        let protect = visits_of_trail(&t, clean).unwrap()[0];
        let repaired = repair_twin_visits(&t, &m, Some(&protect)).unwrap();
        let present = visits_of_trail(&repaired, clean)
            .unwrap()
            .iter()
            .any(|p| p.same_occurrence_unoriented(&protect));
        assert!(present);
    }
}
