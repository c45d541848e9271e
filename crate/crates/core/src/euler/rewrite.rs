//! Trail rewrites at a shared mid-vertex.
//!
//! The bow-tie swaps the pairing of two passages through the same vertex,
//! reversing the enclosed segment. Splitting undoes one crossing into a
//! host trail plus a detached closed trail; concatenation splices a closed
//! trail back into a host at a common vertex. All three preserve the edge
//! multiset and every visit away from the operated vertex, up to
//! orientation.

use super::{find_visit, visit_at, Visit};
use crate::error::{Error, Result};
use crate::graph::Trail;

/// Rotates a closed trail so that every listed position becomes interior,
/// returning the rotated trail and the renumbered positions. Interior
/// positions of open trails pass through unchanged.
pub(crate) fn interior_positions(trail: &Trail, positions: &[usize]) -> (Trail, Vec<usize>) {
    let l = trail.len();
    if !trail.is_closed() || positions.iter().all(|&p| p < l) {
        return (trail.clone(), positions.to_vec());
    }
    // Rotating by k sends old position p to p - k (p > k), p + l - k
    // (p < k), the old wrap to l - k, and position k itself to the wrap.
    let k = (1..l).find(|k| !positions.contains(k)).expect("trail too short to rotate");
    let rotated = trail.rotated(k);
    let renumber = |p: usize| -> usize {
        if p == l {
            l - k
        } else if p > k {
            p - k
        } else {
            p + l - k
        }
    };
    (rotated, positions.iter().map(|&p| renumber(p)).collect())
}

/// Bow-tie at interior positions `p < q` sharing a mid-vertex: the segment
/// strictly between the two passages is reversed and the visit pairings
/// become (entry of p, entry of q) and (exit of p, exit of q).
pub(crate) fn bow_tie_at(trail: &Trail, p: usize, q: usize) -> Trail {
    let l = trail.len();
    assert!(1 <= p && p < q && q < l, "bow-tie positions must be interior and ordered");
    let verts = trail.verts();
    let edges = trail.edges();
    assert_eq!(verts[p], verts[q], "bow-tie requires a shared mid-vertex");
    assert!(q >= p + 2, "consecutive visits at the same vertex would need a loop");

    let mut new_verts = Vec::with_capacity(verts.len());
    new_verts.extend_from_slice(&verts[..=p]);
    new_verts.extend(verts[p + 1..q].iter().rev());
    new_verts.extend_from_slice(&verts[q..]);

    let mut new_edges = Vec::with_capacity(edges.len());
    new_edges.extend_from_slice(&edges[..p]);
    new_edges.push(edges[q - 1]);
    new_edges.extend(edges[p + 1..q - 1].iter().rev());
    new_edges.push(edges[p]);
    new_edges.extend_from_slice(&edges[q..]);

    Trail::new(new_verts, new_edges, trail.is_closed())
}

/// Splits a trail at two interior passages `p < q` through the same vertex
/// into the host (outer part, re-paired across the gap) and a detached
/// closed trail (the middle).
pub(crate) fn split_at(trail: &Trail, p: usize, q: usize) -> (Trail, Trail) {
    let l = trail.len();
    assert!(1 <= p && p < q && q < l);
    let verts = trail.verts();
    let edges = trail.edges();
    assert_eq!(verts[p], verts[q]);

    let mut host_verts = Vec::with_capacity(verts.len() - (q - p));
    host_verts.extend_from_slice(&verts[..=p]);
    host_verts.extend_from_slice(&verts[q + 1..]);
    let mut host_edges = Vec::with_capacity(edges.len() - (q - p));
    host_edges.extend_from_slice(&edges[..p]);
    host_edges.extend_from_slice(&edges[q..]);
    let host = Trail::new(host_verts, host_edges, trail.is_closed());

    let guest = Trail::new(verts[p..=q].to_vec(), edges[p..q].to_vec(), true);
    (host, guest)
}

/// Splices a closed `guest` into `host` at a shared vertex. The host visit
/// at `p_host` and the guest visit at `p_guest` are replaced by
/// (host entry, guest entry) and (guest exit, host exit); the guest is
/// traversed in reverse in between.
pub(crate) fn concatenate_at(host: &Trail, p_host: usize, guest: &Trail, p_guest: usize) -> Trail {
    assert!(guest.is_closed());
    let lh = host.len();
    let lg = guest.len();
    assert!(1 <= p_host && p_host < lh, "host visit must be interior");
    let x = host.verts()[p_host];
    assert_eq!(visit_at(guest, p_guest).mid, x, "guest visit must share the host vertex");

    // Rotate the guest so the operated visit wraps around its junction,
    // then reverse: the result reads x, (entry edge), entry, ..., exit,
    // (exit edge), x and is inserted verbatim.
    let rotated = if p_guest == lg { guest.clone() } else { guest.rotated(p_guest) };
    let insert = rotated.reversed();
    debug_assert_eq!(insert.verts()[0], x);
    debug_assert_eq!(*insert.verts().last().unwrap(), x);

    let mut verts = Vec::with_capacity(host.verts().len() + lg);
    verts.extend_from_slice(&host.verts()[..=p_host]);
    verts.extend_from_slice(&insert.verts()[1..]);
    verts.extend_from_slice(&host.verts()[p_host + 1..]);

    let mut edges = Vec::with_capacity(lh + lg);
    edges.extend_from_slice(&host.edges()[..p_host]);
    edges.extend_from_slice(insert.edges());
    edges.extend_from_slice(&host.edges()[p_host..]);

    Trail::new(verts, edges, host.is_closed())
}

/// Bow-tie with respect to two distinct visits induced by the trail, as
/// they are oriented in it.
pub fn bow_tie(trail: &Trail, p: &Visit, q: &Visit) -> Result<Trail> {
    if p == q {
        return Err(Error::Input("bow-tie needs two distinct visits".into()));
    }
    if p.mid != q.mid {
        return Err(Error::Input("bow-tie visits must share their mid-vertex".into()));
    }
    if trail.len() < 4 {
        return Err(Error::Input("bow-tie needs a trail of length at least four".into()));
    }
    let pp = find_visit(trail, p)
        .ok_or_else(|| Error::Input(format!("visit {p} is not induced by the trail")))?;
    let qq = find_visit(trail, q)
        .ok_or_else(|| Error::Input(format!("visit {q} is not induced by the trail")))?;
    let (t, pos) = interior_positions(trail, &[pp, qq]);
    let (a, b) = (pos[0].min(pos[1]), pos[0].max(pos[1]));
    Ok(bow_tie_at(&t, a, b))
}

/// Concatenation of two edge-disjoint closed trails sharing the mid-vertex
/// of the given visits into a single closed trail covering both.
pub fn concatenate(c1: &Trail, c2: &Trail, p: &Visit, q: &Visit) -> Result<Trail> {
    if !c1.is_closed() || !c2.is_closed() {
        return Err(Error::Input("concatenation needs two closed trails".into()));
    }
    if p.mid != q.mid {
        return Err(Error::Input("concatenation visits must share their mid-vertex".into()));
    }
    if c1.edges().iter().any(|e| c2.edges().contains(e)) {
        return Err(Error::Input("concatenation needs edge-disjoint trails".into()));
    }
    let pp = find_visit(c1, p)
        .ok_or_else(|| Error::Input(format!("visit {p} is not induced by the first trail")))?;
    let qq = find_visit(c2, q)
        .ok_or_else(|| Error::Input(format!("visit {q} is not induced by the second trail")))?;
    let (host, pos) = interior_positions(c1, &[pp]);
    Ok(concatenate_at(&host, pos[0], c2, qq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{euler_tour, visit_occurrences, visits_of_trail};
    use crate::gen;
    use crate::graph::{doubled, Multigraph, SimpleGraph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn sorted_edges(t: &Trail) -> Vec<usize> {
        let mut e = t.edges().to_vec();
        e.sort_unstable();
        e
    }

    fn unoriented_visit_multiset(t: &Trail, x: usize) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> =
            visits_of_trail(t, x).unwrap().iter().map(|p| p.unordered_ends()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn bow_tie_on_doubled_triangle_matches_the_expected_visits() {
        let m = doubled(&gen::cycle(3));
        // 0,1,2,0,1,2,0 with edge ids 0,1 = {0,1}; 2,3 = {0,2}; 4,5 = {1,2}.
        let t = Trail::new(vec![0, 1, 2, 0, 1, 2, 0], vec![0, 4, 2, 1, 5, 3], true);
        t.validate(&m).unwrap();
        let visits = visits_of_trail(&t, 1).unwrap();
        assert_eq!(visits.len(), 2);
        let out = bow_tie(&t, &visits[0], &visits[1]).unwrap();
        out.validate(&m).unwrap();
        assert_eq!(sorted_edges(&out), sorted_edges(&t));
        assert_eq!(unoriented_visit_multiset(&out, 1), vec![(0, 0), (2, 2)]);
    }

    #[test]
    fn bow_tie_twice_restores_the_visit_multiset() {
        let m = doubled(&gen::complete(4));
        let t = euler_tour(&m, 0).unwrap();
        let visits = visits_of_trail(&t, 2).unwrap();
        let before = unoriented_visit_multiset(&t, 2);
        let once = bow_tie(&t, &visits[0], &visits[1]).unwrap();
        // The replacement visits pair entry-with-entry and exit-with-exit.
        let new_p = Visit::new(
            visits[0].entry,
            2,
            visits[1].entry,
            visits[0].entry_edge,
            visits[1].entry_edge,
        );
        let again = {
            // Find the two new visits as oriented in `once`.
            let occ = visits_of_trail(&once, 2).unwrap();
            let a = occ
                .iter()
                .find(|p| p.same_occurrence_unoriented(&new_p))
                .copied()
                .expect("replacement visit present");
            let b = occ
                .iter()
                .find(|p| {
                    !p.same_occurrence_unoriented(&new_p)
                        && **p != visits[2].reversed()
                        && **p != visits[2]
                })
                .copied()
                .expect("second replacement visit present");
            bow_tie(&once, &a, &b).unwrap()
        };
        assert_eq!(unoriented_visit_multiset(&again, 2), before);
        assert_eq!(sorted_edges(&again), sorted_edges(&t));
    }

    #[test]
    fn bow_tie_rejects_foreign_visits() {
        let m = doubled(&gen::cycle(3));
        let t = euler_tour(&m, 0).unwrap();
        let visits = visits_of_trail(&t, 1).unwrap();
        assert!(bow_tie(&t, &visits[0], &visits[0]).is_err());
        let fake = Visit::new(0, 1, 2, 99, 98);
        assert!(bow_tie(&t, &fake, &visits[0]).is_err());
    }

    #[test]
    fn concatenation_merges_two_doubled_triangles() {
        // Triangles 0,1,2 and 0,3,4 sharing vertex 0, all edges doubled.
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let m = doubled(&g);
        let left: Vec<usize> =
            (0..m.edge_count()).filter(|&e| { let (a, b) = m.endpoints(e); a <= 2 && b <= 2 }).collect();
        let mut enabled_left = vec![false; m.edge_count()];
        for &e in &left {
            enabled_left[e] = true;
        }
        let mut enabled_right = vec![true; m.edge_count()];
        for &e in &left {
            enabled_right[e] = false;
        }
        let c1 = super::super::tour::euler_tour_filtered(&m, 0, &enabled_left).unwrap();
        let c2 = super::super::tour::euler_tour_filtered(&m, 0, &enabled_right).unwrap();
        let p = visits_of_trail(&c1, 0).unwrap()[0];
        let q = visits_of_trail(&c2, 0).unwrap()[0];
        let merged = concatenate(&c1, &c2, &p, &q).unwrap();
        merged.validate(&m).unwrap();
        assert_eq!(merged.len(), 12);
        assert!(merged.is_closed());
    }

    #[test]
    fn concatenating_a_doubled_edge_splices_a_bounce() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (1, 3)]).unwrap();
        let mut mult = BTreeMap::new();
        mult.insert((0, 1), 2);
        mult.insert((1, 2), 2);
        mult.insert((0, 2), 2);
        mult.insert((1, 3), 2);
        let m = crate::graph::build_multigraph(&g, &mult).unwrap();
        let bounce_ids: Vec<usize> =
            m.incident_edges(3).to_vec();
        let mut enabled = vec![true; m.edge_count()];
        for &e in &bounce_ids {
            enabled[e] = false;
        }
        let c1 = super::super::tour::euler_tour_filtered(&m, 0, &enabled).unwrap();
        let c2 = Trail::new(vec![1, 3, 1], bounce_ids.clone(), true);
        let p = visits_of_trail(&c1, 1).unwrap()[0];
        let q = visits_of_trail(&c2, 1)
            .unwrap()
            .first()
            .copied()
            .unwrap();
        let merged = concatenate(&c1, &c2, &p, &q).unwrap();
        merged.validate(&m).unwrap();
        assert_eq!(merged.len(), m.edge_count());
    }

    #[test]
    fn rewrites_preserve_edge_multisets_on_random_tours() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let g = gen::random_connected(8, 5, &mut rng);
            if g.edge_count() < 3 {
                continue;
            }
            let m = doubled(&g);
            let t = euler_tour(&m, 0).unwrap();
            // Pick the first vertex with at least two visits.
            let (x, visits) = (0..g.vertex_count())
                .map(|v| (v, visits_of_trail(&t, v).unwrap()))
                .find(|(_, vs)| vs.len() >= 2)
                .unwrap();
            let out = bow_tie(&t, &visits[0], &visits[1]).unwrap();
            out.validate(&m).unwrap();
            assert_eq!(sorted_edges(&out), sorted_edges(&t));
            // Visits at every other vertex unchanged up to orientation.
            for v in 0..g.vertex_count() {
                if v != x {
                    assert_eq!(
                        unoriented_visit_multiset(&out, v),
                        unoriented_visit_multiset(&t, v)
                    );
                }
            }
        }
    }

    #[test]
    fn split_then_concatenate_round_trips_the_edge_multiset() {
        let m = doubled(&gen::complete(4));
        let t = euler_tour(&m, 0).unwrap();
        let occs: Vec<(usize, Visit)> = visit_occurrences(&t)
            .into_iter()
            .filter(|(_, p)| p.mid == 1)
            .collect();
        assert!(occs.len() >= 2);
        let (t2, pos) = interior_positions(&t, &[occs[0].0, occs[1].0]);
        let (a, b) = (pos[0].min(pos[1]), pos[0].max(pos[1]));
        let (host, guest) = split_at(&t2, a, b);
        assert!(guest.is_closed());
        let mut all = sorted_edges(&host);
        all.extend(sorted_edges(&guest));
        all.sort_unstable();
        assert_eq!(all, sorted_edges(&t));

        // Splice back at the host's new visit through vertex 1.
        let host_pos = visit_occurrences(&host)
            .into_iter()
            .find(|(_, p)| p.mid == 1)
            .map(|(pos, _)| pos)
            .unwrap();
        let (host2, hp) = interior_positions(&host, &[host_pos]);
        let guest_pos = visit_occurrences(&guest)
            .into_iter()
            .find(|(_, p)| p.mid == 1)
            .map(|(pos, _)| pos)
            .unwrap();
        let merged = concatenate_at(&host2, hp[0], &guest, guest_pos);
        merged.validate(&m).unwrap();
        assert_eq!(sorted_edges(&merged), sorted_edges(&t));
    }

    #[test]
    fn multigraph_trails_keep_parallel_edges_distinct() {
        let g = gen::path(2);
        let mut mult = BTreeMap::new();
        mult.insert((0, 1), 4);
        let m: Multigraph = crate::graph::build_multigraph(&g, &mult).unwrap();
        let t = euler_tour(&m, 0).unwrap();
        assert_eq!(t.len(), 4);
        let visits = visits_of_trail(&t, 1).unwrap();
        assert_eq!(visits.len(), 2);
        assert!(visits[0].is_twin_of(&visits[1]));
    }
}
