//! Visit/arc graphs for the cut-open trail: the full graph K over all
//! visits at the cut vertex, and its reduction L with the endpoint visits
//! and the cut arcs removed.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::euler::{kuhn, occurrences_at, visit_at, Visit, VisitArcGraph};
use crate::graph::{Arc, SimpleGraph, Trail, Vertex};

fn make_graph(mid: Vertex, visits: Vec<Visit>, arcs: Vec<Arc>) -> VisitArcGraph {
    let adj = visits
        .iter()
        .map(|p| {
            (0..arcs.len())
                .filter(|&k| arcs[k].head != p.entry && arcs[k].head != p.exit)
                .collect()
        })
        .collect();
    VisitArcGraph::from_parts(mid, visits, arcs, adj)
}

/// Builds K (all visits of the open trail at the cut vertex against its
/// arcs) and L (K minus the first and last visits and minus the arcs to
/// the cut visit's two endpoints).
///
/// The trail must be in cut form: open, with its first and last visits
/// passing through the cut vertex.
pub fn build_k_and_l(
    g: &SimpleGraph,
    w: &Trail,
    cut: &Visit,
) -> Result<(VisitArcGraph, VisitArcGraph)> {
    let x = cut.mid;
    if w.is_closed() {
        return Err(Error::Input("the cut trail must be open".into()));
    }
    let first = visit_at(w, 1);
    let last = visit_at(w, w.len() - 1);
    if first.mid != x || last.mid != x {
        return Err(Error::Input("trail is not cut at the given visit's vertex".into()));
    }

    let visits: Vec<Visit> = occurrences_at(w, x).into_iter().map(|(_, p)| p).collect();
    let arcs: Vec<Arc> = g.neighbors(x).iter().map(|&h| Arc::new(x, h)).collect();
    if visits.len() != arcs.len() {
        return Err(Error::Input(format!(
            "cut graph at {x} is unbalanced: {} visits vs {} arcs",
            visits.len(),
            arcs.len()
        )));
    }
    let k = make_graph(x, visits.clone(), arcs.clone());

    let l_visits: Vec<Visit> =
        visits.into_iter().filter(|p| *p != first && *p != last).collect();
    let l_arcs: Vec<Arc> = arcs
        .into_iter()
        .filter(|a| a.head != cut.entry && a.head != cut.exit)
        .collect();
    let l = make_graph(x, l_visits, l_arcs);
    Ok((k, l))
}

/// Perfect matching of visit occurrences against arcs with some pairs
/// pinned in advance. Returns the full position-to-arc map, or `None` when
/// either a pinned pair is not an edge or the rest cannot be completed.
pub(crate) fn constrained_pm(
    occs: &[(usize, Visit)],
    arcs: &[Arc],
    forced: &[(usize, Arc)],
) -> Option<BTreeMap<usize, Arc>> {
    let mut out = BTreeMap::new();
    for &(pos, arc) in forced {
        let (_, visit) = occs.iter().find(|(p, _)| *p == pos)?;
        if arc.head == visit.entry || arc.head == visit.exit {
            return None;
        }
        out.insert(pos, arc);
    }
    let rest: Vec<&(usize, Visit)> =
        occs.iter().filter(|(p, _)| !out.contains_key(p)).collect();
    let pool: Vec<Arc> = arcs
        .iter()
        .copied()
        .filter(|a| !forced.iter().any(|(_, f)| f == a))
        .collect();
    if rest.len() != pool.len() {
        return None;
    }
    let adj: Vec<Vec<usize>> = rest
        .iter()
        .map(|(_, p)| {
            (0..pool.len())
                .filter(|&k| pool[k].head != p.entry && pool[k].head != p.exit)
                .collect()
        })
        .collect();
    let assign = kuhn(&adj, pool.len());
    if assign.iter().any(Option::is_none) {
        return None;
    }
    for (i, a) in assign.into_iter().enumerate() {
        out.insert(rest[i].0, pool[a.unwrap()]);
    }
    Some(out)
}
