//! Visit machinery over Eulerian trails: visit decompositions, the
//! bipartite visit/arc graphs, their matchings, constrained tours, and the
//! trail rewrites that remove twin visits.
//!
//! A visit is one passage of a trail through a vertex. Decomposing the
//! edges at a vertex into visits and matching each visit to an arc with
//! that tail is what turns an Eulerian tour of a multigraph into a Hamilton
//! cycle of the 3-arc graph.

mod repair;
mod rewrite;
mod tour;

pub use repair::repair_twin_visits;
pub(crate) use repair::repair_with;
pub use rewrite::{bow_tie, concatenate};
pub(crate) use rewrite::{bow_tie_at, concatenate_at, interior_positions, split_at};
pub use tour::{euler_tour, euler_tour_s2_compatible};
pub(crate) use tour::{anchored_euler_tour, open_euler_trail};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Arc, EdgeId, Multigraph, SimpleGraph, Trail, Vertex};

/// One oriented passage of a trail through `mid`: enter from `entry` along
/// `entry_edge`, leave to `exit` along `exit_edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Visit {
    pub entry: Vertex,
    pub mid: Vertex,
    pub exit: Vertex,
    pub entry_edge: EdgeId,
    pub exit_edge: EdgeId,
}

impl Visit {
    pub fn new(entry: Vertex, mid: Vertex, exit: Vertex, entry_edge: EdgeId, exit_edge: EdgeId) -> Self {
        debug_assert_ne!(entry_edge, exit_edge);
        Visit { entry, mid, exit, entry_edge, exit_edge }
    }

    /// Endpoint pair ignoring orientation.
    pub fn unordered_ends(&self) -> (Vertex, Vertex) {
        (self.entry.min(self.exit), self.entry.max(self.exit))
    }

    /// Equality up to orientation, ignoring edge identity.
    pub fn same_unoriented(&self, other: &Visit) -> bool {
        self.mid == other.mid && self.unordered_ends() == other.unordered_ends()
    }

    /// Same vertices and edges, up to orientation.
    pub fn same_occurrence_unoriented(&self, other: &Visit) -> bool {
        self == other || *self == other.reversed()
    }

    /// Twin visits share their endpoint pair but use four distinct edges.
    pub fn is_twin_of(&self, other: &Visit) -> bool {
        self.mid == other.mid
            && self.unordered_ends() == other.unordered_ends()
            && self.entry_edge != other.entry_edge
            && self.entry_edge != other.exit_edge
            && self.exit_edge != other.entry_edge
            && self.exit_edge != other.exit_edge
    }

    pub fn reversed(&self) -> Visit {
        Visit {
            entry: self.exit,
            mid: self.mid,
            exit: self.entry,
            entry_edge: self.exit_edge,
            exit_edge: self.entry_edge,
        }
    }
}

impl std::fmt::Display for Visit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}) [e{}, e{}]",
            self.entry, self.mid, self.exit, self.entry_edge, self.exit_edge
        )
    }
}

/// A partition of the edges at `mid` into visits.
#[derive(Clone, Debug)]
pub struct VisitDecomposition {
    pub mid: Vertex,
    pub visits: Vec<Visit>,
}

impl VisitDecomposition {
    /// Checks that the entry/exit edges cover the edges at `mid` exactly once.
    pub fn validate(&self, m: &Multigraph) -> Result<()> {
        let mut used: Vec<EdgeId> = self
            .visits
            .iter()
            .flat_map(|p| [p.entry_edge, p.exit_edge])
            .collect();
        used.sort_unstable();
        let mut expect = m.incident_edges(self.mid).to_vec();
        expect.sort_unstable();
        if used != expect {
            return Err(Error::Internal(format!(
                "visit decomposition at {} does not partition the incident edges",
                self.mid
            )));
        }
        Ok(())
    }
}

/// Positions of a trail that carry visits. Interior positions are
/// `1..len`; a closed trail additionally wraps around at position `len`.
pub(crate) fn visit_positions(trail: &Trail) -> Vec<usize> {
    let l = trail.len();
    let mut out: Vec<usize> = (1..l).collect();
    if trail.is_closed() && l >= 2 {
        out.push(l);
    }
    out
}

/// The visit at a given position. Position `len` denotes the wrap-around
/// visit of a closed trail.
pub(crate) fn visit_at(trail: &Trail, pos: usize) -> Visit {
    let l = trail.len();
    let verts = trail.verts();
    let edges = trail.edges();
    if pos == l {
        debug_assert!(trail.is_closed());
        Visit::new(verts[l - 1], verts[0], verts[1], edges[l - 1], edges[0])
    } else {
        debug_assert!(pos >= 1 && pos < l);
        Visit::new(verts[pos - 1], verts[pos], verts[pos + 1], edges[pos - 1], edges[pos])
    }
}

/// All visit occurrences of the trail, in trail order.
pub(crate) fn visit_occurrences(trail: &Trail) -> Vec<(usize, Visit)> {
    visit_positions(trail).into_iter().map(|p| (p, visit_at(trail, p))).collect()
}

/// Visit occurrences with a given mid vertex.
pub(crate) fn occurrences_at(trail: &Trail, x: Vertex) -> Vec<(usize, Visit)> {
    visit_occurrences(trail).into_iter().filter(|(_, p)| p.mid == x).collect()
}

/// Finds the position of an exactly-oriented visit, if induced.
pub(crate) fn find_visit(trail: &Trail, v: &Visit) -> Option<usize> {
    visit_occurrences(trail).into_iter().find(|(_, p)| p == v).map(|(pos, _)| pos)
}

/// The visits a trail induces at `x`. For an open trail `x` must not be an
/// endpoint, where the decomposition is undefined.
pub fn visits_of_trail(trail: &Trail, x: Vertex) -> Result<Vec<Visit>> {
    if !trail.is_closed() && (trail.start() == x || trail.end() == x) {
        return Err(Error::Input(format!(
            "visits at {x} are undefined: it is an endpoint of an open trail"
        )));
    }
    Ok(occurrences_at(trail, x).into_iter().map(|(_, p)| p).collect())
}

/// Bipartite graph between a visit decomposition at `x` and the arcs with
/// tail `x`: a visit and an arc are adjacent iff the arc's head does not
/// appear in the visit.
#[derive(Clone, Debug)]
pub struct VisitArcGraph {
    pub mid: Vertex,
    pub visits: Vec<Visit>,
    pub arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl VisitArcGraph {
    pub(crate) fn from_parts(
        mid: Vertex,
        visits: Vec<Visit>,
        arcs: Vec<Arc>,
        adj: Vec<Vec<usize>>,
    ) -> Self {
        VisitArcGraph { mid, visits, arcs, adj }
    }

    pub fn adjacent(&self, visit_index: usize, arc_index: usize) -> bool {
        self.adj[visit_index].binary_search(&arc_index).is_ok()
    }

    pub fn neighbors_of_visit(&self, visit_index: usize) -> &[usize] {
        &self.adj[visit_index]
    }
}

/// Builds the visit/arc graph for a decomposition. The two sides must be
/// balanced; `arcs` must all have tail at the decomposition's mid vertex.
pub fn build_h(j: &VisitDecomposition, arcs: &[Arc]) -> Result<VisitArcGraph> {
    if arcs.len() != j.visits.len() {
        return Err(Error::Input(format!(
            "unbalanced visit/arc graph at {}: {} visits vs {} arcs",
            j.mid,
            j.visits.len(),
            arcs.len()
        )));
    }
    if arcs.iter().any(|a| a.tail != j.mid) {
        return Err(Error::Input("arc with foreign tail in visit/arc graph".into()));
    }
    let adj = j
        .visits
        .iter()
        .map(|p| {
            (0..arcs.len())
                .filter(|&k| arcs[k].head != p.entry && arcs[k].head != p.exit)
                .collect()
        })
        .collect();
    Ok(VisitArcGraph { mid: j.mid, visits: j.visits.clone(), arcs: arcs.to_vec(), adj })
}

/// A visit-to-arc assignment; when perfect it uses every arc exactly once.
#[derive(Clone, Debug)]
pub struct Matching {
    pub pairs: Vec<(Visit, Arc)>,
}

/// Maximum matching by augmenting paths in index order; `Some` exactly when
/// a perfect matching exists, and then the lexicographically-first one
/// found by that order.
pub fn perfect_matching(h: &VisitArcGraph) -> Option<Matching> {
    if h.visits.len() != h.arcs.len() {
        return None;
    }
    let assign = kuhn(&h.adj, h.arcs.len());
    if assign.iter().any(Option::is_none) {
        return None;
    }
    let pairs = assign
        .into_iter()
        .enumerate()
        .map(|(i, a)| (h.visits[i], h.arcs[a.unwrap()]))
        .collect();
    Some(Matching { pairs })
}

/// Left-to-right assignment, `None` for unmatched lefts.
pub(crate) fn kuhn(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let mut right_owner: Vec<Option<usize>> = vec![None; n_right];
    let mut left_assign: Vec<Option<usize>> = vec![None; adj.len()];

    fn augment(
        v: usize,
        adj: &[Vec<usize>],
        right_owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &r in &adj[v] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            if right_owner[r].is_none()
                || augment(right_owner[r].unwrap(), adj, right_owner, visited)
            {
                right_owner[r] = Some(v);
                return true;
            }
        }
        false
    }

    for v in 0..adj.len() {
        let mut visited = vec![false; n_right];
        augment(v, adj, &mut right_owner, &mut visited);
    }
    for (r, owner) in right_owner.iter().enumerate() {
        if let Some(l) = owner {
            left_assign[*l] = Some(r);
        }
    }
    left_assign
}

/// Arcs with tail `x`, ascending by head.
pub(crate) fn arcs_with_tail(g: &SimpleGraph, x: Vertex) -> Vec<Arc> {
    g.neighbors(x).iter().map(|&w| Arc::new(x, w)).collect()
}

/// Whether the decomposition induced at `x` admits a perfect matching
/// against the arcs of `g` with tail `x`.
pub(crate) fn has_perfect_matching_at(trail: &Trail, g: &SimpleGraph, x: Vertex) -> Result<bool> {
    let j = VisitDecomposition { mid: x, visits: visits_of_trail(trail, x)? };
    let h = build_h(&j, &arcs_with_tail(g, x))?;
    Ok(perfect_matching(&h).is_some())
}

/// Per-occurrence arc assignment for every real vertex not in `skip`,
/// using a fixed perfect matching of each visit/arc graph. Fails if any
/// vertex lacks one.
pub(crate) fn occurrence_matchings(
    trail: &Trail,
    g: &SimpleGraph,
    skip: &[Vertex],
) -> Result<BTreeMap<usize, Arc>> {
    let mut per_vertex: BTreeMap<Vertex, Vec<(usize, Visit)>> = BTreeMap::new();
    for (pos, p) in visit_occurrences(trail) {
        if p.mid < g.vertex_count() && !skip.contains(&p.mid) {
            per_vertex.entry(p.mid).or_default().push((pos, p));
        }
    }
    let mut out = BTreeMap::new();
    for (x, occs) in per_vertex {
        let j = VisitDecomposition { mid: x, visits: occs.iter().map(|(_, p)| *p).collect() };
        let h = build_h(&j, &arcs_with_tail(g, x))?;
        let matching = perfect_matching(&h).ok_or_else(|| {
            Error::Internal(format!(
                "no perfect visit/arc matching at vertex {x}; visits: {:?}",
                j.visits.iter().map(|p| p.to_string()).collect::<Vec<_>>()
            ))
        })?;
        for ((pos, _), (_, arc)) in occs.iter().zip(matching.pairs.iter()) {
            out.insert(*pos, *arc);
        }
    }
    Ok(out)
}

/// All visit decompositions of the edges at `x`, as multisets of unordered
/// visits. The lowest-id unpaired edge is matched with every later edge in
/// turn, so the enumeration is canonical and duplicate-free.
pub fn enumerate_decompositions(m: &Multigraph, x: Vertex) -> Vec<VisitDecomposition> {
    let inc = m.incident_edges(x);
    assert!(inc.len().is_multiple_of(2), "visit decompositions need even degree");
    let mut out = Vec::new();
    let mut current: Vec<Visit> = Vec::new();
    let mut used = vec![false; inc.len()];

    fn rec(
        m: &Multigraph,
        x: Vertex,
        inc: &[EdgeId],
        used: &mut Vec<bool>,
        current: &mut Vec<Visit>,
        out: &mut Vec<VisitDecomposition>,
    ) {
        let first = match used.iter().position(|&b| !b) {
            None => {
                out.push(VisitDecomposition { mid: x, visits: current.clone() });
                return;
            }
            Some(i) => i,
        };
        used[first] = true;
        for second in (first + 1)..inc.len() {
            if used[second] {
                continue;
            }
            used[second] = true;
            let (e1, e2) = (inc[first], inc[second]);
            current.push(Visit::new(m.other_end(e1, x), x, m.other_end(e2, x), e1, e2));
            rec(m, x, inc, used, current, out);
            current.pop();
            used[second] = false;
        }
        used[first] = false;
    }

    rec(m, x, inc, &mut used, &mut current, &mut out);
    out
}

/// Twin detection over a decomposition.
pub fn has_twin_visits(j: &VisitDecomposition) -> bool {
    for i in 0..j.visits.len() {
        for k in (i + 1)..j.visits.len() {
            if j.visits[i].is_twin_of(&j.visits[k]) {
                return true;
            }
        }
    }
    false
}
