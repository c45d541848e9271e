//! Independent validators and brute-force oracles.
//!
//! The validators recompute 3-arc adjacency from the arc table alone (two
//! 2-path checks), never from the constructed graph, so a construction bug
//! cannot mask a certificate bug. The oracles are exact backtracking
//! solvers for desk-scale instances.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Arc, SimpleGraph, Vertex};
use crate::three_arc::ArcIndex;

/// Default vertex cap for the backtracking oracles.
pub const DEFAULT_ORACLE_CAP: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidationErrorKind {
    MissingArc,
    RepeatedArc,
    NonAdjacentPair,
    WrongEndpoint,
    WrongLength,
}

impl fmt::Display for ValidationErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ValidationErrorKind::MissingArc => "missing-arc",
            ValidationErrorKind::RepeatedArc => "repeated-arc",
            ValidationErrorKind::NonAdjacentPair => "non-adjacent-pair",
            ValidationErrorKind::WrongEndpoint => "wrong-endpoint",
            ValidationErrorKind::WrongLength => "wrong-length",
        };
        f.write_str(s)
    }
}

/// A concrete defect in a claimed certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationError {
    pub kind: ValidationErrorKind,
    pub position: usize,
    pub detail: Vec<Arc>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.kind, self.position)?;
        if !self.detail.is_empty() {
            write!(f, " (")?;
            for (i, a) in self.detail.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationError {}

/// 3-arc adjacency from first principles: `uv ~ xy` iff `(v,u,x)` and
/// `(u,x,y)` are 2-paths. Adjacency of the tails is read off the arc table.
pub fn arcs_adjacent(idx: &ArcIndex, a: Arc, b: Arc) -> bool {
    idx.contains(Arc::new(a.tail, b.tail)) && a.head != b.tail && b.head != a.tail
}

fn check_coverage(idx: &ArcIndex, seq: &[Arc]) -> std::result::Result<(), ValidationError> {
    let mut seen = vec![false; idx.len()];
    for (pos, &a) in seq.iter().enumerate() {
        match idx.index_of(a) {
            None => {
                return Err(ValidationError {
                    kind: ValidationErrorKind::MissingArc,
                    position: pos,
                    detail: vec![a],
                })
            }
            Some(i) => {
                if seen[i] {
                    return Err(ValidationError {
                        kind: ValidationErrorKind::RepeatedArc,
                        position: pos,
                        detail: vec![a],
                    });
                }
                seen[i] = true;
            }
        }
    }
    Ok(())
}

/// Accepts exactly the sequences that visit every vertex of `x` once with
/// consecutive (and wrap-around) 3-arc adjacency.
pub fn validate_cycle(
    x: &SimpleGraph,
    idx: &ArcIndex,
    seq: &[Arc],
) -> std::result::Result<(), ValidationError> {
    if seq.len() != x.vertex_count() || seq.len() != idx.len() {
        return Err(ValidationError {
            kind: ValidationErrorKind::WrongLength,
            position: seq.len(),
            detail: Vec::new(),
        });
    }
    check_coverage(idx, seq)?;
    for pos in 0..seq.len() {
        let a = seq[pos];
        let b = seq[(pos + 1) % seq.len()];
        if !arcs_adjacent(idx, a, b) {
            return Err(ValidationError {
                kind: ValidationErrorKind::NonAdjacentPair,
                position: pos,
                detail: vec![a, b],
            });
        }
    }
    Ok(())
}

/// As [`validate_cycle`] but open and pinned to the prescribed endpoints.
pub fn validate_path(
    x: &SimpleGraph,
    idx: &ArcIndex,
    seq: &[Arc],
    endpoints: (Arc, Arc),
) -> std::result::Result<(), ValidationError> {
    if seq.len() != x.vertex_count() || seq.len() != idx.len() {
        return Err(ValidationError {
            kind: ValidationErrorKind::WrongLength,
            position: seq.len(),
            detail: Vec::new(),
        });
    }
    if seq.first() != Some(&endpoints.0) {
        return Err(ValidationError {
            kind: ValidationErrorKind::WrongEndpoint,
            position: 0,
            detail: vec![endpoints.0],
        });
    }
    if seq.last() != Some(&endpoints.1) {
        return Err(ValidationError {
            kind: ValidationErrorKind::WrongEndpoint,
            position: seq.len() - 1,
            detail: vec![endpoints.1],
        });
    }
    check_coverage(idx, seq)?;
    for pos in 0..seq.len() - 1 {
        if !arcs_adjacent(idx, seq[pos], seq[pos + 1]) {
            return Err(ValidationError {
                kind: ValidationErrorKind::NonAdjacentPair,
                position: pos,
                detail: vec![seq[pos], seq[pos + 1]],
            });
        }
    }
    Ok(())
}

struct Search<'a> {
    g: &'a SimpleGraph,
    visited: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        Search { g, visited: vec![false; g.vertex_count()] }
    }

    /// All unvisited vertices reachable from `from` in one component, and
    /// every unvisited vertex has an unvisited-or-`from` neighbor.
    fn prune_ok(&self, from: Vertex) -> bool {
        let n = self.g.vertex_count();
        let remaining = self.visited.iter().filter(|&&b| !b).count();
        if remaining == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![from];
        let mut reached = 0;
        seen[from] = true;
        while let Some(v) = stack.pop() {
            for &w in self.g.neighbors(v) {
                if !seen[w] && !self.visited[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining
    }

    fn extend_cycle(&mut self, v: Vertex, count: usize, start: Vertex) -> bool {
        let n = self.g.vertex_count();
        if count == n {
            return self.g.has_edge(v, start);
        }
        if !self.prune_ok(v) {
            return false;
        }
        for &w in self.g.neighbors(v) {
            if !self.visited[w] {
                self.visited[w] = true;
                if self.extend_cycle(w, count + 1, start) {
                    return true;
                }
                self.visited[w] = false;
            }
        }
        false
    }

    fn extend_path(&mut self, v: Vertex, count: usize, target: Vertex) -> bool {
        let n = self.g.vertex_count();
        if count == n {
            return v == target;
        }
        if self.visited[target] || !self.prune_ok(v) {
            return false;
        }
        for &w in self.g.neighbors(v) {
            if !self.visited[w] {
                self.visited[w] = true;
                if self.extend_path(w, count + 1, target) {
                    return true;
                }
                self.visited[w] = false;
            }
        }
        false
    }
}

/// Exact hamiltonicity by pruned backtracking. Graphs with fewer than three
/// vertices are not hamiltonian.
pub fn brute_force_hamiltonian(g: &SimpleGraph) -> Result<bool> {
    brute_force_hamiltonian_with_cap(g, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_hamiltonian_with_cap(g: &SimpleGraph, cap: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::SizeCap { size: n, cap });
    }
    if n < 3 {
        return Ok(false);
    }
    if g.min_degree() < 2 {
        return Ok(false);
    }
    let mut s = Search::new(g);
    s.visited[0] = true;
    Ok(s.extend_cycle(0, 1, 0))
}

/// Exact existence of a Hamilton path between two given vertices.
pub fn brute_force_hamilton_path(g: &SimpleGraph, a: Vertex, b: Vertex) -> Result<bool> {
    brute_force_hamilton_path_with_cap(g, a, b, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_hamilton_path_with_cap(
    g: &SimpleGraph,
    a: Vertex,
    b: Vertex,
    cap: usize,
) -> Result<bool> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::SizeCap { size: n, cap });
    }
    if a >= n || b >= n {
        return Err(Error::Input("path endpoint out of range".into()));
    }
    if a == b {
        return Ok(n == 1);
    }
    let mut s = Search::new(g);
    s.visited[a] = true;
    Ok(s.extend_path(a, 1, b))
}

/// Exact Hamilton-connectedness: every vertex pair joined by a Hamilton path.
pub fn brute_force_hamilton_connected(g: &SimpleGraph) -> Result<bool> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in (a + 1)..n {
            if !brute_force_hamilton_path(g, a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
