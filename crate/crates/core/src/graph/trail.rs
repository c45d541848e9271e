//! Trails: alternating vertex/edge sequences with pairwise-distinct edges.

use std::collections::BTreeSet;
use std::fmt;

use super::{EdgeId, Multigraph, Vertex};
use crate::error::{Error, Result};

/// A trail `v0, e1, v1, ..., el, vl`. For closed trails `vl == v0`.
///
/// Edge ids are stored explicitly: twin visits along parallel edges are
/// indistinguishable otherwise, and the rewrite operations reverse
/// individual edge traversals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trail {
    verts: Vec<Vertex>,
    edges: Vec<EdgeId>,
    closed: bool,
}

impl Trail {
    pub fn new(verts: Vec<Vertex>, edges: Vec<EdgeId>, closed: bool) -> Self {
        debug_assert_eq!(verts.len(), edges.len() + 1);
        debug_assert!(!closed || verts.first() == verts.last());
        Trail { verts, edges, closed }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn verts(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn start(&self) -> Vertex {
        self.verts[0]
    }

    pub fn end(&self) -> Vertex {
        *self.verts.last().unwrap()
    }

    /// Checks the trail against a multigraph: endpoints match, edges distinct.
    pub fn validate(&self, m: &Multigraph) -> Result<()> {
        if self.verts.len() != self.edges.len() + 1 {
            return Err(Error::Internal("trail vertex/edge length mismatch".into()));
        }
        if self.closed && self.verts.first() != self.verts.last() {
            return Err(Error::Internal("closed trail does not return to its start".into()));
        }
        let mut seen = BTreeSet::new();
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= m.edge_count() {
                return Err(Error::Internal(format!("trail uses unknown edge id {e}")));
            }
            if !seen.insert(e) {
                return Err(Error::Internal(format!("trail repeats edge id {e}")));
            }
            let (a, b) = m.endpoints(e);
            let (u, v) = (self.verts[i], self.verts[i + 1]);
            if (u, v) != (a, b) && (u, v) != (b, a) {
                return Err(Error::Internal(format!(
                    "edge {e} = ({a}, {b}) does not join positions {i}..{} = ({u}, {v})",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// The same trail traversed backwards.
    pub fn reversed(&self) -> Trail {
        let mut verts = self.verts.clone();
        let mut edges = self.edges.clone();
        verts.reverse();
        edges.reverse();
        Trail { verts, edges, closed: self.closed }
    }

    /// Rotates a closed trail to start at position `k` (0 <= k < len).
    pub fn rotated(&self, k: usize) -> Trail {
        assert!(self.closed, "only closed trails rotate");
        assert!(k < self.len());
        if k == 0 {
            return self.clone();
        }
        let l = self.len();
        let mut verts = Vec::with_capacity(l + 1);
        verts.extend_from_slice(&self.verts[k..l]);
        verts.extend_from_slice(&self.verts[0..=k]);
        let mut edges = Vec::with_capacity(l);
        edges.extend_from_slice(&self.edges[k..]);
        edges.extend_from_slice(&self.edges[..k]);
        debug_assert_eq!(verts[0], *verts.last().unwrap());
        Trail { verts, edges, closed: true }
    }

    /// Inserts the 2-edge detour `.. z, e1, x, e2, z ..` at vertex position
    /// `pos` (which must currently hold `z`, an endpoint of both edges).
    pub fn with_detour(&self, pos: usize, x: Vertex, e1: EdgeId, e2: EdgeId) -> Trail {
        assert!(pos < self.verts.len());
        let z = self.verts[pos];
        let mut verts = self.verts.clone();
        let mut edges = self.edges.clone();
        verts.insert(pos + 1, x);
        verts.insert(pos + 2, z);
        edges.insert(pos, e1);
        edges.insert(pos + 1, e2);
        Trail { verts, edges, closed: self.closed }
    }

    /// First position holding vertex `v`, if any.
    pub fn position_of(&self, v: Vertex) -> Option<usize> {
        self.verts.iter().position(|&w| w == v)
    }
}

impl fmt::Display for Trail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verts[0])?;
        for i in 0..self.edges.len() {
            write!(f, " ({}) {}", self.edges[i], self.verts[i + 1])?;
        }
        Ok(())
    }
}
