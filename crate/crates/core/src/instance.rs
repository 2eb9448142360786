//! Full problem instances: a drawing, a precolored path on the outer face,
//! the exceptional vertex and edge sets, and the lists.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::Drawing;
use crate::lists::ListAssignment;
use crate::plane::{edge, PlaneGraph, Vertex, Walk};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("list assignment covers {found} vertices, graph has {expected}")]
    ListCount { expected: usize, found: usize },
    #[error("path vertex {0} is out of range")]
    PathVertex(Vertex),
    #[error("path repeats vertex {0}")]
    PathRepeats(Vertex),
    #[error("path step {0}-{1} is not an edge")]
    PathNotEdge(Vertex, Vertex),
    #[error("no edge of the precolored path may be crossed, but {0}-{1} is")]
    PathCrossed(Vertex, Vertex),
    #[error("path vertex {0} is not on the outer face")]
    PathVertexOffOuterFace(Vertex),
    #[error("path edge {0}-{1} is not on the outer face")]
    PathEdgeOffOuterFace(Vertex, Vertex),
    #[error("N contains {0}, which is not a vertex")]
    NVertex(Vertex),
    #[error("M contains {0}-{1}, which is not an edge")]
    MEdge(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub drawing: Drawing,
    /// Precolored path (possibly empty).
    pub p: Walk,
    pub n_set: BTreeSet<Vertex>,
    /// Normalized edges.
    pub m_set: BTreeSet<(Vertex, Vertex)>,
    pub lists: ListAssignment,
}

impl Instance {
    /// Builds an instance and checks its structural invariants.
    pub fn new(
        drawing: Drawing,
        p: Walk,
        n_set: BTreeSet<Vertex>,
        m_set: BTreeSet<(Vertex, Vertex)>,
        lists: ListAssignment,
    ) -> Result<Self, InstanceError> {
        let m_set = m_set.into_iter().map(|(u, v)| edge(u, v)).collect();
        let inst = Instance { drawing, p, n_set, m_set, lists };
        inst.validate()?;
        Ok(inst)
    }

    /// Planar instance without N and M.
    pub fn planar(g: PlaneGraph, p: Walk, lists: ListAssignment) -> Result<Self, InstanceError> {
        Instance::new(Drawing::planar(g), p, BTreeSet::new(), BTreeSet::new(), lists)
    }

    pub fn n(&self) -> usize {
        self.drawing.n_original()
    }

    pub fn validate(&self) -> Result<(), InstanceError> {
        let n = self.n();
        if self.lists.len() != n {
            return Err(InstanceError::ListCount { expected: n, found: self.lists.len() });
        }
        let mut seen = BTreeSet::new();
        for &v in &self.p.vertices {
            if v >= n {
                return Err(InstanceError::PathVertex(v));
            }
            if !seen.insert(v) {
                return Err(InstanceError::PathRepeats(v));
            }
        }
        let outer_vs = self.drawing.outer_vertices();
        let outer_es = self.drawing.outer_edges();
        for w in self.p.vertices.windows(2) {
            let (u, v) = (w[0], w[1]);
            if self.drawing.is_crossed(u, v) {
                return Err(InstanceError::PathCrossed(u, v));
            }
            if !self.drawing.has_original_edge(u, v) {
                return Err(InstanceError::PathNotEdge(u, v));
            }
            if !outer_es.contains(&edge(u, v)) {
                return Err(InstanceError::PathEdgeOffOuterFace(u, v));
            }
        }
        if let Some(&v) = self.p.vertices.iter().find(|v| !outer_vs.contains(v)) {
            return Err(InstanceError::PathVertexOffOuterFace(v));
        }
        if let Some(&v) = self.n_set.iter().find(|&&v| v >= n) {
            return Err(InstanceError::NVertex(v));
        }
        if let Some(&(u, v)) = self.m_set.iter().find(|&&(u, v)| !self.drawing.has_original_edge(u, v)) {
            return Err(InstanceError::MEdge(u, v));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::fixtures::k5_one_crossing;
    use crate::plane::fixtures::{k4, wheel};

    #[test]
    fn path_must_follow_the_outer_face() {
        let lists = ListAssignment::uniform(4, 1..=5);
        assert!(Instance::planar(k4(), Walk::path(vec![0, 1, 2]), lists.clone()).is_ok());
        assert_eq!(
            Instance::planar(k4(), Walk::path(vec![0, 3]), lists.clone()),
            Err(InstanceError::PathEdgeOffOuterFace(0, 3))
        );
        assert_eq!(
            Instance::planar(k4(), Walk::path(vec![3]), lists),
            Err(InstanceError::PathVertexOffOuterFace(3))
        );
    }

    #[test]
    fn crossed_path_edge_is_rejected() {
        let d = k5_one_crossing();
        let (a, b) = d.crossings()[0].e1;
        let lists = ListAssignment::uniform(5, 1..=5);
        let err = Instance::new(d, Walk::path(vec![a, b]), BTreeSet::new(), BTreeSet::new(), lists).unwrap_err();
        assert_eq!(err, InstanceError::PathCrossed(a, b));
    }

    #[test]
    fn m_must_hold_edges() {
        let lists = ListAssignment::uniform(6, 1..=5);
        let err = Instance::new(
            Drawing::planar(wheel(5)),
            Walk::default(),
            BTreeSet::new(),
            [(0, 2)].into(),
            lists,
        )
        .unwrap_err();
        assert_eq!(err, InstanceError::MEdge(0, 2));
    }
}
