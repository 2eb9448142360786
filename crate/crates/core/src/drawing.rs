//! Drawings with crossings.
//!
//! A [`Drawing`] is stored as its planarization: every crossing becomes a
//! dummy vertex of degree four whose rotation is exactly `[a, c, b, d]` for
//! the crossing edges `ab` and `cd`. Original vertices are `0..n_original`,
//! dummies follow in crossing order. [`DrawingSpec`] is the un-planarized
//! view used by the file format: the original rotation system (crossed edges
//! listed as ordinary neighbors) plus the crossing records.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane::{edge, Dart, Face, PlaneGraph, StructureError, SubgraphRef, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub dummy: Vertex,
    pub e1: (Vertex, Vertex),
    pub e2: (Vertex, Vertex),
}

impl Crossing {
    /// The four endpoints in dummy rotation order `a, c, b, d`.
    pub fn rotation(&self) -> [Vertex; 4] {
        [self.e1.0, self.e2.0, self.e1.1, self.e2.1]
    }

    pub fn endpoints(&self) -> [Vertex; 4] {
        [self.e1.0, self.e1.1, self.e2.0, self.e2.1]
    }

    /// `G_x`: the two crossing edges and their endpoints.
    pub fn subgraph(&self) -> CrossingSubgraph {
        CrossingSubgraph { vertices: self.endpoints(), edges: [edge(self.e1.0, self.e1.1), edge(self.e2.0, self.e2.1)] }
    }
}

/// The graph formed by the two edges incident with one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingSubgraph {
    pub vertices: [Vertex; 4],
    pub edges: [(Vertex, Vertex); 2],
}

impl CrossingSubgraph {
    pub fn to_ref(&self) -> SubgraphRef {
        SubgraphRef::from_edges(self.edges)
    }
}

/// Un-planarized drawing: original rotations, crossing records `[a, b, c, d]`
/// (edge `ab` crosses `cd`, dummy rotation `a, c, b, d`) and outer darts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DrawingSpec {
    pub rot: Vec<Vec<Vertex>>,
    pub crossings: Vec<[Vertex; 4]>,
    pub outer: Vec<Dart>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("crossing {0}: {1}-{2} is not an edge")]
    NotAnEdge(usize, Vertex, Vertex),
    #[error("crossing {0}: an edge cannot cross itself")]
    SelfCrossing(usize),
    #[error("crossing {0}: edges {1:?} and {2:?} share an endpoint")]
    SharedEndpoint(usize, (Vertex, Vertex), (Vertex, Vertex)),
    #[error("edge {0}-{1} is crossed more than once")]
    CrossedTwice(Vertex, Vertex),
    #[error("dummy vertex {0} does not have the alternating rotation of its crossing")]
    BadDummy(Vertex),
    #[error("edge {0}-{1} occurs both crossed and uncrossed")]
    ParallelEdge(Vertex, Vertex),
    #[error("cannot add a crossing: {0}")]
    Unsupported(String),
}

/// One item on the boundary walk of a drawing face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FaceItem {
    Vertex(Vertex),
    /// Index into [`Drawing::crossings`].
    Crossing(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingFace {
    /// Least dart of the planarized face.
    pub id: Dart,
    pub boundary: Vec<FaceItem>,
}

impl DrawingFace {
    pub fn crossings(&self) -> Vec<usize> {
        self.boundary
            .iter()
            .filter_map(|i| match i {
                FaceItem::Crossing(c) => Some(*c),
                FaceItem::Vertex(_) => None,
            })
            .collect()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.boundary
            .iter()
            .filter_map(|i| match i {
                FaceItem::Vertex(v) => Some(*v),
                FaceItem::Crossing(_) => None,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Drawing {
    base: PlaneGraph,
    n_original: usize,
    crossings: Vec<Crossing>,
}

impl Drawing {
    /// A drawing without crossings.
    pub fn planar(g: PlaneGraph) -> Self {
        Drawing { n_original: g.n(), base: g, crossings: Vec::new() }
    }

    /// Wraps an existing planarization, checking the dummy rotations.
    pub fn from_planarization(
        base: PlaneGraph,
        n_original: usize,
        crossings: Vec<Crossing>,
    ) -> Result<Self, DrawingError> {
        if base.n() != n_original + crossings.len() {
            return Err(DrawingError::Unsupported(format!(
                "planarization has {} vertices, expected {}",
                base.n(),
                n_original + crossings.len()
            )));
        }
        let mut crossed = BTreeSet::new();
        for (i, c) in crossings.iter().enumerate() {
            if c.dummy != n_original + i || base.rotation(c.dummy) != c.rotation() {
                return Err(DrawingError::BadDummy(c.dummy));
            }
            check_pair(i, c.e1, c.e2)?;
            if c.endpoints().iter().any(|&v| v >= n_original) {
                return Err(DrawingError::BadDummy(c.dummy));
            }
            for e in [c.e1, c.e2] {
                if !crossed.insert(edge(e.0, e.1)) {
                    return Err(DrawingError::CrossedTwice(e.0, e.1));
                }
                if base.has_edge(e.0, e.1) {
                    return Err(DrawingError::ParallelEdge(e.0, e.1));
                }
            }
        }
        Ok(Drawing { base, n_original, crossings })
    }

    /// The planarization (dummies included).
    pub fn base(&self) -> &PlaneGraph {
        &self.base
    }

    pub fn n_original(&self) -> usize {
        self.n_original
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_dummy(&self, v: Vertex) -> bool {
        v >= self.n_original
    }

    /// Crossing record of a dummy vertex.
    pub fn crossing_at(&self, dummy: Vertex) -> Option<&Crossing> {
        dummy.checked_sub(self.n_original).and_then(|i| self.crossings.get(i))
    }

    /// Sorted neighbor lists of the original graph (crossed edges included).
    pub fn original_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj: Vec<Vec<Vertex>> = (0..self.n_original)
            .map(|v| self.base.rotation(v).iter().copied().filter(|&w| w < self.n_original).collect())
            .collect();
        for c in &self.crossings {
            for (a, b) in [c.e1, c.e2] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for r in &mut adj {
            r.sort_unstable();
        }
        adj
    }

    /// Edges of the original graph, normalized and sorted.
    pub fn original_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<_> = self
            .base
            .edges()
            .into_iter()
            .filter(|&(u, v)| u < self.n_original && v < self.n_original)
            .collect();
        for c in &self.crossings {
            out.push(edge(c.e1.0, c.e1.1));
            out.push(edge(c.e2.0, c.e2.1));
        }
        out.sort_unstable();
        out
    }

    pub fn has_original_edge(&self, u: Vertex, v: Vertex) -> bool {
        (u < self.n_original && v < self.n_original && self.base.has_edge(u, v)) || self.is_crossed(u, v)
    }

    pub fn is_crossed(&self, u: Vertex, v: Vertex) -> bool {
        let e = edge(u, v);
        self.crossings.iter().any(|c| edge(c.e1.0, c.e1.1) == e || edge(c.e2.0, c.e2.1) == e)
    }

    /// True iff `u` lies on one edge and `v` on the other edge of some crossing.
    pub fn crossing_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.crossings.iter().any(|c| {
            let on1 = |x| x == c.e1.0 || x == c.e1.1;
            let on2 = |x| x == c.e2.0 || x == c.e2.1;
            (on1(u) && on2(v)) || (on2(u) && on1(v))
        })
    }

    /// Faces of the planarization; dummies are reported as crossings.
    pub fn drawing_faces(&self) -> Vec<DrawingFace> {
        self.base.trace_faces().iter().map(|f| self.describe_face(f)).collect()
    }

    pub fn outer_faces(&self) -> Vec<DrawingFace> {
        self.base.outer_faces().iter().map(|f| self.describe_face(f)).collect()
    }

    fn describe_face(&self, f: &Face) -> DrawingFace {
        let boundary = f
            .vertices()
            .into_iter()
            .map(|v| if self.is_dummy(v) { FaceItem::Crossing(v - self.n_original) } else { FaceItem::Vertex(v) })
            .collect();
        DrawingFace { id: f.id(), boundary }
    }

    /// Original vertices on an outer face, plus isolated vertices.
    pub fn outer_vertices(&self) -> BTreeSet<Vertex> {
        self.base.outer_vertices().into_iter().filter(|&v| v < self.n_original).collect()
    }

    /// Uncrossed original edges with a dart on an outer face.
    pub fn outer_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.base
            .outer_faces()
            .iter()
            .flat_map(|f| f.darts.clone())
            .filter(|&(u, v)| u < self.n_original && v < self.n_original)
            .map(|(u, v)| edge(u, v))
            .collect()
    }

    /// Un-planarizes into the original rotation system and crossing records.
    pub fn unplanarize(&self) -> DrawingSpec {
        let n = self.n_original;
        let rot = (0..n)
            .map(|v| self.base.rotation(v).iter().map(|&w| self.through(v, w)).collect())
            .collect();
        let crossings = self.crossings.iter().map(|c| [c.e1.0, c.e1.1, c.e2.0, c.e2.1]).collect();
        let outer = self
            .base
            .outer_faces()
            .iter()
            .map(|f| {
                f.darts
                    .iter()
                    .filter(|d| d.0 < n)
                    .map(|&(u, w)| (u, self.through(u, w)))
                    .min()
                    .expect("every face has an original vertex")
            })
            .collect();
        DrawingSpec { rot, crossings, outer }
    }

    /// Far end of the original edge leaving `v` towards `w` (a dummy or not).
    fn through(&self, v: Vertex, w: Vertex) -> Vertex {
        match self.crossing_at(w) {
            Some(c) if c.e1.0 == v => c.e1.1,
            Some(c) if c.e1.1 == v => c.e1.0,
            Some(c) if c.e2.0 == v => c.e2.1,
            Some(c) if c.e2.1 == v => c.e2.0,
            _ => w,
        }
    }

    /// Adds a crossing edge `c`-`d` that crosses the uncrossed edge `a`-`b`,
    /// where `c` lies on the face left of dart `a->b` and `d` on the face
    /// left of `b->a`. Returns the new drawing with the dummy appended.
    pub fn with_crossing(&self, a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> Result<Drawing, DrawingError> {
        let n = self.base.n();
        let unsupported = |m: &str| Err(DrawingError::Unsupported(m.to_string()));
        if [a, b, c, d].iter().any(|&v| v >= self.n_original) {
            return unsupported("endpoints must be original vertices");
        }
        if !self.base.has_edge(a, b) {
            return unsupported("crossed edge must be an uncrossed edge");
        }
        if [a, b].contains(&c) || [a, b].contains(&d) || c == d {
            return unsupported("crossing edges must be vertex-disjoint");
        }
        if self.has_original_edge(c, d) {
            return unsupported("the crossing edge already exists");
        }
        let f1 = self.base.face_of((a, b)).darts;
        let f2 = self.base.face_of((b, a)).darts;
        let arrival = |f: &[Dart], t: Vertex| -> Option<Vertex> {
            let hits: Vec<_> = f.iter().filter(|d| d.1 == t).collect();
            (hits.len() == 1).then(|| hits[0].0)
        };
        let (Some(pc), Some(pd)) = (arrival(&f1, c), arrival(&f2, d)) else {
            return unsupported("endpoints must appear exactly once on the faces beside the crossed edge");
        };
        if f1.iter().any(|x| f2.contains(x)) {
            return unsupported("the crossed edge must separate two distinct faces");
        }
        let x = n;
        let mut rot: Vec<Vec<Vertex>> = self.base.rotations().to_vec();
        replace(&mut rot[a], b, x);
        replace(&mut rot[b], a, x);
        // c goes into the corner of the face left of a->b, which at x lies
        // just before a; d likewise just before b.
        rot.push(vec![a, d, b, c]);
        insert_before(&mut rot[c], pc, x);
        insert_before(&mut rot[d], pd, x);
        let outer: Vec<Dart> = self
            .base
            .outer_darts()
            .iter()
            .map(|&(u, w)| match (u, w) {
                (u, w) if (u, w) == (a, b) => (a, x),
                (u, w) if (u, w) == (b, a) => (b, x),
                d => d,
            })
            .collect();
        let base = PlaneGraph::new(rot, &outer)?;
        let mut crossings = self.crossings.clone();
        crossings.push(Crossing { dummy: x, e1: (a, b), e2: (d, c) });
        Drawing::from_planarization(base, self.n_original, crossings)
    }
}

/// Builds the planarization of an un-planarized drawing.
pub fn planarize(spec: &DrawingSpec) -> Result<Drawing, DrawingError> {
    let n = spec.rot.len();
    crate::plane::validate_rotation(&spec.rot)?;
    let mut crossed: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for (i, &[a, b, c, d]) in spec.crossings.iter().enumerate() {
        for &(u, v) in &[(a, b), (c, d)] {
            if u >= n || v >= n || !spec.rot[u].contains(&v) {
                return Err(DrawingError::NotAnEdge(i, u, v));
            }
        }
        check_pair(i, (a, b), (c, d))?;
        for (u, v) in [(a, b), (c, d)] {
            if crossed.insert(edge(u, v), i).is_some() {
                return Err(DrawingError::CrossedTwice(u.min(v), u.max(v)));
            }
        }
    }
    let mut rot = spec.rot.clone();
    let mut crossings = Vec::with_capacity(spec.crossings.len());
    for (i, &[a, b, c, d]) in spec.crossings.iter().enumerate() {
        let x = n + i;
        replace(&mut rot[a], b, x);
        replace(&mut rot[b], a, x);
        replace(&mut rot[c], d, x);
        replace(&mut rot[d], c, x);
        crossings.push(Crossing { dummy: x, e1: (a, b), e2: (c, d) });
    }
    for c in &crossings {
        rot.push(c.rotation().to_vec());
    }
    let outer: Vec<Dart> = spec
        .outer
        .iter()
        .map(|&(u, v)| match crossed.get(&edge(u, v)) {
            Some(&i) if u < n => (u, n + i),
            _ => (u, v),
        })
        .collect();
    let base = PlaneGraph::new(rot, &outer)?;
    Drawing::from_planarization(base, n, crossings)
}

fn check_pair(i: usize, e1: (Vertex, Vertex), e2: (Vertex, Vertex)) -> Result<(), DrawingError> {
    if edge(e1.0, e1.1) == edge(e2.0, e2.1) {
        return Err(DrawingError::SelfCrossing(i));
    }
    if [e1.0, e1.1].iter().any(|v| *v == e2.0 || *v == e2.1) {
        return Err(DrawingError::SharedEndpoint(i, e1, e2));
    }
    Ok(())
}

fn replace(r: &mut [Vertex], from: Vertex, to: Vertex) {
    if let Some(slot) = r.iter_mut().find(|x| **x == from) {
        *slot = to;
    }
}

/// Inserts `t` immediately before `anchor` in the cyclic order `r`.
pub(crate) fn insert_before(r: &mut Vec<Vertex>, anchor: Vertex, t: Vertex) {
    let i = r.iter().position(|&x| x == anchor).expect("anchor must be a neighbor");
    r.insert(i, t);
}

/// Inserts `t` immediately after `anchor` in the cyclic order `r`.
pub(crate) fn insert_after(r: &mut Vec<Vertex>, anchor: Vertex, t: Vertex) {
    let i = r.iter().position(|&x| x == anchor).expect("anchor must be a neighbor");
    r.insert(i + 1, t);
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::plane::fixtures::wheel;

    /// K5 as the wheel W4 (rim 0..3, hub 4), the edge 0-2 routed through the
    /// outer face and the edge 1-3 crossing the spoke 0-4.
    pub fn k5_one_crossing() -> Drawing {
        let w = wheel(4);
        let mut rot = w.rotations().to_vec();
        // Edge 0-2 routed through the outer face: insert in the outer corners.
        let outer = w.outer_face().unwrap();
        let arr0 = outer.darts.iter().find(|d| d.1 == 0).unwrap().0;
        let arr2 = outer.darts.iter().find(|d| d.1 == 2).unwrap().0;
        insert_before(&mut rot[0], arr0, 2);
        insert_before(&mut rot[2], arr2, 0);
        let g = PlaneGraph::new(rot, &[(1, 0)]).unwrap();
        let d = Drawing::planar(g);
        let f1 = d.base().face_of((0, 4)).vertices();
        let c = if f1.contains(&1) { 1 } else { 3 };
        let dd = if c == 1 { 3 } else { 1 };
        d.with_crossing(0, 4, c, dd).unwrap()
    }
}
