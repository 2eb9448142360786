//! The reduced instance of a partial coloring: `G_phi = G - dom(phi)` with
//! lists `L_phi(z) = (L(z) minus the colors of colored neighbors) + R_z`,
//! where `R_z` collects the lists of the uncolored path vertices next to `z`.
//! Any coloring of the reduced instance composes with `phi` to a coloring of
//! the original graph.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::embed::Embedding;
use crate::lists::{Color, ColorSet, Coloring, ListAssignment};
use crate::plane::{PlaneGraph, Subgraph, Vertex, Walk};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("phi colors vertex {0}, which is not in the graph")]
    UnknownVertex(Vertex),
    #[error("phi({vertex}) = {color} is not in the list of {vertex}")]
    NotInList { vertex: Vertex, color: Color },
    #[error("phi is not proper: {u} and {v} both get {color}")]
    NotProper { u: Vertex, v: Vertex, color: Color },
    #[error("phi({v}) = {color} lies in the list of the adjacent path vertex {p}")]
    PathConflict { v: Vertex, p: Vertex, color: Color },
    #[error("path vertex {p} has a list of size {size}; reduction needs precolored path vertices")]
    PathNotPrecolored { p: Vertex, size: usize },
    #[error("list assignment covers {found} vertices, graph has {expected}")]
    ListCount { expected: usize, found: usize },
}

#[derive(Debug, Clone)]
pub struct ReducedInstance {
    /// `G_phi`, relabeled densely; `subgraph.host[i]` is the original id.
    pub subgraph: Subgraph,
    /// `L_phi`, indexed by local id.
    pub lists: ListAssignment,
    /// The uncolored path vertices, by local id.
    pub p: Walk,
    /// Nonempty `R_z`, by original id.
    pub r_z: BTreeMap<Vertex, ColorSet>,
    pub removed: BTreeSet<Vertex>,
    pub phi: BTreeMap<Vertex, Color>,
}

impl ReducedInstance {
    /// Combines a coloring of `G_phi` (local ids) with `phi`.
    pub fn compose(&self, psi: &Coloring) -> Coloring {
        let n = self.subgraph.host.len() + self.removed.len();
        let mut out = vec![0; n];
        for (&v, &c) in &self.phi {
            out[v] = c;
        }
        for (i, &v) in self.subgraph.host.iter().enumerate() {
            out[v] = psi.color(i);
        }
        Coloring(out)
    }

    pub fn local_id(&self, v: Vertex) -> Option<Vertex> {
        self.subgraph.host.binary_search(&v).ok()
    }
}

pub fn reduce_by_partial_coloring(
    g: &PlaneGraph,
    lists: &ListAssignment,
    p: &Walk,
    phi: &BTreeMap<Vertex, Color>,
) -> Result<ReducedInstance, ReduceError> {
    let n = g.n();
    if lists.len() != n {
        return Err(ReduceError::ListCount { expected: n, found: lists.len() });
    }
    for &q in &p.vertices {
        if lists.size(q) != 1 {
            return Err(ReduceError::PathNotPrecolored { p: q, size: lists.size(q) });
        }
    }
    for (&v, &c) in phi {
        if v >= n {
            return Err(ReduceError::UnknownVertex(v));
        }
        if !lists.get(v).contains(&c) {
            return Err(ReduceError::NotInList { vertex: v, color: c });
        }
        for &w in g.rotation(v) {
            if w > v && phi.get(&w) == Some(&c) {
                return Err(ReduceError::NotProper { u: v, v: w, color: c });
            }
            if p.vertices.contains(&w) && lists.get(w).contains(&c) {
                return Err(ReduceError::PathConflict { v, p: w, color: c });
            }
        }
    }

    let on_p: BTreeSet<Vertex> = p.vertices.iter().copied().collect();
    let mut r_z = BTreeMap::new();
    let mut reduced = Vec::with_capacity(n);
    for z in 0..n {
        let mut l = lists.get(z).clone();
        let mut r = ColorSet::new();
        for &x in g.rotation(z) {
            if let Some(c) = phi.get(&x) {
                l.remove(c);
            }
            // Path vertices keep their singleton lists.
            if !on_p.contains(&z) && on_p.contains(&x) && !phi.contains_key(&x) {
                r.extend(lists.get(x).iter().copied());
            }
        }
        l.extend(r.iter().copied());
        if !r.is_empty() && !phi.contains_key(&z) {
            r_z.insert(z, r);
        }
        reduced.push(l);
    }

    let mut emb = Embedding::from_plane(g);
    for &v in phi.keys() {
        emb.delete_vertex(v);
    }
    let subgraph = emb.to_subgraph();
    let local: BTreeMap<Vertex, Vertex> = subgraph.host.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let lists = ListAssignment::new(subgraph.host.iter().map(|&v| reduced[v].clone()).collect());
    let path = Walk::path(p.vertices.iter().filter_map(|v| local.get(v).copied()).collect());
    Ok(ReducedInstance {
        subgraph,
        lists,
        p: path,
        r_z,
        removed: phi.keys().copied().collect(),
        phi: phi.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::verify_coloring;
    use crate::oracle::enumerate_colorings;
    use crate::plane::fixtures::*;

    fn cs(v: &[Color]) -> ColorSet {
        v.iter().copied().collect()
    }

    #[test]
    fn empty_phi_adds_path_colors() {
        let g = cycle(4);
        let lists = ListAssignment::new(vec![cs(&[1]), cs(&[2, 3]), cs(&[2, 3]), cs(&[3, 4])]);
        let r = reduce_by_partial_coloring(&g, &lists, &Walk::path(vec![0]), &BTreeMap::new()).unwrap();
        assert_eq!(r.lists.get(1), &cs(&[1, 2, 3]));
        assert_eq!(r.lists.get(3), &cs(&[1, 3, 4]));
        assert_eq!(r.lists.get(0), &cs(&[1]));
        assert_eq!(r.r_z.keys().copied().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn star_center_removed_from_leaves() {
        // Hub 4 of a wheel acts as a star center for the rim.
        let g = wheel(4);
        let lists = ListAssignment::uniform(5, 1..=4);
        let phi = BTreeMap::from([(4, 2)]);
        let r = reduce_by_partial_coloring(&g, &lists, &Walk::default(), &phi).unwrap();
        assert_eq!(r.subgraph.host, vec![0, 1, 2, 3]);
        assert!(r.lists.iter().all(|(_, l)| !l.contains(&2) && l.len() == 3));
    }

    #[test]
    fn preconditions_name_the_pair() {
        let g = cycle(4);
        let lists = ListAssignment::new(vec![cs(&[1]), cs(&[1, 2]), cs(&[1, 2]), cs(&[1, 2])]);
        let phi = BTreeMap::from([(1, 1)]);
        let err = reduce_by_partial_coloring(&g, &lists, &Walk::path(vec![0]), &phi).unwrap_err();
        assert_eq!(err, ReduceError::PathConflict { v: 1, p: 0, color: 1 });
        let phi = BTreeMap::from([(1, 2), (2, 2)]);
        let err = reduce_by_partial_coloring(&g, &lists, &Walk::default(), &phi).unwrap_err();
        assert_eq!(err, ReduceError::NotProper { u: 1, v: 2, color: 2 });
    }

    #[test]
    fn every_completion_composes() {
        let g = wheel(5);
        let mut lists = ListAssignment::uniform(6, 1..=4);
        lists.set(0, cs(&[3]));
        let phi = BTreeMap::from([(2, 1)]);
        let r = reduce_by_partial_coloring(&g, &lists, &Walk::path(vec![0]), &phi).unwrap();
        let all = enumerate_colorings(&r.subgraph.graph.adjacency(), &r.lists, 10_000);
        assert!(!all.is_empty());
        for psi in all {
            assert!(verify_coloring(&g.adjacency(), &lists, &r.compose(&psi)).is_ok());
        }
    }
}
