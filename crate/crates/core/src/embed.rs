//! Mutable working embedding used by the reductions.
//!
//! Vertices keep their global ids; deleted vertices are flagged dead with an
//! empty rotation. The outer face of every component is tracked as the set of
//! darts lying on it. Deleting an edge merges its two faces (or splits a face
//! at a bridge), so the marking is updated locally and stays exact: the marked
//! darts are precisely the darts of the outer faces.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::plane::{block_tree, components_of, edge, trace_from, Dart, PlaneGraph, StructureError, Subgraph, Vertex};

#[derive(Debug, Clone)]
pub(crate) struct Embedding {
    rot: Vec<Vec<Vertex>>,
    alive: Vec<bool>,
    outer: HashSet<Dart>,
}

impl Embedding {
    pub fn from_plane(g: &PlaneGraph) -> Self {
        Embedding::from_parts(g.rotations().to_vec(), vec![true; g.n()], g.outer_darts())
    }

    /// `outer` holds one dart of every outer face.
    pub fn from_parts(rot: Vec<Vec<Vertex>>, alive: Vec<bool>, outer: &[Dart]) -> Self {
        let mut marked = HashSet::new();
        for &d in outer {
            marked.extend(trace_from(&rot, d));
        }
        Embedding { rot, alive, outer: marked }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.rot.len()).filter(|&v| self.alive[v])
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rot
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rot[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.rot[u].contains(&v)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for v in self.vertices() {
            out.extend(self.rot[v].iter().filter(|&&w| v < w).map(|&w| (v, w)));
        }
        out
    }

    pub fn face(&self, d: Dart) -> Vec<Dart> {
        trace_from(&self.rot, d)
    }

    pub fn delete_edge(&mut self, u: Vertex, v: Vertex) {
        if !self.has_edge(u, v) {
            return;
        }
        let fa = self.face((u, v));
        let bridge = fa.contains(&(v, u));
        let a_outer = self.outer.contains(&(u, v));
        let b_outer = self.outer.contains(&(v, u));
        if !bridge && (a_outer || b_outer) {
            let fb = self.face((v, u));
            self.outer.extend(fa.iter().copied());
            self.outer.extend(fb);
        }
        self.outer.remove(&(u, v));
        self.outer.remove(&(v, u));
        self.rot[u].retain(|&x| x != v);
        self.rot[v].retain(|&x| x != u);
        if bridge && !a_outer {
            // The face splits in two; the side that lost contact with the
            // outer face now sits inside it, so that side's part is its outer face.
            for side in [u, v] {
                let comp = self.component_of(side);
                if !comp.iter().any(|&x| self.rot[x].iter().any(|&y| self.outer.contains(&(x, y)))) {
                    let comp: HashSet<Vertex> = comp.into_iter().collect();
                    self.outer.extend(fa.iter().copied().filter(|d| *d != (u, v) && *d != (v, u) && comp.contains(&d.0)));
                }
            }
        }
    }

    pub fn delete_vertex(&mut self, v: Vertex) {
        if !self.contains(v) {
            return;
        }
        while let Some(&w) = self.rot[v].first() {
            self.delete_edge(v, w);
        }
        self.alive[v] = false;
    }

    /// Keeps only the given vertices and edges (edges need both ends kept).
    pub fn retain(&mut self, keep_vertex: impl Fn(Vertex) -> bool, keep_edge: impl Fn(Vertex, Vertex) -> bool) {
        let doomed: Vec<Vertex> = self.vertices().filter(|&v| !keep_vertex(v)).collect();
        for v in doomed {
            self.delete_vertex(v);
        }
        let doomed: Vec<(Vertex, Vertex)> = self.edges().into_iter().filter(|&(u, v)| !keep_edge(u, v)).collect();
        for (u, v) in doomed {
            self.delete_edge(u, v);
        }
    }

    pub fn component_of(&self, v: Vertex) -> Vec<Vertex> {
        let mut seen = HashSet::from([v]);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in &self.rot[u] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        let mut out: Vec<Vertex> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        components_of(&self.rot, |v| self.alive[v])
    }

    /// Outer face walk of the component of `v`, starting at its least marked
    /// dart. `None` for an isolated vertex.
    pub fn outer_walk(&self, v: Vertex) -> Option<Vec<Dart>> {
        let comp = self.component_of(v);
        let start = comp
            .iter()
            .flat_map(|&x| self.rot[x].iter().map(move |&y| (x, y)))
            .filter(|d| self.outer.contains(d))
            .min();
        match start {
            Some(d) => Some(self.face(d)),
            None => {
                assert!(self.rot[v].is_empty(), "component of {v} lost its outer face marking");
                None
            }
        }
    }

    /// Vertices on some outer face, plus isolated vertices.
    pub fn outer_vertices(&self) -> BTreeSet<Vertex> {
        let mut s: BTreeSet<Vertex> = self.outer.iter().map(|d| d.0).collect();
        s.extend(self.vertices().filter(|&v| self.rot[v].is_empty()));
        s
    }

    /// Least cut vertex, if any component has one.
    pub fn cut_vertex(&self) -> Option<Vertex> {
        block_tree(&self.rot, |v| self.alive[v]).cut_vertices.first().copied()
    }

    pub fn face_index(&self) -> FaceIndex {
        let mut face_of = HashMap::new();
        let mut faces: Vec<Vec<Dart>> = Vec::new();
        for v in self.vertices() {
            for &w in &self.rot[v] {
                if face_of.contains_key(&(v, w)) {
                    continue;
                }
                let f = self.face((v, w));
                for &d in &f {
                    face_of.insert(d, faces.len());
                }
                faces.push(f);
            }
        }
        let outer = faces.iter().map(|f| self.outer.contains(&f[0])).collect();
        FaceIndex { face_of, faces, outer }
    }

    /// Compacts the live part into a standalone plane graph.
    pub fn to_subgraph(&self) -> Subgraph {
        let host: Vec<Vertex> = self.vertices().collect();
        let mut local = vec![usize::MAX; self.rot.len()];
        for (i, &v) in host.iter().enumerate() {
            local[v] = i;
        }
        let rot: Vec<Vec<Vertex>> = host.iter().map(|&v| self.rot[v].iter().map(|&w| local[w]).collect()).collect();
        let mut outer = Vec::new();
        for comp in self.components() {
            if let Some(walk) = self.outer_walk(comp[0]) {
                let id = walk.iter().map(|&(a, b)| (local[a], local[b])).min().unwrap();
                outer.push(id);
            }
        }
        Subgraph { graph: PlaneGraph::from_parts(rot, outer), host }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct FaceIndex {
    face_of: HashMap<Dart, usize>,
    faces: Vec<Vec<Dart>>,
    outer: Vec<bool>,
}

/// The two sides of a cycle: vertices and edges strictly inside it.
#[derive(Debug, Clone)]
pub(crate) struct CycleSides {
    pub cycle: Vec<Vertex>,
    pub cycle_edges: BTreeSet<(Vertex, Vertex)>,
    pub interior_vertices: BTreeSet<Vertex>,
    pub interior_edges: BTreeSet<(Vertex, Vertex)>,
}

impl FaceIndex {
    /// Classifies faces relative to `cycle` by flooding from the outer faces
    /// without crossing cycle edges; faces left unreached are inside.
    pub fn sides(&self, emb: &Embedding, cycle: &[Vertex]) -> Result<CycleSides, StructureError> {
        let k = cycle.len();
        let distinct: BTreeSet<_> = cycle.iter().collect();
        if k < 3 || distinct.len() != k {
            return Err(StructureError::NotACycle(format!("{cycle:?}")));
        }
        let mut cycle_edges = BTreeSet::new();
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            if !emb.has_edge(a, b) {
                return Err(StructureError::NotACycle(format!("{cycle:?} misses edge {a}-{b}")));
            }
            cycle_edges.insert(edge(a, b));
        }
        let mut reached = vec![false; self.faces.len()];
        let mut queue: VecDeque<usize> = (0..self.faces.len()).filter(|&f| self.outer[f]).collect();
        for &f in &queue {
            reached[f] = true;
        }
        while let Some(f) = queue.pop_front() {
            for &(a, b) in &self.faces[f] {
                if cycle_edges.contains(&edge(a, b)) {
                    continue;
                }
                let g = self.face_of[&(b, a)];
                if !reached[g] {
                    reached[g] = true;
                    queue.push_back(g);
                }
            }
        }
        let on_cycle: BTreeSet<Vertex> = cycle.iter().copied().collect();
        let mut interior_vertices = BTreeSet::new();
        for v in emb.vertices() {
            if on_cycle.contains(&v) || emb.degree(v) == 0 {
                continue;
            }
            let w = emb.neighbors(v)[0];
            if !reached[self.face_of[&(v, w)]] {
                interior_vertices.insert(v);
            }
        }
        let mut interior_edges = BTreeSet::new();
        for (u, v) in emb.edges() {
            let e = edge(u, v);
            if !cycle_edges.contains(&e) && !reached[self.face_of[&(u, v)]] {
                interior_edges.insert(e);
            }
        }
        Ok(CycleSides { cycle: cycle.to_vec(), cycle_edges, interior_vertices, interior_edges })
    }
}

impl CycleSides {
    pub fn keep_interior(&self, emb: &mut Embedding) {
        let on_cycle: BTreeSet<Vertex> = self.cycle.iter().copied().collect();
        emb.retain(
            |v| on_cycle.contains(&v) || self.interior_vertices.contains(&v),
            |u, v| {
                let e = edge(u, v);
                self.cycle_edges.contains(&e) || self.interior_edges.contains(&e)
            },
        );
    }

    pub fn keep_exterior(&self, emb: &mut Embedding) {
        emb.retain(|v| !self.interior_vertices.contains(&v), |u, v| !self.interior_edges.contains(&edge(u, v)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::fixtures::*;

    #[test]
    fn deleting_hub_merges_into_outer_face() {
        let g = wheel(5);
        let mut emb = Embedding::from_plane(&g);
        emb.delete_vertex(5);
        let walk = emb.outer_walk(0).unwrap();
        assert_eq!(walk.len(), 5);
        // Both sides of the rim are now outer.
        assert_eq!(emb.outer_vertices().len(), 5);
    }

    #[test]
    fn deleting_rim_vertex_exposes_hub() {
        let g = wheel(5);
        let mut emb = Embedding::from_plane(&g);
        emb.delete_vertex(0);
        let walk = emb.outer_walk(1).unwrap();
        let vs: BTreeSet<_> = walk.iter().map(|d| d.0).collect();
        assert_eq!(vs, [1, 2, 3, 4, 5].into());
    }

    #[test]
    fn floating_block_gets_outer_face_after_split() {
        // Square 0..3 with a pendant triangle 4,5,6 attached to 0 by edge 0-4,
        // all drawn inside the square.
        let rot = vec![
            vec![1, 4, 3],
            vec![2, 0],
            vec![3, 1],
            vec![0, 2],
            vec![0, 5, 6],
            vec![6, 4],
            vec![4, 5],
        ];
        let g = PlaneGraph::new(rot, &[(1, 0)]).unwrap();
        assert_eq!(g.outer_face().unwrap().len(), 4);
        let mut emb = Embedding::from_plane(&g);
        emb.delete_edge(0, 4);
        let walk = emb.outer_walk(4).unwrap();
        assert_eq!(walk.len(), 3);
        let sub = emb.to_subgraph();
        assert_eq!(sub.graph.outer_faces().len(), 2);
        assert!(sub.graph.outer_faces().iter().all(|f| f.len() == 3 || f.len() == 4));
    }

    #[test]
    fn cycle_sides_of_wheel_rim() {
        let g = wheel(4);
        let emb = Embedding::from_plane(&g);
        let sides = emb.face_index().sides(&emb, &[0, 1, 2, 3]).unwrap();
        assert_eq!(sides.interior_vertices, [4].into());
        assert_eq!(sides.interior_edges.len(), 4);
        let tri = emb.face_index().sides(&emb, &[0, 1, 4]).unwrap();
        assert!(tri.interior_vertices.is_empty() && tri.interior_edges.is_empty());
    }
}
