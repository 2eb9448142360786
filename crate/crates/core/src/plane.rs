//! Combinatorial plane graphs.
//!
//! A [`PlaneGraph`] is a simple undirected graph on the dense vertex set
//! `0..n` together with a rotation system: for every vertex the cyclic,
//! counterclockwise order of its neighbors. Faces are recovered by tracing
//! darts: the successor of the dart `u -> v` is `v -> w`, where `w` precedes
//! `u` in the rotation at `v`. With this convention bounded faces are traced
//! counterclockwise and the outer face clockwise.
//!
//! One dart per connected component (with at least one edge) designates the
//! outer face of that component.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embed::Embedding;

pub type Vertex = usize;
/// Directed edge `(tail, head)`.
pub type Dart = (Vertex, Vertex);

/// Normalized undirected edge `(min, max)`.
pub fn edge(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("neighbor {1} appears twice in the rotation of {0}")]
    MultiEdge(Vertex, Vertex),
    #[error("asymmetric adjacency: {1} is in the rotation of {0} but not vice versa")]
    Asymmetric(Vertex, Vertex),
    #[error("rotation system is not planar: component of vertex {vertex} has V - E + F = {euler}")]
    NotPlanar { vertex: Vertex, euler: i64 },
    #[error("outer dart {0}->{1} is not an edge")]
    BadOuterDart(Vertex, Vertex),
    #[error("component of vertex {0} has no designated outer face")]
    MissingOuterFace(Vertex),
    #[error("component of vertex {0} has two different outer faces designated")]
    ConflictingOuterFace(Vertex),
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("not a path of the graph: {0}")]
    NotAPath(String),
    #[error("not a k-chord of the outer cycle: {0}")]
    NotAKChord(String),
    #[error("path is not on the outer face: {0}")]
    PathOffOuterFace(String),
}

/// A face as the closed sequence of darts bounding it. The darts are rotated
/// so that the lexicographically least dart comes first; that dart is the
/// face id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    fn from_darts(mut darts: Vec<Dart>) -> Self {
        if let Some(pos) = darts.iter().enumerate().min_by_key(|(_, d)| **d).map(|(i, _)| i) {
            darts.rotate_left(pos);
        }
        Face { darts }
    }

    pub fn id(&self) -> Dart {
        self.darts[0]
    }

    /// Number of darts on the boundary walk.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary vertices in walk order (with repetitions for cut vertices).
    pub fn vertices(&self) -> Vec<Vertex> {
        self.darts.iter().map(|d| d.0).collect()
    }

    pub fn contains_dart(&self, d: Dart) -> bool {
        self.darts.contains(&d)
    }
}

/// A path or cycle given by its vertex sequence. Closed walks do not repeat
/// the first vertex at the end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct Walk {
    pub vertices: Vec<Vertex>,
    pub closed: bool,
}

impl Walk {
    pub fn path(vertices: Vec<Vertex>) -> Self {
        Walk { vertices, closed: false }
    }

    pub fn cycle(vertices: Vec<Vertex>) -> Self {
        Walk { vertices, closed: true }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        if self.closed {
            if self.vertices.len() >= 2 {
                self.vertices.len()
            } else {
                0
            }
        } else {
            self.vertices.len().saturating_sub(1)
        }
    }

    /// Edges of the walk, normalized.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let k = self.vertices.len();
        let mut out: Vec<_> = self.vertices.windows(2).map(|w| edge(w[0], w[1])).collect();
        if self.closed && k >= 3 {
            out.push(edge(self.vertices[k - 1], self.vertices[0]));
        }
        out
    }
}

/// Vertex and edge ids identifying a subgraph of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct SubgraphRef {
    pub vertices: BTreeSet<Vertex>,
    pub edges: BTreeSet<(Vertex, Vertex)>,
}

impl SubgraphRef {
    pub fn vertex(v: Vertex) -> Self {
        SubgraphRef { vertices: [v].into(), edges: BTreeSet::new() }
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vs: I) -> Self {
        SubgraphRef { vertices: vs.into_iter().collect(), edges: BTreeSet::new() }
    }

    /// Subgraph spanned by the given edges (endpoints included).
    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(es: I) -> Self {
        let mut r = SubgraphRef::default();
        for (u, v) in es {
            r.vertices.insert(u);
            r.vertices.insert(v);
            r.edges.insert(edge(u, v));
        }
        r
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A plane subgraph extracted from a host graph, relabeled densely.
/// `host[i]` is the host id of local vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: PlaneGraph,
    pub host: Vec<Vertex>,
}

impl Subgraph {
    pub fn host_vertices(&self) -> BTreeSet<Vertex> {
        self.host.iter().copied().collect()
    }

    pub fn host_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.graph.edges().into_iter().map(|(u, v)| edge(self.host[u], self.host[v])).collect()
    }

    pub fn to_ref(&self) -> SubgraphRef {
        SubgraphRef { vertices: self.host_vertices(), edges: self.host_edges() }
    }
}

/// Cut vertices and 2-connected blocks (vertex sets, sorted). Isolated
/// vertices form singleton blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTree {
    pub cut_vertices: Vec<Vertex>,
    pub blocks: Vec<Vec<Vertex>>,
}

impl BlockTree {
    pub fn is_biconnected(&self) -> bool {
        self.cut_vertices.is_empty() && self.blocks.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneGraph {
    rot: Vec<Vec<Vertex>>,
    outer: Vec<Dart>,
}

impl PlaneGraph {
    /// Builds a plane graph from a rotation system and outer-face darts (one
    /// per component with edges; several darts of the same face are allowed).
    pub fn new(rot: Vec<Vec<Vertex>>, outer: &[Dart]) -> Result<Self, StructureError> {
        validate_rotation(&rot)?;
        let mut g = PlaneGraph { rot, outer: Vec::new() };
        let comps = g.components();
        let mut comp_of = vec![usize::MAX; g.n()];
        for (ci, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = ci;
            }
        }
        let mut chosen: Vec<Option<Dart>> = vec![None; comps.len()];
        for &(u, v) in outer {
            if u >= g.n() || !g.has_edge(u, v) {
                return Err(StructureError::BadOuterDart(u, v));
            }
            let face = g.face_of((u, v)).id();
            let slot = &mut chosen[comp_of[u]];
            match slot {
                Some(prev) if *prev != face => return Err(StructureError::ConflictingOuterFace(u)),
                _ => *slot = Some(face),
            }
        }
        for (ci, c) in comps.iter().enumerate() {
            let has_edges = c.iter().any(|&v| !g.rot[v].is_empty());
            match (has_edges, chosen[ci]) {
                (true, None) => return Err(StructureError::MissingOuterFace(c[0])),
                (true, Some(d)) => g.outer.push(d),
                _ => {}
            }
        }
        g.outer.sort_unstable();
        g.check_euler()?;
        Ok(g)
    }

    /// Builds a plane graph choosing, in every component, the longest face
    /// (ties broken by least face id) as the outer face.
    pub fn with_longest_outer(rot: Vec<Vec<Vertex>>) -> Result<Self, StructureError> {
        validate_rotation(&rot)?;
        let probe = PlaneGraph { rot, outer: Vec::new() };
        let mut best: HashMap<Vertex, Face> = HashMap::new();
        let comps = probe.components();
        let mut comp_root = vec![0; probe.n()];
        for c in &comps {
            for &v in c {
                comp_root[v] = c[0];
            }
        }
        for f in probe.trace_faces() {
            let root = comp_root[f.id().0];
            let better = match best.get(&root) {
                None => true,
                Some(b) => f.len() > b.len() || (f.len() == b.len() && f.id() < b.id()),
            };
            if better {
                best.insert(root, f);
            }
        }
        let outer: Vec<Dart> = best.values().map(|f| f.id()).collect();
        PlaneGraph::new(probe.rot, &outer)
    }

    /// Trusted constructor for internally produced embeddings; `outer` must
    /// already hold one face id per component with edges.
    pub(crate) fn from_parts(rot: Vec<Vec<Vertex>>, mut outer: Vec<Dart>) -> Self {
        outer.sort_unstable();
        let g = PlaneGraph { rot, outer };
        debug_assert!(validate_rotation(&g.rot).is_ok());
        g
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rot
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rot[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.rot[u].contains(&v)
    }

    /// All edges, normalized and sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, r) in self.rot.iter().enumerate() {
            out.extend(r.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out.sort_unstable();
        out
    }

    /// Sorted neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        self.rot
            .iter()
            .map(|r| {
                let mut s = r.clone();
                s.sort_unstable();
                s
            })
            .collect()
    }

    /// Outer-face darts, one per component with edges (face ids).
    pub fn outer_darts(&self) -> &[Dart] {
        &self.outer
    }

    /// Successor of a dart along its face.
    pub fn next_dart(&self, (u, v): Dart) -> Dart {
        next_in(&self.rot, (u, v))
    }

    pub fn face_of(&self, d: Dart) -> Face {
        Face::from_darts(trace_from(&self.rot, d))
    }

    /// All faces, sorted by id. Every dart lies on exactly one face.
    pub fn trace_faces(&self) -> Vec<Face> {
        let mut seen: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = Vec::new();
        for (u, r) in self.rot.iter().enumerate() {
            for &v in r {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let darts = trace_from(&self.rot, (u, v));
                seen.extend(darts.iter().copied());
                faces.push(Face::from_darts(darts));
            }
        }
        faces.sort_by_key(Face::id);
        faces
    }

    /// Outer faces, one per component with edges.
    pub fn outer_faces(&self) -> Vec<Face> {
        self.outer.iter().map(|&d| self.face_of(d)).collect()
    }

    /// The outer face of the component containing the first outer dart.
    pub fn outer_face(&self) -> Option<Face> {
        self.outer.first().map(|&d| self.face_of(d))
    }

    /// Vertices incident with an outer face, plus isolated vertices.
    pub fn outer_vertices(&self) -> BTreeSet<Vertex> {
        let mut s: BTreeSet<Vertex> = self.outer_faces().iter().flat_map(|f| f.vertices()).collect();
        s.extend((0..self.n()).filter(|&v| self.rot[v].is_empty()));
        s
    }

    /// If the outer face of a connected graph is bounded by a cycle, returns
    /// that cycle in clockwise walk order.
    pub fn outer_cycle(&self) -> Option<Walk> {
        if self.outer.len() != 1 {
            return None;
        }
        let f = self.outer_face()?;
        let vs = f.vertices();
        let distinct: BTreeSet<_> = vs.iter().collect();
        (vs.len() >= 3 && distinct.len() == vs.len()).then(|| Walk::cycle(vs))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        components_of(&self.rot, |_| true)
    }

    /// `V - E + F = 2` on every component with an edge, faces as traced.
    pub fn check_euler(&self) -> Result<(), StructureError> {
        let faces = self.trace_faces();
        let comps = self.components();
        let mut comp_of = vec![0; self.n()];
        for (ci, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = ci;
            }
        }
        let mut face_count = vec![0i64; comps.len()];
        for f in &faces {
            face_count[comp_of[f.id().0]] += 1;
        }
        for (ci, c) in comps.iter().enumerate() {
            let e: i64 = c.iter().map(|&v| self.rot[v].len() as i64).sum::<i64>() / 2;
            if e == 0 {
                continue;
            }
            let euler = c.len() as i64 - e + face_count[ci];
            if euler != 2 {
                return Err(StructureError::NotPlanar { vertex: c[0], euler });
            }
        }
        Ok(())
    }

    /// Checks that `w` is a cycle of this graph.
    pub fn check_cycle(&self, w: &Walk) -> Result<(), StructureError> {
        let vs = &w.vertices;
        let distinct: BTreeSet<_> = vs.iter().collect();
        if !w.closed || vs.len() < 3 || distinct.len() != vs.len() {
            return Err(StructureError::NotACycle(format!("{vs:?}")));
        }
        if vs.iter().any(|&v| v >= self.n()) {
            return Err(StructureError::NotACycle(format!("{vs:?}")));
        }
        for (u, v) in w.edges() {
            if !self.has_edge(u, v) {
                return Err(StructureError::NotACycle(format!("{vs:?} misses edge {u}-{v}")));
            }
        }
        Ok(())
    }

    /// Checks that `w` is a path of this graph (a single vertex is a path).
    pub fn check_path(&self, w: &Walk) -> Result<(), StructureError> {
        let vs = &w.vertices;
        let distinct: BTreeSet<_> = vs.iter().collect();
        if w.closed || distinct.len() != vs.len() || vs.iter().any(|&v| v >= self.n()) {
            return Err(StructureError::NotAPath(format!("{vs:?}")));
        }
        for win in vs.windows(2) {
            if !self.has_edge(win[0], win[1]) {
                return Err(StructureError::NotAPath(format!("{vs:?} misses edge {}-{}", win[0], win[1])));
            }
        }
        Ok(())
    }

    /// All `order`-chords of the cycle `k`: paths of length `order` whose ends
    /// lie on `k` and whose inner vertices avoid it. Order 1 yields the chords.
    /// Each path is reported once, oriented from its smaller end.
    pub fn k_chords(&self, k: &Walk, order: usize) -> Result<Vec<Walk>, StructureError> {
        self.check_cycle(k)?;
        let on_k: BTreeSet<Vertex> = k.vertices.iter().copied().collect();
        let k_edges: BTreeSet<_> = k.edges().into_iter().collect();
        let mut out = Vec::new();
        if order == 0 {
            return Ok(out);
        }
        for &a in &on_k {
            let mut path = vec![a];
            self.extend_chord(&on_k, &k_edges, order, &mut path, &mut out);
        }
        out.sort_by(|x: &Walk, y: &Walk| x.vertices.cmp(&y.vertices));
        Ok(out)
    }

    fn extend_chord(
        &self,
        on_k: &BTreeSet<Vertex>,
        k_edges: &BTreeSet<(Vertex, Vertex)>,
        order: usize,
        path: &mut Vec<Vertex>,
        out: &mut Vec<Walk>,
    ) {
        let last = *path.last().unwrap();
        let steps = path.len() - 1;
        for &w in &self.rot[last] {
            if steps + 1 == order {
                if on_k.contains(&w) && w > path[0] && !(order == 1 && k_edges.contains(&edge(last, w))) {
                    let mut p = path.clone();
                    p.push(w);
                    out.push(Walk::path(p));
                }
            } else if !on_k.contains(&w) && !path.contains(&w) {
                path.push(w);
                self.extend_chord(on_k, k_edges, order, path, out);
                path.pop();
            }
        }
    }

    /// Splits along the cycle `k` into the part inside the closed disc it
    /// bounds and the part outside the open disc. The two parts share exactly
    /// `k`; every chord of `k` lands in exactly one of them.
    pub fn split_at_cycle(&self, k: &Walk) -> Result<(Subgraph, Subgraph), StructureError> {
        self.check_cycle(k)?;
        let emb = Embedding::from_plane(self);
        let sides = emb.face_index().sides(&emb, &k.vertices)?;
        let mut inner = emb.clone();
        sides.keep_interior(&mut inner);
        let mut outer = emb;
        sides.keep_exterior(&mut outer);
        Ok((inner.to_subgraph(), outer.to_subgraph()))
    }

    /// The two `q`-components for a k-chord `q` of the outer cycle `outer`:
    /// the parts inside the two cycles of `outer ∪ q` that contain `q`. The
    /// first uses the arc of `outer` that continues forward from the last
    /// vertex of `q`.
    pub fn q_components(&self, outer: &Walk, q: &Walk) -> Result<(Subgraph, Subgraph), StructureError> {
        self.check_cycle(outer)?;
        match self.outer_cycle() {
            Some(c) if same_cycle(&c.vertices, &outer.vertices) => {}
            _ => return Err(StructureError::NotACycle("walk is not the outer face cycle".into())),
        }
        self.check_path(q)?;
        let (c1, c2) = q_cycles(&outer.vertices, &q.vertices).ok_or_else(|| {
            StructureError::NotAKChord(format!("{:?}", q.vertices))
        })?;
        if q.length() == 1 && outer.edges().contains(&edge(q.vertices[0], q.vertices[1])) {
            return Err(StructureError::NotAKChord(format!("{:?} is an edge of the cycle", q.vertices)));
        }
        let (g1, _) = self.split_at_cycle(&Walk::cycle(c1))?;
        let (g2, _) = self.split_at_cycle(&Walk::cycle(c2))?;
        Ok((g1, g2))
    }

    /// Distance between two subgraphs: the least number of edges on a path
    /// from a vertex of `h1` to a vertex of `h2`. `None` if unreachable.
    pub fn subgraph_distance(&self, h1: &SubgraphRef, h2: &SubgraphRef) -> Option<usize> {
        set_distance(&self.adjacency(), &h1.vertices, &h2.vertices)
    }

    pub fn blocks_and_cuts(&self) -> BlockTree {
        block_tree(&self.rot, |_| true)
    }
}

pub(crate) fn validate_rotation(rot: &[Vec<Vertex>]) -> Result<(), StructureError> {
    let n = rot.len();
    for (u, r) in rot.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &v in r {
            if v >= n {
                return Err(StructureError::VertexOutOfRange(v));
            }
            if v == u {
                return Err(StructureError::SelfLoop(u));
            }
            if !seen.insert(v) {
                return Err(StructureError::MultiEdge(u, v));
            }
        }
    }
    for (u, r) in rot.iter().enumerate() {
        for &v in r {
            if !rot[v].contains(&u) {
                return Err(StructureError::Asymmetric(u, v));
            }
        }
    }
    Ok(())
}

pub(crate) fn next_in(rot: &[Vec<Vertex>], (u, v): Dart) -> Dart {
    let r = &rot[v];
    let i = r.iter().position(|&x| x == u).expect("dart must be an edge");
    (v, r[(i + r.len() - 1) % r.len()])
}

pub(crate) fn trace_from(rot: &[Vec<Vertex>], start: Dart) -> Vec<Dart> {
    let mut darts = vec![start];
    let mut d = next_in(rot, start);
    while d != start {
        darts.push(d);
        d = next_in(rot, d);
    }
    darts
}

pub(crate) fn components_of(rot: &[Vec<Vertex>], alive: impl Fn(Vertex) -> bool) -> Vec<Vec<Vertex>> {
    let n = rot.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || !alive(s) {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &rot[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Multi-source BFS distance between two vertex sets.
pub(crate) fn set_distance(adj: &[Vec<Vertex>], a: &BTreeSet<Vertex>, b: &BTreeSet<Vertex>) -> Option<usize> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let mut dist = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for &v in a {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if b.contains(&u) {
            return Some(dist[u]);
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// BFS distances from one vertex.
pub(crate) fn bfs_from(adj: &[Vec<Vertex>], s: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Block decomposition over the vertices accepted by `alive`.
pub(crate) fn block_tree(rot: &[Vec<Vertex>], alive: impl Fn(Vertex) -> bool) -> BlockTree {
    let n = rot.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();

    for root in 0..n {
        if !alive(root) || disc[root] != usize::MAX {
            continue;
        }
        if rot[root].is_empty() {
            disc[root] = time;
            time += 1;
            blocks.push(vec![root]);
            continue;
        }
        // Iterative DFS: (vertex, parent, next neighbor index).
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        let mut root_children = 0;
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < rot[u].len() {
                let w = rot[u][*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block.into_iter().collect());
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    BlockTree { cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(), blocks }
}

fn same_cycle(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let k = a.len();
    let Some(s) = b.iter().position(|&x| x == a[0]) else { return false };
    let fwd = (0..k).all(|i| a[i] == b[(s + i) % k]);
    let bwd = (0..k).all(|i| a[i] == b[(s + k - i) % k]);
    fwd || bwd
}

/// The two cycles of `outer ∪ q` containing the chord path `q`.
pub(crate) fn q_cycles(outer: &[Vertex], q: &[Vertex]) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let k = outer.len();
    let (&a, &b) = (q.first()?, q.last()?);
    if q.len() < 2 || a == b {
        return None;
    }
    let i = outer.iter().position(|&x| x == a)?;
    let j = outer.iter().position(|&x| x == b)?;
    if q[1..q.len() - 1].iter().any(|v| outer.contains(v)) {
        return None;
    }
    let mut c1 = q.to_vec();
    let mut t = (j + 1) % k;
    while t != i {
        c1.push(outer[t]);
        t = (t + 1) % k;
    }
    let mut c2 = q.to_vec();
    let mut t = (j + k - 1) % k;
    while t != i {
        c2.push(outer[t]);
        t = (t + k - 1) % k;
    }
    Some((c1, c2))
}

#[cfg(test)]
pub(crate) mod fixtures {
    //! Small hand-embedded graphs shared by unit tests.
    use super::*;

    pub fn triangle() -> PlaneGraph {
        PlaneGraph::with_longest_outer(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    /// Cycle 0..n-1 drawn counterclockwise.
    pub fn cycle(n: usize) -> PlaneGraph {
        let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        PlaneGraph::new(rot, &[(1, 0)]).unwrap()
    }

    /// Outer triangle 0,1,2 (counterclockwise) with 3 in the middle.
    pub fn k4() -> PlaneGraph {
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        PlaneGraph::new(rot, &[(1, 0)]).unwrap()
    }

    /// Rim 0..k-1 counterclockwise, hub k.
    pub fn wheel(k: usize) -> PlaneGraph {
        let mut rot: Vec<Vec<Vertex>> = (0..k).map(|i| vec![(i + 1) % k, k, (i + k - 1) % k]).collect();
        rot.push((0..k).collect());
        PlaneGraph::new(rot, &[(1, 0)]).unwrap()
    }

    pub fn path(n: usize) -> PlaneGraph {
        let rot = (0..n)
            .map(|i| {
                let mut r = Vec::new();
                if i > 0 {
                    r.push(i - 1);
                }
                if i + 1 < n {
                    r.push(i + 1);
                }
                r
            })
            .collect();
        PlaneGraph::with_longest_outer(rot).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn triangle_has_two_faces_of_length_three() {
        let faces = triangle().trace_faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k4_has_four_faces() {
        let g = k4();
        assert_eq!(g.trace_faces().len(), 4);
        assert_eq!(g.outer_face().unwrap().len(), 3);
    }

    #[test]
    fn path_has_one_face_of_length_four() {
        let faces = path(3).trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
    }

    #[test]
    fn rejects_malformed_rotations() {
        assert_eq!(PlaneGraph::new(vec![vec![1], vec![]], &[]), Err(StructureError::Asymmetric(0, 1)));
        assert_eq!(PlaneGraph::new(vec![vec![0]], &[]), Err(StructureError::SelfLoop(0)));
        assert_eq!(PlaneGraph::new(vec![vec![1, 1], vec![0, 0]], &[]), Err(StructureError::MultiEdge(0, 1)));
        assert_eq!(
            PlaneGraph::new(vec![vec![1], vec![0]], &[]),
            Err(StructureError::MissingOuterFace(0))
        );
    }

    #[test]
    fn rejects_non_planar_rotation() {
        // K4 with a rotation that embeds it on the torus.
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(PlaneGraph::with_longest_outer(rot), Err(StructureError::NotPlanar { .. })));
    }

    #[test]
    fn walk_lengths() {
        assert_eq!(Walk::path(vec![0, 1, 2]).length(), 2);
        assert_eq!(Walk::path(vec![7]).length(), 0);
        assert_eq!(Walk::cycle(vec![0, 1, 2, 3, 4]).length(), 5);
    }

    #[test]
    fn chords_of_square_with_diagonal() {
        // C4 0..3 plus diagonal 0-2 drawn inside.
        let rot = vec![vec![1, 2, 3], vec![2, 0], vec![3, 0, 1], vec![0, 2]];
        let g = PlaneGraph::new(rot, &[(1, 0)]).unwrap();
        let k = Walk::cycle(vec![0, 1, 2, 3]);
        assert_eq!(g.k_chords(&k, 1).unwrap(), vec![Walk::path(vec![0, 2])]);
        assert!(g.k_chords(&k, 2).unwrap().is_empty());
    }

    #[test]
    fn two_chord_through_center() {
        // C4 0..3 with center 4 joined to 0 and 2.
        let rot = vec![vec![1, 4, 3], vec![2, 0], vec![3, 4, 1], vec![0, 2], vec![0, 2]];
        let g = PlaneGraph::new(rot, &[(1, 0)]).unwrap();
        let k = Walk::cycle(vec![0, 1, 2, 3]);
        assert_eq!(g.k_chords(&k, 2).unwrap(), vec![Walk::path(vec![0, 4, 2])]);
        assert!(g.k_chords(&k, 1).unwrap().is_empty());
    }

    #[test]
    fn triangle_has_no_chords() {
        let k = Walk::cycle(vec![0, 1, 2]);
        for order in 1..4 {
            assert!(triangle().k_chords(&k, order).unwrap().is_empty());
        }
    }

    #[test]
    fn k_chords_rejects_non_cycle() {
        assert!(triangle().k_chords(&Walk::path(vec![0, 1, 2]), 1).is_err());
        assert!(path(4).k_chords(&Walk::cycle(vec![0, 1, 2]), 1).is_err());
    }

    #[test]
    fn split_k4_at_outer_triangle() {
        let g = k4();
        let (inside, outside) = g.split_at_cycle(&Walk::cycle(vec![0, 1, 2])).unwrap();
        assert_eq!(inside.host_vertices(), [0, 1, 2, 3].into());
        assert_eq!(inside.host_edges().len(), 6);
        assert_eq!(outside.host_vertices(), [0, 1, 2].into());
        assert_eq!(outside.host_edges().len(), 3);
    }

    #[test]
    fn split_empty_cycle() {
        let g = cycle(5);
        let (inside, outside) = g.split_at_cycle(&Walk::cycle((0..5).collect())).unwrap();
        assert_eq!(inside.to_ref(), outside.to_ref());
        assert_eq!(inside.host_edges().len(), 5);
    }

    #[test]
    fn split_wheel_at_rim() {
        let g = wheel(6);
        let (inside, outside) = g.split_at_cycle(&Walk::cycle((0..6).collect())).unwrap();
        assert_eq!(inside.host_vertices(), (0..7).collect());
        assert_eq!(inside.host_edges().len(), 12);
        assert_eq!(outside.host_vertices(), (0..6).collect());
        assert_eq!(outside.host_edges().len(), 6);
        // The inside part keeps the rim as its outer face.
        assert_eq!(inside.graph.outer_face().unwrap().len(), 6);
    }

    #[test]
    fn q_components_of_hexagon_chord() {
        // C6 0..5 with chord 0-3 inside.
        let mut rot: Vec<Vec<Vertex>> = (0..6).map(|i| vec![(i + 1) % 6, (i + 5) % 6]).collect();
        rot[0] = vec![1, 3, 5];
        rot[3] = vec![4, 0, 2];
        let g = PlaneGraph::new(rot, &[(1, 0)]).unwrap();
        let outer = g.outer_cycle().unwrap();
        let (g1, g2) = g.q_components(&outer, &Walk::path(vec![0, 3])).unwrap();
        let mut sides = vec![g1.host_vertices(), g2.host_vertices()];
        sides.sort();
        assert_eq!(sides, vec![[0, 1, 2, 3].into(), [0, 3, 4, 5].into()]);
        assert_eq!(g1.host_edges().len(), 4);
        assert_eq!(g2.host_edges().len(), 4);
        let shared: Vec<_> = g1.host_edges().intersection(&g2.host_edges()).copied().collect();
        assert_eq!(shared, vec![(0, 3)]);
    }

    #[test]
    fn q_components_of_square_two_chord() {
        let rot = vec![vec![1, 4, 3], vec![2, 0], vec![3, 4, 1], vec![0, 2], vec![0, 2]];
        let g = PlaneGraph::new(rot, &[(1, 0)]).unwrap();
        let outer = g.outer_cycle().unwrap();
        let (g1, g2) = g.q_components(&outer, &Walk::path(vec![0, 4, 2])).unwrap();
        assert_eq!(g1.host_edges().len(), 4);
        assert_eq!(g2.host_edges().len(), 4);
        assert_eq!(g1.host_vertices().intersection(&g2.host_vertices()).count(), 3);
    }

    #[test]
    fn q_components_of_octagon_three_chord() {
        // C8 0..7 with the 3-chord 0-8-9-3 drawn inside. Hand count: the arc
        // 3,2,1,0 closes a cycle of 3+3 = 6 edges; the arc 3..7,0 closes one
        // of 5+3 = 8 edges.
        let mut rot: Vec<Vec<Vertex>> = (0..8).map(|i| vec![(i + 1) % 8, (i + 7) % 8]).collect();
        rot[0] = vec![1, 8, 7];
        rot[3] = vec![4, 9, 2];
        rot.push(vec![9, 0]);
        rot.push(vec![3, 8]);
        let g = PlaneGraph::new(rot, &[(1, 0)]).unwrap();
        let outer = g.outer_cycle().unwrap();
        let (g1, g2) = g.q_components(&outer, &Walk::path(vec![0, 8, 9, 3])).unwrap();
        let mut counts = vec![g1.host_edges().len(), g2.host_edges().len()];
        counts.sort();
        assert_eq!(counts, vec![6, 8]);
        let shared: BTreeSet<_> = g1.host_edges().intersection(&g2.host_edges()).copied().collect();
        assert_eq!(shared, [(0, 8), (8, 9), (3, 9)].into());
    }

    #[test]
    fn q_components_rejects_outer_edge() {
        let g = cycle(5);
        let outer = g.outer_cycle().unwrap();
        assert!(g.q_components(&outer, &Walk::path(vec![0, 1])).is_err());
    }

    #[test]
    fn distances() {
        let g = cycle(6);
        assert_eq!(g.subgraph_distance(&SubgraphRef::vertex(0), &SubgraphRef::vertex(3)), Some(3));
        assert_eq!(g.subgraph_distance(&SubgraphRef::vertex(0), &SubgraphRef::vertex(1)), Some(1));
        let a = SubgraphRef::from_edges([(0, 1)]);
        let b = SubgraphRef::from_edges([(1, 2)]);
        assert_eq!(g.subgraph_distance(&a, &b), Some(0));
        let two = PlaneGraph::new(vec![vec![], vec![]], &[]).unwrap();
        assert_eq!(two.subgraph_distance(&SubgraphRef::vertex(0), &SubgraphRef::vertex(1)), None);
    }

    #[test]
    fn blocks_of_bowtie_cycle_and_path() {
        // Two triangles sharing vertex 2.
        let rot = vec![vec![1, 2], vec![2, 0], vec![0, 1, 3, 4], vec![4, 2], vec![2, 3]];
        let bow = PlaneGraph::with_longest_outer(rot).unwrap();
        let bt = bow.blocks_and_cuts();
        assert_eq!(bt.cut_vertices, vec![2]);
        assert_eq!(bt.blocks.len(), 2);

        let bt = cycle(5).blocks_and_cuts();
        assert!(bt.is_biconnected());

        let bt = path(4).blocks_and_cuts();
        assert_eq!(bt.cut_vertices, vec![1, 2]);
        assert_eq!(bt.blocks.len(), 3);
    }

    #[test]
    fn outer_cycle_orientation_is_clockwise_walk() {
        let g = cycle(4);
        let c = g.outer_cycle().unwrap();
        assert_eq!(c.vertices.len(), 4);
        // The rim is drawn counterclockwise, so the outer walk runs backwards.
        assert!(g.outer_face().unwrap().contains_dart((1, 0)));
    }
}
