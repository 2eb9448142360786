//! Seeded instance generators.
//!
//! Every generator draws from a ChaCha stream seeded by the caller, so the
//! same parameters and seed give the same instance bit for bit.

use std::collections::{BTreeSet, HashSet};
use std::f64::consts::TAU;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::{insert_before, Drawing};
use crate::instance::Instance;
use crate::lists::{Color, ColorSet, ListAssignment};
use crate::plane::{bfs_from, components_of, trace_from, Dart, PlaneGraph, Vertex, Walk};
use crate::validity::{check_basic, check_main0, check_thomassen, CROSSING_N_MIN, N_N_MIN};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// Graph families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Random triangulation on `n` vertices with `crossings` planted
    /// crossings (no spacing).
    Triangulation { n: usize, crossings: usize },
    /// `rows x cols` square grid.
    Grid { rows: usize, cols: usize },
    /// A hub inside `rings` concentric `rim`-cycles, consecutive rings
    /// joined in a zigzag.
    WheelStack { rim: usize, rings: usize },
    /// Grid with crossings pairwise at distance >= 15 and N-vertices placed
    /// at the distances the far-crossings hypotheses ask for.
    NearPlanar { rows: usize, cols: usize, crossings: usize, n_vertices: usize },
    /// A path with triangles hung on some edges; `n_vertices` N-vertices at
    /// pairwise distance >= `spacing` (which must be at least 11).
    FarFours { spine: usize, ears: usize, n_vertices: usize, spacing: usize },
}

/// How lists are drawn.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ListProfile {
    /// `size` colors everywhere, one fewer on N-vertices.
    Uniform { size: usize },
    /// Precolored outer edge, 3-lists on the outer face, 5-lists inside.
    Thomassen,
    /// Precolored outer path with `length` edges, 3- and 4-lists on the
    /// outer face, 5-lists inside.
    PrecoloredPath { length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub lists: ListProfile,
    pub palette: u32,
    pub seed: u64,
}

pub fn gen_instance(spec: &GenSpec) -> Result<Instance, GenError> {
    let mut r = rng(spec.seed);
    let mut n_set = BTreeSet::new();
    let drawing = match &spec.family {
        Family::Triangulation { n, crossings } => {
            if *n < 3 {
                return Err(GenError::BadParams("a triangulation needs 3 vertices".into()));
            }
            let g = relabel_random(&near_triangulation(*n, 3, &mut r), &mut r);
            plant_crossings(&Drawing::planar(g), *crossings, &mut r, |_| true)?
        }
        Family::Grid { rows, cols } => Drawing::planar(grid(*rows, *cols)?),
        Family::WheelStack { rim, rings } => Drawing::planar(wheel_stack(*rim, *rings)?),
        Family::NearPlanar { rows, cols, crossings, n_vertices } => {
            let d = plant_crossings(&Drawing::planar(grid(*rows, *cols)?), *crossings, &mut r, |d| {
                check_main0(d, &BTreeSet::new(), &ListAssignment::uniform(d.n_original(), 1..=5)).passed()
            })?;
            n_set = plant_n_vertices(&d, *n_vertices, N_N_MIN, &mut r)?;
            d
        }
        Family::FarFours { spine, ears, n_vertices, spacing } => {
            if *spacing < N_N_MIN {
                return Err(GenError::Infeasible(format!("N-vertices at distance {spacing} are closer than {N_N_MIN}")));
            }
            let d = Drawing::planar(spine_with_ears(*spine, *ears, &mut r)?);
            n_set = plant_n_vertices(&d, *n_vertices, *spacing, &mut r)?;
            d
        }
    };
    assign_lists(drawing, n_set, &spec.lists, spec.palette, &mut r)
}

/// Draws lists (and a precolored path) for `drawing` per `profile`.
pub fn assign_lists(
    drawing: Drawing,
    n_set: BTreeSet<Vertex>,
    profile: &ListProfile,
    palette: u32,
    r: &mut GenRng,
) -> Result<Instance, GenError> {
    let n = drawing.n_original();
    let need = match profile {
        ListProfile::Uniform { size } => *size,
        _ => 5,
    };
    if (palette as usize) < need {
        return Err(GenError::BadParams(format!("palette of {palette} colors is smaller than lists of {need}")));
    }
    let bad = |e: &dyn std::fmt::Display| GenError::BadParams(e.to_string());
    match profile {
        ListProfile::Uniform { size } => {
            let lists = ListAssignment::new(
                (0..n).map(|v| random_list(palette, if n_set.contains(&v) { size - 1 } else { *size }, r)).collect(),
            );
            Instance::new(drawing, Walk::default(), n_set, BTreeSet::new(), lists).map_err(|e| bad(&e))
        }
        ListProfile::Thomassen | ListProfile::PrecoloredPath { .. } => {
            if drawing.crossing_count() > 0 {
                return Err(GenError::BadParams("precolored profiles need a plane graph".into()));
            }
            let g = drawing.base().clone();
            let length = match profile {
                ListProfile::PrecoloredPath { length } => *length,
                _ => 1,
            };
            let p = random_outer_path(&g, length, r)
                .ok_or_else(|| GenError::Infeasible(format!("no outer path with {length} edges")))?;
            for _ in 0..200 {
                let lists = match profile {
                    ListProfile::Thomassen => thomassen_lists(&g, &p, palette, r),
                    _ => basic_lists(&g, &p, palette, r),
                };
                let ok = match profile {
                    ListProfile::Thomassen => check_thomassen(&g, (p[0], p[1]), &lists).map(|c| c.passed()),
                    _ => check_basic(&g, &Walk::path(p.clone()), &lists).map(|c| c.passed()),
                }
                .map_err(|e| bad(&e))?;
                if ok {
                    return Instance::new(drawing, Walk::path(p), n_set, BTreeSet::new(), lists).map_err(|e| bad(&e));
                }
            }
            Err(GenError::Infeasible("no list draw met the hypotheses".into()))
        }
    }
}

// Rotation-system editing.

fn inner_faces(rot: &[Vec<Vertex>], outer: Dart) -> Vec<Vec<Dart>> {
    let skip: HashSet<Dart> = trace_from(rot, outer).into_iter().collect();
    all_faces(rot).into_iter().filter(|f| !skip.contains(&f[0])).collect()
}

fn all_faces(rot: &[Vec<Vertex>]) -> Vec<Vec<Dart>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (v, r) in rot.iter().enumerate() {
        for &w in r {
            if seen.contains(&(v, w)) {
                continue;
            }
            let f = trace_from(rot, (v, w));
            seen.extend(f.iter().copied());
            out.push(f);
        }
    }
    out
}

/// Adds the edge `s`-`t` through the face walked from `start`. Both ends
/// must occur exactly once on that face.
fn add_edge_in_face(rot: &mut [Vec<Vertex>], start: Dart, s: Vertex, t: Vertex) -> bool {
    if rot[s].contains(&t) {
        return false;
    }
    let f = trace_from(rot, start);
    let arrival = |x: Vertex| {
        let hits: Vec<Vertex> = f.iter().filter(|d| d.1 == x).map(|d| d.0).collect();
        (hits.len() == 1).then(|| hits[0])
    };
    let (Some(ps), Some(pt)) = (arrival(s), arrival(t)) else { return false };
    insert_before(&mut rot[s], ps, t);
    insert_before(&mut rot[t], pt, s);
    true
}

/// Adds a vertex inside the face walked from `start`, joined to every
/// vertex on it. Returns the new vertex.
fn stack_vertex(rot: &mut Vec<Vec<Vertex>>, start: Dart) -> Vertex {
    let f = trace_from(rot, start);
    let z = rot.len();
    for &(p, s) in &f {
        insert_before(&mut rot[s], p, z);
    }
    rot.push(f.iter().map(|d| d.0).collect());
    z
}

/// Replaces the edge `a`-`b` between two inner triangles by the other
/// diagonal of their union.
fn flip(rot: &mut [Vec<Vertex>], a: Vertex, b: Vertex, outer: &HashSet<Dart>) -> bool {
    if outer.contains(&(a, b)) || outer.contains(&(b, a)) {
        return false;
    }
    let f1 = trace_from(rot, (a, b));
    let f2 = trace_from(rot, (b, a));
    if f1.len() != 3 || f2.len() != 3 {
        return false;
    }
    let (c, d) = (f1[1].1, f2[1].1);
    if c == d || rot[c].contains(&d) {
        return false;
    }
    rot[a].retain(|&x| x != b);
    rot[b].retain(|&x| x != a);
    add_edge_in_face(rot, (b, c), c, d)
}

fn polygon(k: usize) -> Vec<Vec<Vertex>> {
    (0..k).map(|i| vec![(i + 1) % k, (i + k - 1) % k]).collect()
}

/// A random near-triangulation: outer face a `k`-cycle, inner faces
/// triangles, `n - k` inner vertices. Built by triangulating the polygon,
/// stacking vertices into random inner faces and flipping random edges.
pub fn near_triangulation(n: usize, k: usize, r: &mut GenRng) -> PlaneGraph {
    assert!(k >= 3 && n >= k, "need 3 <= k <= n");
    let outer = (1, 0);
    let mut rot = polygon(k);
    while let Some(f) = inner_faces(&rot, outer).into_iter().find(|f| f.len() > 3) {
        let vs: Vec<Vertex> = f.iter().map(|d| d.0).collect();
        let m = vs.len();
        let mut pairs: Vec<(usize, usize)> =
            (0..m).flat_map(|i| (i + 2..m).map(move |j| (i, j))).filter(|&(i, j)| !(i == 0 && j == m - 1)).collect();
        pairs.shuffle(r);
        let added = pairs.into_iter().any(|(i, j)| add_edge_in_face(&mut rot, f[0], vs[i], vs[j]));
        assert!(added, "a polygon face always has a free diagonal");
    }
    for _ in k..n {
        let faces = inner_faces(&rot, outer);
        let f = &faces[r.gen_range(0..faces.len())];
        stack_vertex(&mut rot, f[0]);
    }
    let outer_darts: HashSet<Dart> = trace_from(&rot, outer).into_iter().collect();
    for _ in 0..2 * n {
        let a = r.gen_range(0..rot.len());
        let b = rot[a][r.gen_range(0..rot[a].len())];
        flip(&mut rot, a, b, &outer_darts);
    }
    PlaneGraph::new(rot, &[outer]).expect("generator keeps a valid embedding")
}

/// Renames vertices by `perm` (`v` becomes `perm[v]`).
pub fn relabel(g: &PlaneGraph, perm: &[Vertex]) -> PlaneGraph {
    let mut rot = vec![Vec::new(); g.n()];
    for v in 0..g.n() {
        rot[perm[v]] = g.rotation(v).iter().map(|&w| perm[w]).collect();
    }
    let outer: Vec<Dart> = g.outer_darts().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    PlaneGraph::new(rot, &outer).expect("relabeling keeps the embedding")
}

pub fn relabel_random(g: &PlaneGraph, r: &mut GenRng) -> PlaneGraph {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(r);
    relabel(g, &perm)
}

/// Deletes each edge off the outer face with probability `drop`, keeping
/// the graph connected and every degree at least 2.
pub fn sparsify(g: &PlaneGraph, drop: f64, r: &mut GenRng) -> PlaneGraph {
    let outer: HashSet<Dart> = g.outer_faces().iter().flat_map(|f| f.darts.clone()).collect();
    let mut rot = g.rotations().to_vec();
    let mut edges = g.edges();
    edges.shuffle(r);
    for (u, v) in edges {
        if outer.contains(&(u, v)) || outer.contains(&(v, u)) || !r.gen_bool(drop) {
            continue;
        }
        if rot[u].len() <= 2 || rot[v].len() <= 2 {
            continue;
        }
        let before = rot.clone();
        rot[u].retain(|&x| x != v);
        rot[v].retain(|&x| x != u);
        if components_of(&rot, |_| true).len() != 1 {
            rot = before;
        }
    }
    PlaneGraph::new(rot, g.outer_darts()).expect("deleting inner edges keeps the outer face")
}

/// Straight-line plane graph: rotations sorted by angle, outer face the one
/// traced clockwise.
pub fn from_coordinates(points: &[(f64, f64)], edges: &[(Vertex, Vertex)]) -> PlaneGraph {
    let n = points.len();
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        rot[u].push(v);
        rot[v].push(u);
    }
    for (v, r) in rot.iter_mut().enumerate() {
        let (x0, y0) = points[v];
        r.sort_by(|&a, &b| {
            let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
            let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
            ta.total_cmp(&tb)
        });
    }
    let area = |f: &[Dart]| -> f64 {
        f.iter().map(|&(a, b)| points[a].0 * points[b].1 - points[b].0 * points[a].1).sum::<f64>()
    };
    // Per component the outer face has the least signed area (zero for a tree).
    let comps = components_of(&rot, |_| true);
    let mut comp = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    let mut best: Vec<Option<(f64, Dart)>> = vec![None; comps.len()];
    for f in all_faces(&rot) {
        let (a, d) = (area(&f), *f.iter().min().unwrap());
        let slot = &mut best[comp[d.0]];
        if slot.map_or(true, |(b, _)| a < b) {
            *slot = Some((a, d));
        }
    }
    let outer: Vec<Dart> = best.into_iter().flatten().map(|(_, d)| d).collect();
    PlaneGraph::new(rot, &outer).expect("straight-line drawing is plane")
}

pub fn grid(rows: usize, cols: usize) -> Result<PlaneGraph, GenError> {
    if rows < 2 || cols < 2 {
        return Err(GenError::BadParams("grid needs at least 2 rows and 2 columns".into()));
    }
    let id = |i: usize, j: usize| i * cols + j;
    let points: Vec<(f64, f64)> = (0..rows * cols).map(|v| ((v % cols) as f64, -((v / cols) as f64))).collect();
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Ok(from_coordinates(&points, &edges))
}

/// Rim `0..k-1`, hub `k`.
pub fn wheel(k: usize) -> PlaneGraph {
    assert!(k >= 3);
    let mut points: Vec<(f64, f64)> = (0..k).map(|j| polar(1.0, TAU * j as f64 / k as f64)).collect();
    points.push((0.0, 0.0));
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|j| (j, (j + 1) % k)).collect();
    edges.extend((0..k).map(|j| (j, k)));
    from_coordinates(&points, &edges)
}

fn polar(radius: f64, angle: f64) -> (f64, f64) {
    (radius * angle.cos(), radius * angle.sin())
}

pub fn wheel_stack(rim: usize, rings: usize) -> Result<PlaneGraph, GenError> {
    if rim < 3 || rings == 0 {
        return Err(GenError::BadParams("wheel stack needs rim >= 3 and at least one ring".into()));
    }
    let id = |i: usize, j: usize| 1 + i * rim + (j % rim);
    let mut points = vec![(0.0, 0.0)];
    for i in 0..rings {
        for j in 0..rim {
            let step = TAU / rim as f64;
            points.push(polar((i + 1) as f64, step * j as f64 + step * 0.5 * i as f64));
        }
    }
    let mut edges = Vec::new();
    for j in 0..rim {
        edges.push((0, id(0, j)));
    }
    for i in 0..rings {
        for j in 0..rim {
            edges.push((id(i, j), id(i, j + 1)));
            if i + 1 < rings {
                edges.push((id(i, j), id(i + 1, j)));
                edges.push((id(i, j + 1), id(i + 1, j)));
            }
        }
    }
    Ok(from_coordinates(&points, &edges))
}

/// Path `0..=spine` with `ears` triangles hung on distinct edges, each on a
/// random side.
pub fn spine_with_ears(spine: usize, ears: usize, r: &mut GenRng) -> Result<PlaneGraph, GenError> {
    if spine == 0 || ears > 2 * spine {
        return Err(GenError::BadParams(format!("{ears} ears do not fit a spine of length {spine}")));
    }
    let mut points: Vec<(f64, f64)> = (0..=spine).map(|i| (i as f64, 0.0)).collect();
    let mut edges: Vec<(Vertex, Vertex)> = (0..spine).map(|i| (i, i + 1)).collect();
    let slots = index::sample(r, 2 * spine, ears).into_vec();
    for s in slots {
        let (i, up) = (s / 2, s % 2 == 0);
        let z = points.len();
        points.push((i as f64 + 0.5, if up { 0.8 } else { -0.8 }));
        edges.push((i, z));
        edges.push((i + 1, z));
    }
    Ok(from_coordinates(&points, &edges))
}

pub fn complete_adjacency(n: usize) -> Vec<Vec<Vertex>> {
    (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect()
}

/// K5 drawn with one crossing: the wheel with a 4-rim, the edge 0-2 routed
/// around the outside and 1-3 crossing a spoke.
pub fn k5_one_crossing() -> Drawing {
    let w = wheel(4);
    let mut rot = w.rotations().to_vec();
    let outer = w.outer_darts()[0];
    assert!(add_edge_in_face(&mut rot, outer, 0, 2));
    let g = PlaneGraph::new(rot, &[outer]).expect("outer edge keeps the embedding plane");
    let d = Drawing::planar(g);
    let f = d.base().face_of((0, 4)).vertices();
    let (c, e) = if f.contains(&1) { (1, 3) } else { (3, 1) };
    d.with_crossing(0, 4, c, e).expect("spoke 0-4 separates 1 and 3")
}

/// Every way to cross an existing edge of `d`: an uncrossed edge between
/// two triangles crossed by the other diagonal, or a 4-face given both
/// diagonals.
fn crossing_candidates(d: &Drawing) -> Vec<Drawing> {
    let n0 = d.n_original();
    let base = d.base();
    let mut out = Vec::new();
    for (a, b) in base.edges() {
        if a >= n0 || b >= n0 {
            continue;
        }
        let f1 = base.face_of((a, b)).vertices();
        let f2 = base.face_of((b, a)).vertices();
        if f1.len() == 3 && f2.len() == 3 {
            let c = f1.iter().copied().find(|x| *x != a && *x != b).unwrap();
            let e = f2.iter().copied().find(|x| *x != a && *x != b).unwrap();
            if c < n0 && e < n0 {
                if let Ok(x) = d.with_crossing(a, b, c, e) {
                    out.push(x);
                }
            }
        }
    }
    let outer: HashSet<Dart> = base.outer_faces().iter().map(|f| f.id()).collect();
    for f in base.trace_faces() {
        let vs = f.vertices();
        if vs.len() != 4 || vs.iter().any(|&v| v >= n0) || outer.contains(&f.id()) {
            continue;
        }
        let mut rot = base.rotations().to_vec();
        if !add_edge_in_face(&mut rot, f.id(), vs[0], vs[2]) {
            continue;
        }
        let Ok(g) = PlaneGraph::new(rot, base.outer_darts()) else { continue };
        let Ok(with_diag) = Drawing::from_planarization(g, n0, d.crossings().to_vec()) else { continue };
        for (c, e) in [(vs[1], vs[3]), (vs[3], vs[1])] {
            if let Ok(x) = with_diag.with_crossing(vs[0], vs[2], c, e) {
                out.push(x);
                break;
            }
        }
    }
    out
}

/// Plants `count` crossings one at a time, each chosen at random among the
/// candidates whose result satisfies `accept`.
pub fn plant_crossings(
    d: &Drawing,
    count: usize,
    r: &mut GenRng,
    accept: impl Fn(&Drawing) -> bool,
) -> Result<Drawing, GenError> {
    let mut d = d.clone();
    for k in 0..count {
        let mut cands = crossing_candidates(&d);
        cands.shuffle(r);
        d = cands
            .into_iter()
            .find(|x| accept(x))
            .ok_or_else(|| GenError::Infeasible(format!("no room for crossing {} of {count}", k + 1)))?;
    }
    Ok(d)
}

/// Picks `count` vertices pairwise at distance >= `spacing`, and at
/// distance >= 13 from every crossing. Greedy farthest-first, restarted from
/// each candidate in random order until one run succeeds.
pub fn plant_n_vertices(
    d: &Drawing,
    count: usize,
    spacing: usize,
    r: &mut GenRng,
) -> Result<BTreeSet<Vertex>, GenError> {
    let adj = d.original_adjacency();
    let n = d.n_original();
    let dist: Vec<Vec<usize>> = (0..n).map(|v| bfs_from(&adj, v)).collect();
    let crossing_vs: BTreeSet<Vertex> = d.crossings().iter().flat_map(|c| c.endpoints()).collect();
    let mut cands: Vec<Vertex> =
        (0..n).filter(|&v| crossing_vs.iter().all(|&c| dist[v][c] >= CROSSING_N_MIN)).collect();
    cands.shuffle(r);
    if count == 0 {
        return Ok(BTreeSet::new());
    }
    let mut best = 0;
    for &first in &cands {
        let mut chosen = vec![first];
        while chosen.len() < count {
            let pick = cands
                .iter()
                .copied()
                .filter(|v| !chosen.contains(v))
                .map(|v| (chosen.iter().map(|&c| dist[v][c]).min().unwrap(), v))
                .filter(|&(m, _)| m >= spacing)
                .max_by_key(|&(m, _)| m);
            match pick {
                Some((_, v)) => chosen.push(v),
                None => break,
            }
        }
        if chosen.len() == count {
            return Ok(chosen.into_iter().collect());
        }
        best = best.max(chosen.len());
    }
    Err(GenError::Infeasible(format!("only {best} of {count} N-vertices fit at pairwise distance {spacing}")))
}

/// A `k`-subset of `1..=palette`.
pub fn random_list(palette: u32, k: usize, r: &mut GenRng) -> ColorSet {
    index::sample(r, palette as usize, k).into_iter().map(|i| i as Color + 1).collect()
}

/// A path of `length` edges along some outer face walk.
pub fn random_outer_path(g: &PlaneGraph, length: usize, r: &mut GenRng) -> Option<Vec<Vertex>> {
    let faces = g.outer_faces();
    let mut starts: Vec<(usize, usize)> =
        faces.iter().enumerate().flat_map(|(i, f)| (0..f.len()).map(move |j| (i, j))).collect();
    starts.shuffle(r);
    if g.n() == 1 && length == 0 {
        return Some(vec![0]);
    }
    starts.into_iter().find_map(|(i, j)| {
        let vs = faces[i].vertices();
        let p: Vec<Vertex> = (0..=length).map(|s| vs[(j + s) % vs.len()]).collect();
        let distinct: BTreeSet<_> = p.iter().collect();
        (distinct.len() == p.len()).then_some(p)
    })
}

fn precolor_path(p: &[Vertex], palette: u32, r: &mut GenRng) -> Vec<Color> {
    index::sample(r, palette as usize, p.len()).into_iter().map(|i| i as Color + 1).collect()
}

/// Precolored `xy`, 3-lists on the outer face, 5-lists inside.
pub fn thomassen_lists(g: &PlaneGraph, p: &[Vertex], palette: u32, r: &mut GenRng) -> ListAssignment {
    let outer = g.outer_vertices();
    let colors = precolor_path(p, palette, r);
    ListAssignment::new(
        (0..g.n())
            .map(|v| match p.iter().position(|&x| x == v) {
                Some(i) => [colors[i]].into(),
                None => random_list(palette, if outer.contains(&v) { 3 } else { 5 }, r),
            })
            .collect(),
    )
}

/// Precolored path, 3-lists on a random independent set of the other outer
/// vertices, 4-lists on the rest of the outer face, 5-lists inside.
pub fn basic_lists(g: &PlaneGraph, p: &[Vertex], palette: u32, r: &mut GenRng) -> ListAssignment {
    let outer = g.outer_vertices();
    let colors = precolor_path(p, palette, r);
    let mut sizes = vec![5; g.n()];
    let mut order: Vec<Vertex> = outer.iter().copied().filter(|v| !p.contains(v)).collect();
    order.shuffle(r);
    for v in order {
        let free = g.rotation(v).iter().all(|&w| sizes[w] != 3);
        sizes[v] = if free && r.gen_bool(0.7) { 3 } else { 4 };
    }
    ListAssignment::new(
        (0..g.n())
            .map(|v| match p.iter().position(|&x| x == v) {
                Some(i) => [colors[i]].into(),
                None => random_list(palette, sizes[v], r),
            })
            .collect(),
    )
}

/// Bounded enumeration of instances for the precolored-path theorem: every
/// order `n` in `4..=max_n`, every outer length, `shapes` embeddings per
/// pair (full and thinned), every start and length (0 to 2) of the path on
/// the outer cycle and `draws` list draws. Only instances meeting the hypotheses are kept.
pub fn precolored_path_corpus(max_n: usize, shapes: u64, draws: u64, palette: u32, seed: u64) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        for k in 3..=n {
            for shape in 0..shapes {
                let mut r = rng(seed ^ ((n as u64) << 40) ^ ((k as u64) << 32) ^ shape);
                let mut g = near_triangulation(n, k, &mut r);
                if shape % 2 == 1 {
                    g = sparsify(&g, 0.4, &mut r);
                }
                g = relabel_random(&g, &mut r);
                let f = g.outer_face().expect("connected").vertices();
                for (start, len) in (0..f.len()).flat_map(|s| (0..3).map(move |l| (s, l))) {
                    let p: Vec<Vertex> = (0..=len).map(|s| f[(start + s) % f.len()]).collect();
                    for _ in 0..draws {
                        let lists = basic_lists(&g, &p, palette, &mut r);
                        let walk = Walk::path(p.clone());
                        if check_basic(&g, &walk, &lists).map(|c| c.passed()).unwrap_or(false) {
                            if let Ok(inst) = Instance::planar(g.clone(), walk, lists) {
                                out.push(inst);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize_instance;
    use crate::validity::{check_theorem, AssumeColorable, TheoremId};

    #[test]
    fn triangulation_has_3n_minus_6_edges() {
        for seed in 0..20 {
            let g = near_triangulation(20, 3, &mut rng(seed));
            assert_eq!(g.edge_count(), 3 * 20 - 6);
            assert!(g.trace_faces().iter().all(|f| f.len() == 3));
        }
    }

    #[test]
    fn near_triangulation_keeps_outer_cycle() {
        let g = near_triangulation(12, 7, &mut rng(3));
        assert_eq!(g.outer_face().unwrap().len(), 7);
        assert_eq!(g.edge_count(), 2 * 12 + 12 - 7 - 3);
    }

    #[test]
    fn geometric_families_are_plane() {
        let g = grid(4, 5).unwrap();
        assert_eq!((g.n(), g.edge_count()), (20, 31));
        assert_eq!(g.outer_face().unwrap().len(), 14);
        let w = wheel_stack(6, 3).unwrap();
        assert_eq!(w.outer_face().unwrap().len(), 6);
        assert!(w.trace_faces().iter().filter(|f| f.len() != 6).all(|f| f.len() == 3));
        let s = spine_with_ears(11, 2, &mut rng(1)).unwrap();
        assert_eq!(s.n(), 14);
    }

    #[test]
    fn k5_drawing() {
        let d = k5_one_crossing();
        assert_eq!(d.crossing_count(), 1);
        assert!(d.original_adjacency().iter().all(|r| r.len() == 4));
    }

    #[test]
    fn same_spec_same_bytes() {
        let spec = GenSpec {
            family: Family::Triangulation { n: 15, crossings: 1 },
            lists: ListProfile::Uniform { size: 5 },
            palette: 7,
            seed: 42,
        };
        let a = serialize_instance(&gen_instance(&spec).unwrap());
        let b = serialize_instance(&gen_instance(&spec).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn near_planar_grid_meets_distance_hypotheses() {
        let spec = GenSpec {
            family: Family::NearPlanar { rows: 20, cols: 20, crossings: 2, n_vertices: 1 },
            lists: ListProfile::Uniform { size: 5 },
            palette: 6,
            seed: 7,
        };
        let inst = gen_instance(&spec).unwrap();
        assert_eq!(inst.drawing.crossing_count(), 2);
        let r = check_theorem(&inst, TheoremId::FarCrossings, &AssumeColorable).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn close_n_vertices_are_refused() {
        let spec = GenSpec {
            family: Family::FarFours { spine: 12, ears: 1, n_vertices: 2, spacing: 10 },
            lists: ListProfile::Uniform { size: 5 },
            palette: 6,
            seed: 0,
        };
        assert!(matches!(gen_instance(&spec), Err(GenError::Infeasible(_))));
    }

    #[test]
    fn profiles_pass_their_checks() {
        for seed in 0..10 {
            for (lists, theorem) in [
                (ListProfile::Thomassen, TheoremId::Thomassen),
                (ListProfile::PrecoloredPath { length: 2 }, TheoremId::PrecoloredPath),
            ] {
                let spec = GenSpec { family: Family::Triangulation { n: 12, crossings: 0 }, lists, palette: 6, seed };
                let inst = gen_instance(&spec).unwrap();
                assert!(check_theorem(&inst, theorem, &AssumeColorable).unwrap().passed());
            }
        }
    }
}
