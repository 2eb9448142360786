//! Coloring a plane graph with a precolored outer path of length at most two.
//!
//! The recursion follows the reduction order of the minimal-counterexample
//! argument: low-degree pruning, components, cut vertices, separating
//! triangles and 4-cycles, chords, 2-chords, short outer faces and finally
//! the selection of `X` on the outer face. Every sub-instance is re-checked
//! against the hypotheses on entry, so a broken reduction surfaces as an
//! internal error naming the sub-instance rather than as a wrong coloring.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::embed::{CycleSides, Embedding};
use crate::lists::{verify_coloring, Color, Coloring, ListAssignment};
use crate::oracle::solve_exact;
use crate::plane::{PlaneGraph, Vertex, Walk};
use crate::validity::{basic_report, check_basic, BasicView, ValidityReport};

use super::select::{select_x, OuterContext, XRule};
use super::{chord_sides, component_pieces, cut_pieces, outer_cycle, side_of, with_stack, Colors, SolveError, Work};

/// One reduction applied by [`color_basic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    /// Vertices with fewer neighbors than colors, colored last.
    Prune { removed: Vec<Vertex> },
    Components { count: usize },
    CutVertex { vertex: Vertex },
    /// At most two vertices, colored greedily.
    Small { vertices: Vec<Vertex> },
    SeparatingTriangle { cycle: [Vertex; 3] },
    SeparatingFourCycle { cycle: [Vertex; 4] },
    Chord { u: Vertex, v: Vertex },
    /// A chord at the middle of the path; `v` is colored first.
    MiddleChord { u: Vertex, v: Vertex, color: Color },
    TwoChord { a: Vertex, m: Vertex, b: Vertex },
    ExtendPath { vertex: Vertex, color: Color },
    CommonNeighbor { vertex: Vertex },
    OuterTriangle { removed: Vertex },
    OuterSquare { vertex: Vertex, color: Color },
    OuterPentagon { coloring: Vec<(Vertex, Color)> },
    Select { rule: XRule, x: Vec<Vertex>, trimmed: bool },
    /// Exhaustive search on a piece of at most four vertices.
    Brute { vertices: Vec<Vertex> },
}

/// The reductions applied, in the order they were taken.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub steps: Vec<Step>,
}

impl Trace {
    /// Selection rules used, in order.
    pub fn rules(&self) -> Vec<XRule> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                Step::Select { rule, .. } => Some(*rule),
                _ => None,
            })
            .collect()
    }

    pub fn count(&self, pred: impl Fn(&Step) -> bool) -> usize {
        self.steps.iter().filter(|s| pred(s)).count()
    }
}

/// Colors `g` from `lists` extending the precoloring of the outer path `p`.
pub fn color_basic(g: &PlaneGraph, p: &Walk, lists: &ListAssignment) -> Result<Coloring, SolveError> {
    color_basic_traced(g, p, lists).map(|(c, _)| c)
}

/// [`color_basic`] together with the reductions it applied.
pub fn color_basic_traced(g: &PlaneGraph, p: &Walk, lists: &ListAssignment) -> Result<(Coloring, Trace), SolveError> {
    let report = check_basic(g, p, lists)?;
    if !report.passed() {
        return Err(SolveError::HypothesisViolation(report));
    }
    let work = Work { emb: Embedding::from_plane(g), lists: lists.as_slice().to_vec(), p: p.vertices.clone() };
    let (colors, trace) = with_stack(|| {
        let mut trace = Trace::default();
        solve(work, &mut trace).map(|c| (c, trace))
    })?;
    let coloring = Coloring((0..g.n()).map(|v| colors[&v]).collect());
    verify_coloring(&g.adjacency(), lists, &coloring).map_err(|d| SolveError::Internal {
        detail: format!("returned coloring is not proper: {d}"),
        reproducer: String::new(),
    })?;
    Ok((coloring, trace))
}

fn report(w: &Work) -> ValidityReport {
    let outer = w.emb.outer_vertices();
    basic_report(&BasicView {
        vertices: w.emb.vertices().collect(),
        neighbors: w.emb.rotations(),
        outer: &outer,
        p: &w.p,
        lists: &w.lists,
    })
}

fn recurse(parent: usize, w: Work, trace: &mut Trace) -> Result<Colors, SolveError> {
    if w.size() >= parent {
        return Err(w.internal(format!("recursion did not shrink the instance ({} >= {parent})", w.size())));
    }
    solve(w, trace)
}

fn solve(w: Work, trace: &mut Trace) -> Result<Colors, SolveError> {
    let r = report(&w);
    if !r.passed() {
        let bad: Vec<_> = r.failures().map(|c| c.condition.label()).collect();
        return Err(w.internal(format!("sub-instance violates {bad:?}")));
    }
    let out = reduce(w.clone(), trace)?;
    w.verify(&out)?;
    Ok(out)
}

fn reduce(mut w: Work, trace: &mut Trace) -> Result<Colors, SolveError> {
    let size = w.size();
    let n = w.emb.vertex_count();
    if n == 0 {
        return Ok(Colors::new());
    }

    // Vertices with more colors than neighbors.
    let mut pruned = w.clone();
    let mut removed = Vec::new();
    loop {
        let low: Vec<Vertex> = pruned
            .emb
            .vertices()
            .filter(|&v| !w.p.contains(&v) && pruned.emb.degree(v) < w.lists[v].len())
            .collect();
        if low.is_empty() {
            break;
        }
        for v in low {
            if pruned.emb.degree(v) < w.lists[v].len() {
                pruned.emb.delete_vertex(v);
                removed.push(v);
            }
        }
    }
    if !removed.is_empty() {
        trace.steps.push(Step::Prune { removed: removed.clone() });
        let mut out = recurse(size, pruned, trace)?;
        for &v in removed.iter().rev() {
            let c = w.greedy(v, w.emb.neighbors(v), &out).ok_or_else(|| w.internal(format!("pruned {v} has no color")))?;
            out.insert(v, c);
        }
        return Ok(out);
    }

    if w.emb.components().len() > 1 {
        let pieces = component_pieces(&w);
        trace.steps.push(Step::Components { count: pieces.len() });
        let mut out = Colors::new();
        for piece in pieces {
            out.extend(recurse(size, piece, trace)?);
        }
        return Ok(out);
    }

    if n <= 2 {
        let vertices: Vec<Vertex> = w.emb.vertices().collect();
        trace.steps.push(Step::Small { vertices: vertices.clone() });
        let mut out = Colors::new();
        let order = w.p.iter().copied().chain(vertices.into_iter().filter(|v| !w.p.contains(v)));
        for v in order {
            let c = w.greedy(v, w.emb.neighbors(v), &out).ok_or_else(|| w.internal("no color for a tiny piece"))?;
            out.insert(v, c);
        }
        return Ok(out);
    }

    if let Some(c) = w.emb.cut_vertex() {
        trace.steps.push(Step::CutVertex { vertex: c });
        return split_at_cut(&w, c, size, trace);
    }

    if let Some((cycle, sides)) = separating_cycle(&w, 3)? {
        trace.steps.push(Step::SeparatingTriangle { cycle: [cycle[0], cycle[1], cycle[2]] });
        let ext = w.restricted(|e| sides.keep_exterior(e), w.p.clone());
        let mut out = recurse(size, ext, trace)?;
        let mut int = w.restricted(|e| sides.keep_interior(e), cycle.clone());
        for &v in &cycle {
            int.precolor(v, out[&v]);
        }
        out.extend(recurse(size, int, trace)?);
        return Ok(out);
    }

    if let Some((cycle, sides)) = separating_cycle(&w, 4)? {
        trace.steps.push(Step::SeparatingFourCycle { cycle: [cycle[0], cycle[1], cycle[2], cycle[3]] });
        let ext = w.restricted(|e| sides.keep_exterior(e), w.p.clone());
        let mut out = recurse(size, ext, trace)?;
        let k1 = cycle[0];
        let mut int = w.restricted(|e| sides.keep_interior(e), cycle[1..].to_vec());
        for &v in &cycle[1..] {
            int.precolor(v, out[&v]);
        }
        let c1 = out[&k1];
        for &z in w.emb.neighbors(k1) {
            if sides.interior_vertices.contains(&z) {
                int.lists[z].remove(&c1);
            }
        }
        int.emb.delete_vertex(k1);
        out.extend(recurse(size, int, trace)?);
        return Ok(out);
    }

    let f = outer_cycle(&w.emb, w.emb.vertices().next().unwrap());
    let k = f.len();
    let pos: BTreeMap<Vertex, usize> = f.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if pos.len() != k {
        return Err(w.internal("outer face of a 2-connected piece is not a cycle"));
    }

    // Chords of the outer cycle.
    for i in 0..k {
        for &v in w.emb.neighbors(f[i]) {
            let Some(&j) = pos.get(&v) else { continue };
            if j <= i + 1 || (i == 0 && j == k - 1) {
                continue;
            }
            return split_at_chord(&w, &f, i, j, size, trace);
        }
    }

    // 2-chords whose far side is more than a face or two.
    for m in w.emb.vertices().filter(|v| !pos.contains_key(v)) {
        let on_f: Vec<Vertex> = w.emb.neighbors(m).iter().copied().filter(|v| pos.contains_key(v)).collect();
        for (x, &a0) in on_f.iter().enumerate() {
            for &b0 in &on_f[x + 1..] {
                if w.emb.has_edge(a0, b0) {
                    continue;
                }
                let (i, j) = (pos[&a0].min(pos[&b0]), pos[&a0].max(pos[&b0]));
                let (a, b) = (f[i], f[j]);
                let c1: Vec<Vertex> = f[i..=j].iter().copied().chain([m]).collect();
                let c2: Vec<Vertex> = f[j..].iter().chain(&f[..=i]).copied().chain([m]).collect();
                let s1 = side_of(&w, &c1)?;
                let s2 = side_of(&w, &c2)?;
                let holds_p = |s: &Work| w.p.iter().all(|v| s.emb.contains(*v));
                let order = if holds_p(&s1) && !trivial_side(&s2, a, m, b) {
                    Some((s1, s2))
                } else if holds_p(&s2) && !trivial_side(&s1, a, m, b) {
                    Some((s2, s1))
                } else {
                    None
                };
                if let Some((mut first, mut second)) = order {
                    trace.steps.push(Step::TwoChord { a, m, b });
                    first.p = w.p.clone();
                    let mut out = recurse(size, first, trace)?;
                    for v in [a, m, b] {
                        second.precolor(v, out[&v]);
                    }
                    second.p = vec![a, m, b];
                    out.extend(recurse(size, second, trace)?);
                    return Ok(out);
                }
            }
        }
    }

    extend_path(&mut w, &f, trace)?;
    let (p0, p1, p2) = (w.p[0], w.p[1], w.p[2]);

    let common = w
        .emb
        .neighbors(p0)
        .iter()
        .copied()
        .find(|&v| v != p1 && v != p2 && w.emb.has_edge(v, p1) && w.emb.has_edge(v, p2));
    if let Some(v) = common {
        trace.steps.push(Step::CommonNeighbor { vertex: v });
        let mut rest = w.clone();
        rest.emb.delete_vertex(v);
        let mut out = recurse(size, rest, trace)?;
        let c = w.greedy(v, w.emb.neighbors(v), &out).ok_or_else(|| w.internal(format!("common neighbor {v} has no color")))?;
        out.insert(v, c);
        return Ok(out);
    }

    match k {
        3 => {
            trace.steps.push(Step::OuterTriangle { removed: p2 });
            let mut rest = w.clone();
            rest.strip_from_neighbors(p2, w.color_of(p2));
            rest.emb.delete_vertex(p2);
            rest.p = vec![p0, p1];
            let mut out = recurse(size, rest, trace)?;
            out.insert(p2, w.color_of(p2));
            Ok(out)
        }
        4 => {
            let v = *f.iter().find(|v| !w.p.contains(v)).unwrap();
            let (a, b) = (w.color_of(p0), w.color_of(p2));
            let c = *w.lists[v]
                .iter()
                .find(|&&c| c != a && c != b)
                .ok_or_else(|| w.internal(format!("outer vertex {v} has no color")))?;
            trace.steps.push(Step::OuterSquare { vertex: v, color: c });
            let mut rest = w.clone();
            rest.strip_from_neighbors(v, c);
            rest.emb.delete_vertex(v);
            let mut out = recurse(size, rest, trace)?;
            out.insert(v, c);
            Ok(out)
        }
        5 => pentagon(&w, &f, size, trace),
        _ => select_step(w, &f, size, trace),
    }
}

fn split_at_cut(w: &Work, c: Vertex, size: usize, trace: &mut Trace) -> Result<Colors, SolveError> {
    let mut pieces = cut_pieces(w, c);
    if w.p.contains(&c) {
        let mut out = Colors::new();
        for mut piece in pieces {
            piece.p = w.p.iter().copied().filter(|v| piece.emb.contains(*v)).collect();
            out.extend(recurse(size, piece, trace)?);
        }
        return Ok(out);
    }
    let first = pieces.iter().position(|p| w.p.iter().all(|v| p.emb.contains(*v))).unwrap_or(0);
    let mut head = pieces.remove(first);
    head.p = w.p.clone();
    let mut out = recurse(size, head, trace)?;
    for mut piece in pieces {
        piece.precolor(c, out[&c]);
        piece.p = vec![c];
        out.extend(recurse(size, piece, trace)?);
    }
    Ok(out)
}

fn split_at_chord(w: &Work, f: &[Vertex], i: usize, j: usize, size: usize, trace: &mut Trace) -> Result<Colors, SolveError> {
    let (u, v) = (f[i], f[j]);
    let (s1, s2) = chord_sides(w, f, i, j)?;
    let holds_p = |s: &Work| w.p.iter().all(|x| s.emb.contains(*x));
    if holds_p(&s1) || holds_p(&s2) {
        trace.steps.push(Step::Chord { u, v });
        let (mut first, mut second) = if holds_p(&s1) { (s1, s2) } else { (s2, s1) };
        first.p = w.p.clone();
        let mut out = recurse(size, first, trace)?;
        second.precolor(u, out[&u]);
        second.precolor(v, out[&v]);
        second.p = vec![u, v];
        out.extend(recurse(size, second, trace)?);
        return Ok(out);
    }

    // The chord leaves the middle vertex of the path; orient it as u-v.
    let (u, v) = if u == w.p[1] { (u, v) } else { (v, u) };
    if u != w.p[1] || w.p.len() != 3 {
        return Err(w.internal(format!("chord {u}-{v} splits the path away from its middle")));
    }
    let (mut g1, mut g2) = (s1, s2);
    let z1 = if g1.emb.contains(w.p[0]) { w.p[0] } else { w.p[2] };
    let z2 = if z1 == w.p[0] { w.p[2] } else { w.p[0] };
    if !g1.emb.contains(z1) {
        std::mem::swap(&mut g1, &mut g2);
    }
    g1.precolor(z1, w.color_of(z1));
    g1.precolor(u, w.color_of(u));
    g1.p = vec![z1, u, v];
    g2.precolor(z2, w.color_of(z2));
    g2.precolor(u, w.color_of(u));
    g2.p = vec![z2, u, v];
    let cu = w.color_of(u);
    for &c in w.lists[v].iter().filter(|&&c| c != cu) {
        let (mut h1, mut h2) = (g1.clone(), g2.clone());
        h1.precolor(v, c);
        h2.precolor(v, c);
        if report(&h1).passed() && report(&h2).passed() {
            trace.steps.push(Step::MiddleChord { u, v, color: c });
            let mut out = recurse(size, h1, trace)?;
            out.extend(recurse(size, h2, trace)?);
            return Ok(out);
        }
    }
    if w.emb.vertex_count() <= 4 {
        trace.steps.push(Step::Brute { vertices: w.emb.vertices().collect() });
        return brute(w);
    }
    Err(w.internal(format!("no color of {v} suits both sides of the chord {u}-{v}")))
}

/// Exact search on a tiny piece.
fn brute(w: &Work) -> Result<Colors, SolveError> {
    let sub = w.emb.to_subgraph();
    let lists = ListAssignment::new(sub.host.iter().map(|&v| w.lists[v].clone()).collect());
    let res = solve_exact(&sub.graph.adjacency(), &lists);
    let coloring = res.coloring.ok_or_else(|| w.internal("piece is not colorable"))?;
    Ok(sub.host.iter().enumerate().map(|(i, &v)| (v, coloring.color(i))).collect())
}

/// A side of a 2-chord `a-m-b` too small to split off: the triangle `amb`,
/// or that triangle plus one 3-list vertex adjacent to all three.
fn trivial_side(s: &Work, a: Vertex, m: Vertex, b: Vertex) -> bool {
    let vs: Vec<Vertex> = s.emb.vertices().collect();
    match vs.len() {
        3 => true,
        4 => {
            let x = *vs.iter().find(|v| ![a, m, b].contains(v)).unwrap();
            s.lists[x].len() == 3 && [a, m, b].iter().all(|&y| s.emb.has_edge(x, y))
        }
        _ => false,
    }
}

fn facial(emb: &Embedding, cycle: &[Vertex]) -> bool {
    let set: BTreeSet<Vertex> = cycle.iter().copied().collect();
    [(cycle[0], cycle[1]), (cycle[1], cycle[0])].into_iter().any(|d| {
        let face = emb.face(d);
        face.len() == cycle.len() && face.iter().all(|e| set.contains(&e.0))
    })
}

/// The least separating triangle (`len == 3`) or 4-cycle (`len == 4`):
/// a non-facial cycle with vertices strictly inside.
fn separating_cycle(w: &Work, len: usize) -> Result<Option<(Vec<Vertex>, CycleSides)>, SolveError> {
    let emb = &w.emb;
    let mut index = None;
    let mut test = |cycle: Vec<Vertex>| -> Result<Option<(Vec<Vertex>, CycleSides)>, SolveError> {
        if facial(emb, &cycle) {
            return Ok(None);
        }
        let fi = index.get_or_insert_with(|| emb.face_index());
        let sides = fi.sides(emb, &cycle).map_err(|e| w.internal(e.to_string()))?;
        Ok((!sides.interior_vertices.is_empty()).then_some((cycle, sides)))
    };
    for a in emb.vertices() {
        for &b in emb.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in emb.neighbors(b).iter().filter(|&&c| c > a && c != a) {
                if len == 3 {
                    if c > b && emb.has_edge(a, c) {
                        if let Some(hit) = test(vec![a, b, c])? {
                            return Ok(Some(hit));
                        }
                    }
                    continue;
                }
                for &d in emb.neighbors(c).iter().filter(|&&d| d > b && d != c) {
                    if emb.has_edge(d, a) {
                        if let Some(hit) = test(vec![a, b, c, d])? {
                            return Ok(Some(hit));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Grows the path to three vertices along the outer cycle `f`.
fn extend_path(w: &mut Work, f: &[Vertex], trace: &mut Trace) -> Result<(), SolveError> {
    if w.p.is_empty() {
        let v = *f.iter().min().unwrap();
        let c = *w.lists[v].iter().next().ok_or_else(|| w.internal(format!("vertex {v} has an empty list")))?;
        trace.steps.push(Step::ExtendPath { vertex: v, color: c });
        w.precolor(v, c);
        w.p.push(v);
    }
    let k = f.len();
    while w.p.len() < 3 {
        let ends = [w.p[0], *w.p.last().unwrap()];
        let mut cands: Vec<(Vertex, bool)> = Vec::new();
        for (front, &e) in [true, false].into_iter().zip(&ends) {
            let i = f.iter().position(|&x| x == e).unwrap();
            for nb in [f[(i + 1) % k], f[(i + k - 1) % k]] {
                if !w.p.contains(&nb) {
                    cands.push((nb, front));
                }
            }
        }
        cands.sort();
        cands.dedup_by_key(|c| c.0);
        let mut done = false;
        'outer: for (v, front) in cands {
            for &c in &w.lists[v].clone() {
                let mut t = w.clone();
                t.precolor(v, c);
                if front {
                    t.p.insert(0, v);
                } else {
                    t.p.push(v);
                }
                if report(&t).passed() {
                    trace.steps.push(Step::ExtendPath { vertex: v, color: c });
                    *w = t;
                    done = true;
                    break 'outer;
                }
            }
        }
        if !done {
            return Err(w.internal("the path cannot be extended"));
        }
    }
    Ok(())
}

/// Outer face `p2 p1 p0 v1 v2`: color `v1`, `v2` and remove them.
fn pentagon(w: &Work, f: &[Vertex], size: usize, trace: &mut Trace) -> Result<Colors, SolveError> {
    let [v1, v2] = walk_from_p0(w, f, 2)[..] else { unreachable!() };
    let (c0, c2) = (w.color_of(w.p[0]), w.color_of(w.p[2]));
    for &a in w.lists[v1].iter().filter(|&&a| a != c0) {
        for &b in w.lists[v2].iter().filter(|&&b| b != c2 && b != a) {
            let mut rest = w.clone();
            rest.strip_from_neighbors(v1, a);
            rest.strip_from_neighbors(v2, b);
            rest.emb.delete_vertex(v1);
            rest.emb.delete_vertex(v2);
            if report(&rest).passed() {
                trace.steps.push(Step::OuterPentagon { coloring: vec![(v1, a), (v2, b)] });
                let mut out = recurse(size, rest, trace)?;
                out.insert(v1, a);
                out.insert(v2, b);
                return Ok(out);
            }
        }
    }
    Err(w.internal("no coloring of the outer pentagon leaves a valid instance"))
}

/// The `count` outer vertices after `p0`, walking away from `p1`.
fn walk_from_p0(w: &Work, f: &[Vertex], count: usize) -> Vec<Vertex> {
    let k = f.len();
    let i0 = f.iter().position(|&x| x == w.p[0]).unwrap();
    let back = f[(i0 + 1) % k] == w.p[1];
    (1..=count).map(|s| if back { f[(i0 + k * count - s) % k] } else { f[(i0 + s) % k] }).collect()
}

fn select_step(mut w: Work, f: &[Vertex], size: usize, trace: &mut Trace) -> Result<Colors, SolveError> {
    let v: [Vertex; 4] = walk_from_p0(&w, f, 4).try_into().unwrap();
    let trimmed = w.lists[v[0]].len() >= 4 && w.lists[v[1]].len() >= 4;
    if trimmed {
        let keep: Vec<Color> = w.lists[v[0]].iter().copied().take(3).collect();
        w.lists[v[0]] = keep.into_iter().collect();
    }
    let common_neighbor = w
        .emb
        .neighbors(v[0])
        .iter()
        .any(|&z| z != v[1] && w.emb.has_edge(z, v[1]) && w.emb.has_edge(z, v[2]));
    let ctx = OuterContext {
        p0: w.p[0],
        v,
        list_p0: w.lists[w.p[0]].clone(),
        lists: v.map(|x| w.lists[x].clone()),
        common_neighbor,
        crossing_adjacent: false,
    };
    let sel = select_x(&ctx).map_err(|e| w.internal(e.to_string()))?;
    trace.steps.push(Step::Select { rule: sel.rule, x: sel.x_set.clone(), trimmed });
    let mut rest = w.clone();
    for (&x, &c) in &sel.coloring {
        rest.strip_from_neighbors(x, c);
    }
    for &x in &sel.x_set {
        rest.emb.delete_vertex(x);
    }
    let mut out = recurse(size, rest, &mut *trace)?;
    out.extend(sel.coloring.iter().map(|(&x, &c)| (x, c)));
    for &x in &sel.x_set {
        if !out.contains_key(&x) {
            let c = w.greedy(x, w.emb.neighbors(x), &out).ok_or_else(|| w.internal(format!("{x} left without a color")))?;
            out.insert(x, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::ColorSet;
    use crate::oracle::solve_exact;
    use crate::plane::fixtures::*;
    use crate::validity::Condition;

    fn cs(v: &[Color]) -> ColorSet {
        v.iter().copied().collect()
    }

    fn solve_ok(g: &PlaneGraph, p: &[Vertex], lists: &ListAssignment) -> Trace {
        let (c, t) = color_basic_traced(g, &Walk::path(p.to_vec()), lists).unwrap();
        assert!(verify_coloring(&g.adjacency(), lists, &c).is_ok());
        t
    }

    #[test]
    fn wheel_with_precolored_path() {
        let g = wheel(6);
        let mut lists = ListAssignment::uniform(7, 1..=5);
        for v in 1..6 {
            lists.set(v, if v % 2 == 0 { cs(&[1, 2, 3, 4]) } else { cs(&[2, 3, 4]) });
        }
        lists.set(0, cs(&[1]));
        lists.set(1, cs(&[2]));
        lists.set(2, cs(&[3]));
        // 3-lists at 3 and 5 only: 1 and 2 are on the path.
        solve_ok(&g, &[0, 1, 2], &lists);
    }

    #[test]
    fn common_neighbor_of_path_is_removed() {
        let g = wheel(6);
        let mut lists = ListAssignment::uniform(7, 1..=5);
        lists.set(0, cs(&[1]));
        lists.set(1, cs(&[2]));
        lists.set(2, cs(&[3]));
        lists.set(5, cs(&[1, 4, 5]));
        lists.set(4, cs(&[1, 2, 3, 4]));
        lists.set(3, cs(&[1, 2, 4, 5]));
        // The hub is adjacent to the whole path; either it goes first or it
        // is pruned for having too few neighbors.
        let t = solve_ok(&g, &[0, 1, 2], &lists);
        assert!(t.count(|s| matches!(s, Step::CommonNeighbor { .. } | Step::Prune { .. })) > 0);
    }

    #[test]
    fn violation_is_reported_not_attempted() {
        let g = k4();
        let lists = ListAssignment::new(vec![cs(&[1]), cs(&[2]), cs(&[3]), cs(&[1, 2, 3])]);
        let err = color_basic(&g, &Walk::path(vec![0, 1, 2]), &lists).unwrap_err();
        assert!(err.failed_conditions().contains(&Condition::CommonNeighbor));
        assert!(!solve_exact(&g.adjacency(), &lists).is_colorable());
    }

    #[test]
    fn k4_with_free_color() {
        let g = k4();
        let lists = ListAssignment::new(vec![cs(&[1]), cs(&[2]), cs(&[3]), cs(&[1, 2, 3, 4, 5])]);
        let t = solve_ok(&g, &[0, 1, 2], &lists);
        assert!(!t.steps.is_empty());
    }

    #[test]
    fn empty_path_on_triangle() {
        let lists = ListAssignment::new(vec![cs(&[1, 2, 3]), cs(&[1, 2, 3, 4]), cs(&[1, 2, 3, 4])]);
        solve_ok(&triangle(), &[], &lists);
    }

    #[test]
    fn path_graph_and_isolated_pieces() {
        let g = path(5);
        let lists = ListAssignment::new((0..5).map(|v| if v % 2 == 0 { cs(&[1, 2, 3]) } else { cs(&[1, 2, 3, 4]) }).collect());
        solve_ok(&g, &[], &lists);
    }
}
