//! Thomassen's recursion: a plane graph with a precolored outer edge `xy`,
//! 3-lists on the rest of the outer face and 5-lists inside is colorable.
//!
//! Disconnected graphs and cut vertices are split. A chord of the outer
//! cycle splits the graph into two sides; the side holding `xy` is colored
//! first. Otherwise the outer neighbor `v` of `x` (away from `y`) reserves
//! two colors: they are removed from its inner neighbors, `G - v` is colored,
//! and `v` takes whichever reserved color its other outer neighbor lacks.

use crate::embed::Embedding;
use crate::lists::{verify_coloring, Color, Coloring, ListAssignment};
use crate::plane::{PlaneGraph, Vertex};
use crate::validity::{basic_report, check_thomassen, BasicView, Condition};

use super::{chord_sides, component_pieces, cut_pieces, outer_cycle, with_stack, Colors, SolveError, Work};

/// Colors `g` from `lists` with the outer edge `xy` precolored.
pub fn color_thomassen(g: &PlaneGraph, lists: &ListAssignment, xy: (Vertex, Vertex)) -> Result<Coloring, SolveError> {
    let report = check_thomassen(g, xy, lists)?;
    if !report.passed() {
        return Err(SolveError::HypothesisViolation(report));
    }
    let work = Work { emb: Embedding::from_plane(g), lists: lists.as_slice().to_vec(), p: vec![xy.0, xy.1] };
    let colors = with_stack(|| solve(work))?;
    let coloring = Coloring((0..g.n()).map(|v| colors[&v]).collect());
    verify_coloring(&g.adjacency(), lists, &coloring).map_err(|d| SolveError::Internal {
        detail: format!("returned coloring is not proper: {d}"),
        reproducer: String::new(),
    })?;
    Ok(coloring)
}

fn recurse(parent: usize, w: Work) -> Result<Colors, SolveError> {
    if w.size() >= parent {
        return Err(w.internal(format!("recursion did not shrink the instance ({} >= {parent})", w.size())));
    }
    solve(w)
}

/// Hypotheses at every level: singleton, distinct path lists; 3-lists on
/// the outer face; 5-lists inside.
fn check(w: &Work) -> Result<(), SolveError> {
    let outer = w.emb.outer_vertices();
    let r = basic_report(&BasicView {
        vertices: w.emb.vertices().collect(),
        neighbors: w.emb.rotations(),
        outer: &outer,
        p: &w.p,
        lists: &w.lists,
    });
    let bad: Vec<_> = r
        .failures()
        .filter(|c| {
            matches!(c.condition, Condition::InteriorLists | Condition::OuterLists | Condition::PathLists | Condition::PathProper)
        })
        .map(|c| c.condition.label())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(w.internal(format!("reduced instance violates {bad:?}")))
    }
}

/// Extends a path of fewer than two vertices to an outer edge.
fn ensure_edge(w: &mut Work) {
    if w.p.is_empty() {
        let Some(c) = w.emb.outer_vertices().into_iter().next() else { return };
        let col = *w.lists[c].iter().next().expect("outer vertex has a nonempty list");
        w.precolor(c, col);
        w.p.push(c);
    }
    if w.p.len() == 1 {
        let c = w.p[0];
        let f = outer_cycle(&w.emb, c);
        if f.len() < 2 {
            return;
        }
        let i = f.iter().position(|&x| x == c).unwrap();
        let k = f.len();
        let nb = f[(i + 1) % k].min(f[(i + k - 1) % k]);
        let cc = w.color_of(c);
        let col = *w.lists[nb].iter().find(|&&x| x != cc).expect("outer vertex keeps a color");
        w.precolor(nb, col);
        w.p.push(nb);
    }
}

fn solve(mut w: Work) -> Result<Colors, SolveError> {
    check(&w)?;
    let size = w.size();
    let n = w.emb.vertex_count();
    if n == 0 {
        return Ok(Colors::new());
    }

    let comps = w.emb.components();
    if comps.len() > 1 {
        let mut out = Colors::new();
        for piece in component_pieces(&w) {
            out.extend(recurse(size, piece)?);
        }
        return Ok(out);
    }

    ensure_edge(&mut w);
    if n <= 2 {
        let mut out = Colors::new();
        for &v in &w.p {
            out.insert(v, w.color_of(v));
        }
        for v in w.emb.vertices().collect::<Vec<_>>() {
            if !out.contains_key(&v) {
                let c = w.greedy(v, w.emb.neighbors(v), &out).ok_or_else(|| w.internal("no color for a tiny piece"))?;
                out.insert(v, c);
            }
        }
        return Ok(out);
    }

    if let Some(c) = w.emb.cut_vertex() {
        let mut pieces = cut_pieces(&w, c);
        // The piece holding the precolored edge goes first.
        let first = pieces
            .iter()
            .position(|p| w.p.iter().all(|v| p.emb.contains(*v)))
            .ok_or_else(|| w.internal("precolored edge spans two pieces"))?;
        let mut head = pieces.remove(first);
        head.p = w.p.clone();
        let mut out = recurse(size, head)?;
        for mut piece in pieces {
            piece.precolor(c, out[&c]);
            piece.p = vec![c];
            ensure_edge(&mut piece);
            out.extend(recurse(size, piece)?);
        }
        return Ok(out);
    }

    let (x, y) = (w.p[0], w.p[1]);
    let f = outer_cycle(&w.emb, x);
    let k = f.len();
    let find = |v: Vertex| f.iter().position(|&u| u == v);
    let pos = |v: Vertex| find(v).unwrap();

    // Chords of the outer cycle.
    for (i, &u) in f.iter().enumerate() {
        for &v in w.emb.neighbors(u) {
            let Some(j) = find(v) else { continue };
            if j <= i + 1 || (i == 0 && j == k - 1) {
                continue;
            }
            let (mut s1, mut s2) = chord_sides(&w, &f, i, j)?;
            if !(s1.emb.contains(x) && s1.emb.contains(y)) {
                std::mem::swap(&mut s1, &mut s2);
            }
            s1.p = vec![x, y];
            let out1 = recurse(size, s1)?;
            s2.precolor(u, out1[&u]);
            s2.precolor(v, out1[&v]);
            s2.p = vec![u, v];
            let mut out = recurse(size, s2)?;
            out.extend(out1);
            return Ok(out);
        }
    }

    // No chord: reserve two colors at the outer neighbor of x away from y.
    let ix = pos(x);
    let (prev, next) = (f[(ix + k - 1) % k], f[(ix + 1) % k]);
    let v = if next == y { prev } else { next };
    let iv = pos(v);
    let wv = if f[(iv + 1) % k] == x { f[(iv + k - 1) % k] } else { f[(iv + 1) % k] };
    let cx = w.color_of(x);
    let reserve: Vec<Color> = w.lists[v].iter().copied().filter(|&c| c != cx).take(2).collect();
    let [alpha, beta] = reserve[..] else {
        return Err(w.internal(format!("vertex {v} has fewer than two spare colors")));
    };
    let inner: Vec<Vertex> = w.emb.neighbors(v).iter().copied().filter(|&u| u != x && u != wv).collect();
    let nbrs = w.emb.neighbors(v).to_vec();
    let mut rest = w.clone();
    for &u in &inner {
        rest.lists[u].remove(&alpha);
        rest.lists[u].remove(&beta);
    }
    rest.emb.delete_vertex(v);
    let mut out = recurse(size, rest)?;
    let cv = if out[&wv] != alpha { alpha } else { beta };
    if nbrs.iter().any(|u| out[u] == cv) {
        return Err(w.internal(format!("reserved colors of {v} clash with a neighbor")));
    }
    out.insert(v, cv);
    Ok(out)
}
