//! SVG rendering of instances and colorings.
//!
//! The layout is computed on the planarization, so every crossing sits at
//! its dummy vertex and is drawn there as a marker. 3-connected graphs get a
//! Tutte barycentric layout with the outer face on a regular polygon; other
//! graphs get a seeded spring layout.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt::Write;

use rand::Rng;

use super::gen::rng;
use crate::instance::Instance;
use crate::lists::{Color, Coloring};
use crate::plane::{block_tree, PlaneGraph, Vertex};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;
const RADIUS: f64 = 11.0;

pub type Point = (f64, f64);

/// Fill for a color: hues spaced by the golden angle.
pub fn color_fill(c: Color) -> String {
    format!("hsl({:.0},70%,62%)", (c as f64 * 137.508) % 360.0)
}

pub fn render_svg(inst: &Instance, coloring: Option<&Coloring>) -> String {
    render_svg_seeded(inst, coloring, 0)
}

pub fn render_svg_seeded(inst: &Instance, coloring: Option<&Coloring>, seed: u64) -> String {
    let d = &inst.drawing;
    let pos = fit(layout(d.base(), seed));
    let n = d.n_original();
    let path_edges: BTreeSet<(Vertex, Vertex)> = inst.p.edges().into_iter().collect();

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    for (u, v) in d.original_edges() {
        let class = if path_edges.contains(&(u, v)) { "edge path" } else { "edge" };
        let width = if class == "edge" { 1.5 } else { 4.0 };
        if d.is_crossed(u, v) {
            let q = crossing_dummy(inst, u, v);
            let _ = writeln!(
                s,
                r#"<polyline class="{class}" points="{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}" fill="none" stroke="black" stroke-width="{width}"/>"#,
                pos[u].0, pos[u].1, pos[q].0, pos[q].1, pos[v].0, pos[v].1
            );
        } else {
            let _ = writeln!(
                s,
                r#"<line class="{class}" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" stroke-width="{width}"/>"#,
                pos[u].0, pos[u].1, pos[v].0, pos[v].1
            );
        }
    }
    for c in d.crossings() {
        let (x, y) = pos[c.dummy];
        let _ = writeln!(
            s,
            r#"<rect class="crossing" x="{:.1}" y="{:.1}" width="8" height="8" fill="red" transform="rotate(45 {x:.1} {y:.1})"/>"#,
            x - 4.0,
            y - 4.0
        );
    }
    for v in 0..n {
        let (x, y) = pos[v];
        let fill = coloring.map_or_else(|| "white".to_string(), |c| color_fill(c.color(v)));
        let dash = if inst.n_set.contains(&v) { r#" stroke-dasharray="3,2""# } else { "" };
        let _ = writeln!(
            s,
            r#"<circle class="vertex" cx="{x:.1}" cy="{y:.1}" r="{RADIUS}" fill="{fill}" stroke="black" stroke-width="1.5"{dash}/>"#
        );
        let _ = writeln!(
            s,
            r#"<text class="label" x="{x:.1}" y="{:.1}" font-size="10" text-anchor="middle">{v}</text>"#,
            y + 3.5
        );
        let _ = writeln!(
            s,
            r#"<text class="list-size" x="{:.1}" y="{:.1}" font-size="9" fill="dimgray">|L|={}</text>"#,
            x + RADIUS,
            y - RADIUS,
            inst.lists.size(v)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn crossing_dummy(inst: &Instance, u: Vertex, v: Vertex) -> Vertex {
    let e = (u.min(v), u.max(v));
    inst.drawing
        .crossings()
        .iter()
        .find(|c| [c.e1, c.e2].iter().any(|&(a, b)| (a.min(b), a.max(b)) == e))
        .map(|c| c.dummy)
        .expect("crossed edge has a dummy")
}

/// Positions in an arbitrary frame for every vertex of `g`.
pub fn layout(g: &PlaneGraph, seed: u64) -> Vec<Point> {
    if g.n() == 0 {
        return Vec::new();
    }
    if is_three_connected(g) || (g.n() == 3 && g.edge_count() == 3) {
        tutte(g)
    } else {
        spring(g, seed)
    }
}

/// No cut vertex and no separating pair. Checked by deleting each vertex
/// and asking for a biconnected rest.
pub fn is_three_connected(g: &PlaneGraph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    (0..n).all(|v| {
        let mut rot: Vec<Vec<Vertex>> = g.rotations().to_vec();
        rot[v].clear();
        for r in &mut rot {
            r.retain(|&w| w != v);
        }
        block_tree(&rot, |u| u != v).is_biconnected()
    })
}

fn polygon_positions(k: usize) -> Vec<Point> {
    // First vertex at the top, clockwise on screen (y grows downwards).
    (0..k).map(|i| (-(TAU * i as f64 / k as f64 - TAU / 4.0)).sin_cos()).map(|(s, c)| (c, -s)).collect()
}

fn tutte(g: &PlaneGraph) -> Vec<Point> {
    let n = g.n();
    let outer = g.outer_face().map(|f| f.vertices()).unwrap_or_default();
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    for (v, p) in outer.iter().zip(polygon_positions(outer.len())) {
        pos[*v] = p;
        fixed[*v] = true;
    }
    // Gauss-Seidel with over-relaxation on the barycentric equations.
    for _ in 0..20_000 {
        let mut delta: f64 = 0.0;
        for v in 0..n {
            if fixed[v] || g.degree(v) == 0 {
                continue;
            }
            let k = g.degree(v) as f64;
            let (sx, sy) = g.rotation(v).iter().fold((0.0, 0.0), |a, &w| (a.0 + pos[w].0, a.1 + pos[w].1));
            let target = (sx / k, sy / k);
            let next = (pos[v].0 + 1.5 * (target.0 - pos[v].0), pos[v].1 + 1.5 * (target.1 - pos[v].1));
            delta = delta.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if delta < 1e-10 {
            break;
        }
    }
    pos
}

/// Fruchterman-Reingold from seeded random positions. A simple outer cycle
/// stays pinned on a polygon.
fn spring(g: &PlaneGraph, seed: u64) -> Vec<Point> {
    let n = g.n();
    let mut r = rng(seed);
    let mut pos: Vec<Point> = (0..n).map(|_| (r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))).collect();
    let mut fixed = vec![false; n];
    if let Some(f) = g.outer_face().filter(|_| g.components().len() == 1) {
        let vs = f.vertices();
        let distinct: BTreeSet<_> = vs.iter().collect();
        if distinct.len() == vs.len() && vs.len() >= 3 {
            for (v, p) in vs.iter().zip(polygon_positions(vs.len())) {
                pos[*v] = p;
                fixed[*v] = true;
            }
        }
    }
    let k = (4.0 / n as f64).sqrt();
    let rounds = 300;
    for round in 0..rounds {
        let temp = 0.1 * (1.0 - round as f64 / rounds as f64) + 1e-3;
        let mut disp = vec![(0.0, 0.0); n];
        for u in 0..n {
            for v in u + 1..n {
                let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
                let dist = (dx * dx + dy * dy).sqrt().max(1e-6);
                let f = k * k / dist;
                disp[u].0 += dx / dist * f;
                disp[u].1 += dy / dist * f;
                disp[v].0 -= dx / dist * f;
                disp[v].1 -= dy / dist * f;
            }
        }
        for (u, v) in g.edges() {
            let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
            let dist = (dx * dx + dy * dy).sqrt().max(1e-6);
            let f = dist * dist / k;
            disp[u].0 -= dx / dist * f;
            disp[u].1 -= dy / dist * f;
            disp[v].0 += dx / dist * f;
            disp[v].1 += dy / dist * f;
        }
        for v in 0..n {
            if fixed[v] {
                continue;
            }
            let len = (disp[v].0 * disp[v].0 + disp[v].1 * disp[v].1).sqrt().max(1e-9);
            let step = len.min(temp);
            pos[v].0 += disp[v].0 / len * step;
            pos[v].1 += disp[v].1 / len * step;
        }
    }
    pos
}

/// Scales positions into the drawing box.
fn fit(pos: Vec<Point>) -> Vec<Point> {
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for &(x, y) in &pos {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let off = ((SIZE - 2.0 * MARGIN - (hi.0 - lo.0) * scale) / 2.0, (SIZE - 2.0 * MARGIN - (hi.1 - lo.1) * scale) / 2.0);
    pos.into_iter().map(|(x, y)| (MARGIN + off.0 + (x - lo.0) * scale, MARGIN + off.1 + (y - lo.1) * scale)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::gen::{k5_one_crossing, wheel};
    use crate::lists::ListAssignment;
    use crate::plane::Walk;

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    fn cycle(k: usize) -> PlaneGraph {
        let rot = (0..k).map(|i| vec![(i + 1) % k, (i + k - 1) % k]).collect();
        PlaneGraph::new(rot, &[(1, 0)]).unwrap()
    }

    #[test]
    fn triangle_has_three_circles_and_lines() {
        let inst = Instance::planar(cycle(3), Walk::default(), ListAssignment::uniform(3, 1..=3)).unwrap();
        let s = render_svg(&inst, None);
        assert!(s.starts_with("<?xml") && s.contains(r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1""#));
        assert_eq!(count(&s, "<circle"), 3);
        assert_eq!(count(&s, "<line"), 3);
        assert_eq!(count(&s, r#"class="crossing""#), 0);
    }

    #[test]
    fn colored_c5_fills_every_vertex() {
        let inst = Instance::planar(cycle(5), Walk::default(), ListAssignment::uniform(5, 1..=3)).unwrap();
        let c = Coloring(vec![1, 2, 1, 2, 3]);
        let s = render_svg(&inst, Some(&c));
        for v in 0..5 {
            let fill = format!(r#"fill="{}""#, color_fill(c.color(v)));
            let line = s.lines().filter(|l| l.starts_with("<circle")).nth(v).unwrap();
            assert!(line.contains(&fill), "{line}");
        }
        assert_eq!(count(&s, &format!(r#"fill="{}""#, color_fill(1))), 2);
    }

    #[test]
    fn k5_has_one_marker() {
        let d = k5_one_crossing();
        let inst = Instance::new(d, Walk::default(), Default::default(), Default::default(), ListAssignment::uniform(5, 1..=5))
            .unwrap();
        let s = render_svg(&inst, None);
        assert_eq!(count(&s, r#"class="crossing""#), 1);
        assert_eq!(count(&s, "<circle"), 5);
        assert_eq!(count(&s, "<line") + count(&s, "<polyline"), 10);
    }

    #[test]
    fn tutte_places_hub_at_the_center() {
        let g = wheel(6);
        assert!(is_three_connected(&g));
        let pos = layout(&g, 0);
        assert!(pos[6].0.abs() < 1e-6 && pos[6].1.abs() < 1e-6);
        assert!(!is_three_connected(&cycle(5)));
    }

    #[test]
    fn layout_is_deterministic() {
        let g = cycle(7);
        assert_eq!(layout(&g, 3), layout(&g, 3));
    }
}
