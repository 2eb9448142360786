//! Drawings with one crossing and 5-lists.
//!
//! For the crossing edges `xy` and `uv`, the crossing point becomes the outer
//! face: the two edges are removed and the 4-cycle `x u y v` is drawn around
//! the crossing. Precoloring the path `x u y` with `x` and `y` distinct and
//! removing the color of `u` from `L(v)` leaves an instance of
//! [`color_basic`] whose colorings are colorings of the original graph.

use crate::drawing::{insert_after, insert_before, Crossing, Drawing};
use crate::lists::{verify_coloring, Color, Coloring, ListAssignment};
use crate::plane::{PlaneGraph, Walk};
use crate::validity::{Condition, ValidityError, ValidityReport, Witness};

use super::{color_basic, SolveError};

/// The plane graph `G'` built around the crossing, with its precolored path
/// and reduced lists. Vertex ids are those of the original graph.
#[derive(Debug, Clone)]
pub struct CrossingReduction {
    pub graph: PlaneGraph,
    pub p: Walk,
    pub lists: ListAssignment,
    pub crossing: Crossing,
}

fn check_lists(drawing: &Drawing, lists: &ListAssignment) -> Result<(), SolveError> {
    let n = drawing.n_original();
    if lists.len() != n {
        return Err(SolveError::OutOfScope(format!("{} lists for {n} vertices", lists.len())));
    }
    let small: Vec<Witness> =
        (0..n).filter(|&v| lists.size(v) < 5).map(|v| Witness::Vertex { v, list_size: lists.size(v) }).collect();
    if small.is_empty() {
        return Ok(());
    }
    let mut r = ValidityReport::default();
    r.push(Condition::FiveLists, small);
    Err(SolveError::HypothesisViolation(r))
}

/// Builds `G'` for a drawing with exactly one crossing.
pub fn one_crossing_reduction(drawing: &Drawing, lists: &ListAssignment) -> Result<CrossingReduction, SolveError> {
    check_lists(drawing, lists)?;
    let [crossing] = drawing.crossings() else {
        return Err(SolveError::OutOfScope(format!(
            "{} crossings; only one crossing is handled constructively, use the exact oracle",
            drawing.crossing_count()
        )));
    };
    let q = crossing.dummy;
    let [x, u, y, v] = crossing.rotation();
    let mut rot = drawing.base().rotations().to_vec();
    for (s, t) in [(x, u), (u, y), (y, v), (v, x)] {
        if let Some(i) = rot[s].iter().position(|&w| w == t) {
            rot[s].remove(i);
            rot[t].retain(|&w| w != s);
        }
        insert_after(&mut rot[t], q, s);
        insert_before(&mut rot[s], q, t);
    }
    for r in &mut rot {
        r.retain(|&w| w != q);
    }
    rot.truncate(q);
    let graph = PlaneGraph::new(rot, &[(x, u)]).map_err(ValidityError::from)?;
    let face = graph.face_of((x, u)).vertices();
    if face.len() != 4 {
        return Err(SolveError::Internal {
            detail: format!("face around the crossing is {face:?}, not the 4-cycle {x} {u} {y} {v}"),
            reproducer: String::new(),
        });
    }

    let mut reduced = lists.clone();
    let min_outside = |v, avoid: &[Color]| *lists.get(v).iter().find(|c| !avoid.contains(c)).expect("5-lists");
    let cx = min_outside(x, &[]);
    let cu = min_outside(u, &[cx]);
    let cy = min_outside(y, &[cx, cu]);
    reduced.set(x, [cx].into());
    reduced.set(u, [cu].into());
    reduced.set(y, [cy].into());
    reduced.get_mut(v).remove(&cu);
    Ok(CrossingReduction { graph, p: Walk::path(vec![x, u, y]), lists: reduced, crossing: crossing.clone() })
}

/// Colors a drawing with at most one crossing from lists of size at least 5.
pub fn color_one_crossing(drawing: &Drawing, lists: &ListAssignment) -> Result<Coloring, SolveError> {
    check_lists(drawing, lists)?;
    if drawing.crossing_count() == 0 {
        return color_basic(drawing.base(), &Walk::default(), lists);
    }
    let red = one_crossing_reduction(drawing, lists)?;
    let coloring = color_basic(&red.graph, &red.p, &red.lists)?;
    verify_coloring(&drawing.original_adjacency(), lists, &coloring).map_err(|d| SolveError::Internal {
        detail: format!("coloring of G' is not proper on the drawing: {d}"),
        reproducer: String::new(),
    })?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::fixtures::k5_one_crossing;
    use crate::oracle::solve_exact;

    #[test]
    fn k5_uses_all_five_colors() {
        let d = k5_one_crossing();
        let lists = ListAssignment::uniform(5, 1..=5);
        let c = color_one_crossing(&d, &lists).unwrap();
        let mut used = c.0.clone();
        used.sort_unstable();
        assert_eq!(used, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn reduction_has_outer_four_cycle() {
        let d = k5_one_crossing();
        let red = one_crossing_reduction(&d, &ListAssignment::uniform(5, 1..=5)).unwrap();
        assert_eq!(red.graph.outer_face().unwrap().len(), 4);
        let [x, u, y, v] = red.crossing.rotation();
        assert!(!red.graph.has_edge(x, y) && !red.graph.has_edge(u, v));
        assert!(red.graph.has_edge(x, u) && red.graph.has_edge(y, v));
        assert_eq!(red.lists.size(v), 4);
        assert_ne!(red.lists.get(x), red.lists.get(y));
    }

    #[test]
    fn k5_with_mixed_lists() {
        let d = k5_one_crossing();
        let lists = ListAssignment::from_slices(&[
            &[1, 2, 3, 4, 5],
            &[2, 3, 4, 5, 6],
            &[1, 3, 5, 7, 9],
            &[1, 2, 6, 7, 8],
            &[3, 4, 5, 6, 7],
        ]);
        let c = color_one_crossing(&d, &lists).unwrap();
        assert!(solve_exact(&d.original_adjacency(), &lists).is_colorable());
        assert!(verify_coloring(&d.original_adjacency(), &lists, &c).is_ok());
    }

    #[test]
    fn small_lists_rejected() {
        let d = k5_one_crossing();
        let mut lists = ListAssignment::uniform(5, 1..=5);
        lists.set(2, [1, 2, 3, 4].into());
        let err = color_one_crossing(&d, &lists).unwrap_err();
        assert_eq!(err.failed_conditions(), vec![Condition::FiveLists]);
    }
}
