//! List assignments, colorings and the shared proper-coloring verifier.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::plane::Vertex;

/// Color identifier. Colors are small nonnegative integers.
pub type Color = u32;

/// Deduplicated, ordered set of admissible colors for one vertex.
pub type ColorSet = BTreeSet<Color>;

/// Map from vertex id to its list of admissible colors. Every vertex of the
/// host graph has an entry (possibly empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(lists: Vec<ColorSet>) -> Self {
        ListAssignment { lists }
    }

    /// `n` empty lists.
    pub fn empty(n: usize) -> Self {
        ListAssignment { lists: vec![ColorSet::new(); n] }
    }

    /// Every vertex gets the same list.
    pub fn uniform<I: IntoIterator<Item = Color>>(n: usize, colors: I) -> Self {
        let set: ColorSet = colors.into_iter().collect();
        ListAssignment { lists: vec![set; n] }
    }

    pub fn from_slices(lists: &[&[Color]]) -> Self {
        ListAssignment {
            lists: lists.iter().map(|l| l.iter().copied().collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: Vertex) -> &ColorSet {
        &self.lists[v]
    }

    pub fn get_mut(&mut self, v: Vertex) -> &mut ColorSet {
        &mut self.lists[v]
    }

    pub fn set(&mut self, v: Vertex, list: ColorSet) {
        self.lists[v] = list;
    }

    pub fn size(&self, v: Vertex) -> usize {
        self.lists[v].len()
    }

    pub fn as_slice(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &ColorSet)> {
        self.lists.iter().enumerate()
    }

    /// All colors occurring in some list.
    pub fn palette(&self) -> ColorSet {
        self.lists.iter().flatten().copied().collect()
    }
}

impl From<Vec<ColorSet>> for ListAssignment {
    fn from(lists: Vec<ColorSet>) -> Self {
        ListAssignment { lists }
    }
}

/// A total assignment of colors to the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn color(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }
}

/// Why a coloring is not a proper L-coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoringDefect {
    WrongLength { expected: usize, found: usize },
    NotInList { vertex: Vertex, color: Color },
    Monochromatic { u: Vertex, v: Vertex, color: Color },
}

impl fmt::Display for ColoringDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringDefect::WrongLength { expected, found } => {
                write!(f, "coloring covers {found} vertices, expected {expected}")
            }
            ColoringDefect::NotInList { vertex, color } => {
                write!(f, "vertex {vertex} has color {color} outside its list")
            }
            ColoringDefect::Monochromatic { u, v, color } => {
                write!(f, "edge {u}-{v} is monochromatic (color {color})")
            }
        }
    }
}

/// Checks that `coloring` is proper on the graph given by `adjacency` and that
/// every vertex takes a color from its list.
pub fn verify_coloring(
    adjacency: &[Vec<Vertex>],
    lists: &ListAssignment,
    coloring: &Coloring,
) -> Result<(), ColoringDefect> {
    if coloring.len() != adjacency.len() || lists.len() != adjacency.len() {
        return Err(ColoringDefect::WrongLength { expected: adjacency.len(), found: coloring.len() });
    }
    for (v, nbrs) in adjacency.iter().enumerate() {
        let c = coloring.color(v);
        if !lists.get(v).contains(&c) {
            return Err(ColoringDefect::NotInList { vertex: v, color: c });
        }
        if let Some(&w) = nbrs.iter().find(|&&w| coloring.color(w) == c) {
            return Err(ColoringDefect::Monochromatic { u: v.min(w), v: v.max(w), color: c });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verifier_catches_each_defect() {
        let adj = vec![vec![1], vec![0, 2], vec![1]];
        let lists = ListAssignment::from_slices(&[&[1, 2], &[2, 3], &[1]]);
        assert!(verify_coloring(&adj, &lists, &Coloring(vec![1, 2, 1])).is_ok());
        assert_eq!(
            verify_coloring(&adj, &lists, &Coloring(vec![2, 2, 1])),
            Err(ColoringDefect::Monochromatic { u: 0, v: 1, color: 2 })
        );
        assert_eq!(
            verify_coloring(&adj, &lists, &Coloring(vec![1, 3, 2])),
            Err(ColoringDefect::NotInList { vertex: 2, color: 2 })
        );
        assert!(matches!(
            verify_coloring(&adj, &lists, &Coloring(vec![1])),
            Err(ColoringDefect::WrongLength { .. })
        ));
    }

    #[test]
    fn palette_collects_all_colors() {
        let lists = ListAssignment::from_slices(&[&[4, 1], &[1, 9]]);
        assert_eq!(lists.palette().into_iter().collect::<Vec<_>>(), vec![1, 4, 9]);
    }
}
