//! Constructive list-coloring algorithms.
//!
//! Each solver checks its hypotheses up front, works on a mutable copy of the
//! embedding, asserts that every recursive call shrinks `|V| + |E|`, and
//! re-verifies every coloring it returns. A failure inside the recursion is a
//! bug; it is reported as [`SolveError::Internal`] together with the
//! offending sub-instance in the file format.

mod basic;
mod crossing;
mod reduce;
mod select;
mod thomassen;

use std::collections::BTreeMap;

use thiserror::Error;

pub use basic::{color_basic, color_basic_traced, Step, Trace};
pub use crossing::{color_one_crossing, one_crossing_reduction, CrossingReduction};
pub use reduce::{reduce_by_partial_coloring, ReduceError, ReducedInstance};
pub use select::{select_x, OuterContext, SelectError, XRule, XSelection};
pub use thomassen::color_thomassen;

use crate::embed::Embedding;
use crate::format::serialize_instance;
use crate::instance::Instance;
use crate::lists::{Color, ColorSet, ListAssignment};
use crate::plane::{Vertex, Walk};
use crate::validity::{Condition, ValidityError, ValidityReport};

#[derive(Debug, Error, Clone)]
pub enum SolveError {
    #[error("hypotheses violated:\n{0}")]
    HypothesisViolation(ValidityReport),
    #[error(transparent)]
    Structure(#[from] ValidityError),
    #[error("internal error: {detail}")]
    Internal { detail: String, reproducer: String },
    #[error("out of scope: {0}")]
    OutOfScope(String),
}

impl SolveError {
    /// Conditions reported as violated, for hypothesis errors.
    pub fn failed_conditions(&self) -> Vec<Condition> {
        match self {
            SolveError::HypothesisViolation(r) => r.failures().map(|c| c.condition).collect(),
            _ => Vec::new(),
        }
    }
}

/// Colors of the vertices solved so far, by global id.
pub(crate) type Colors = BTreeMap<Vertex, Color>;

/// A sub-instance during the recursion: the live part of the embedding,
/// lists indexed by global id and the precolored path.
#[derive(Debug, Clone)]
pub(crate) struct Work {
    pub emb: Embedding,
    pub lists: Vec<ColorSet>,
    pub p: Vec<Vertex>,
}

impl Work {
    pub fn size(&self) -> usize {
        self.emb.vertex_count() + self.emb.edge_count()
    }

    /// The sub-instance restricted to `keep`, with path `p`.
    pub fn restricted(&self, keep: impl FnOnce(&mut Embedding), p: Vec<Vertex>) -> Work {
        let mut emb = self.emb.clone();
        keep(&mut emb);
        Work { emb, lists: self.lists.clone(), p }
    }

    pub fn color_of(&self, v: Vertex) -> Color {
        debug_assert_eq!(self.lists[v].len(), 1);
        *self.lists[v].iter().next().expect("precolored vertex has a color")
    }

    pub fn precolor(&mut self, v: Vertex, c: Color) {
        self.lists[v] = [c].into();
    }

    /// Removes `c` from the lists of the live neighbors of `v`.
    pub fn strip_from_neighbors(&mut self, v: Vertex, c: Color) {
        for &w in self.emb.neighbors(v) {
            self.lists[w].remove(&c);
        }
    }

    /// Smallest color of `v`'s list not used by an already colored neighbor.
    pub fn greedy(&self, v: Vertex, nbrs: &[Vertex], colors: &Colors) -> Option<Color> {
        self.lists[v].iter().copied().find(|c| !nbrs.iter().any(|w| colors.get(w) == Some(c)))
    }

    /// The sub-instance in the file format, relabeled densely. The first
    /// comment line maps local ids back to global ones.
    pub fn reproducer(&self) -> String {
        let sub = self.emb.to_subgraph();
        let local: BTreeMap<Vertex, Vertex> = sub.host.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let lists = ListAssignment::new(sub.host.iter().map(|&v| self.lists[v].clone()).collect());
        let p = Walk::path(self.p.iter().filter_map(|v| local.get(v).copied()).collect());
        let header = format!("# host ids: {:?}\n", sub.host);
        match Instance::planar(sub.graph.clone(), p, lists.clone()) {
            Ok(inst) => header + &serialize_instance(&inst),
            Err(e) => {
                let inst = Instance::planar(sub.graph, Walk::default(), lists).expect("lists match the graph");
                format!("{header}# path {:?} rejected: {e}\n{}", self.p, serialize_instance(&inst))
            }
        }
    }

    pub fn internal(&self, detail: impl Into<String>) -> SolveError {
        SolveError::Internal { detail: detail.into(), reproducer: self.reproducer() }
    }

    /// Checks that `colors` is a proper coloring of the live graph from
    /// the current lists.
    pub fn verify(&self, colors: &Colors) -> Result<(), SolveError> {
        for v in self.emb.vertices() {
            let Some(c) = colors.get(&v) else {
                return Err(self.internal(format!("vertex {v} left uncolored")));
            };
            if !self.lists[v].contains(c) {
                return Err(self.internal(format!("vertex {v} got color {c} outside its list")));
            }
            if let Some(w) = self.emb.neighbors(v).iter().find(|w| colors.get(w) == Some(c)) {
                return Err(self.internal(format!("edge {v}-{w} is monochromatic")));
            }
        }
        Ok(())
    }
}

/// Runs `f` on a thread with a large stack; the recursions go one level
/// per removed vertex.
pub(crate) fn with_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(256 << 20)
            .spawn_scoped(s, f)
            .expect("spawn solver thread")
            .join()
            .unwrap_or_else(|e| std::panic::resume_unwind(e))
    })
}

/// Vertices of the outer walk of `v`'s component, in walk order.
pub(crate) fn outer_cycle(emb: &Embedding, v: Vertex) -> Vec<Vertex> {
    emb.outer_walk(v).map(|w| w.into_iter().map(|d| d.0).collect()).unwrap_or_else(|| vec![v])
}

/// The two chord sides of the outer cycle `f` cut by `f[i]`-`f[j]`
/// (`i < j`): the part spanned by `f[i..=j]` and the part spanned by the
/// rest, each with the chord.
pub(crate) fn chord_sides(w: &Work, f: &[Vertex], i: usize, j: usize) -> Result<(Work, Work), SolveError> {
    let c1: Vec<Vertex> = f[i..=j].to_vec();
    let c2: Vec<Vertex> = f[j..].iter().chain(&f[..=i]).copied().collect();
    Ok((side_of(w, &c1)?, side_of(w, &c2)?))
}

/// The part of `w` inside the cycle `c` (the cycle included), with an empty
/// path.
pub(crate) fn side_of(w: &Work, c: &[Vertex]) -> Result<Work, SolveError> {
    let sides = w.emb.face_index().sides(&w.emb, c).map_err(|e| w.internal(e.to_string()))?;
    Ok(w.restricted(|e| sides.keep_interior(e), Vec::new()))
}

/// Pieces of the graph at the cut vertex `c`: each component of `G - c`
/// together with `c`, in order of least vertex.
pub(crate) fn cut_pieces(w: &Work, c: Vertex) -> Vec<Work> {
    let mut without = w.emb.clone();
    without.delete_vertex(c);
    without
        .components()
        .into_iter()
        .map(|comp| {
            let keep: std::collections::BTreeSet<Vertex> = comp.into_iter().chain([c]).collect();
            w.restricted(|e| e.retain(|v| keep.contains(&v), |_, _| true), Vec::new())
        })
        .collect()
}

/// One sub-instance per component.
pub(crate) fn component_pieces(w: &Work) -> Vec<Work> {
    w.emb
        .components()
        .into_iter()
        .map(|comp| {
            let keep: std::collections::BTreeSet<Vertex> = comp.into_iter().collect();
            let p = w.p.iter().copied().filter(|v| keep.contains(v)).collect();
            w.restricted(|e| e.retain(|v| keep.contains(&v), |_, _| true), p)
        })
        .collect()
}
