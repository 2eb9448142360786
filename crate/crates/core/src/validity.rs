//! Hypothesis checkers.
//!
//! Every checker returns a [`ValidityReport`] listing all violated conditions,
//! each with concrete witnesses. Structural problems with the input (a path
//! that is not on the outer face, for example) are reported as errors
//! instead, so a report always describes a well-formed instance.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::Drawing;
use crate::instance::{Instance, InstanceError};
use crate::lists::{ColorSet, ListAssignment};
use crate::plane::{edge, set_distance, PlaneGraph, StructureError, SubgraphRef, Vertex, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// `|L(v)| >= 5` off the outer face.
    InteriorLists,
    /// `|L(v)| >= 3` on the outer face outside the path.
    OuterLists,
    /// `|L(v)| = 1` on the path.
    PathLists,
    /// No two adjacent vertices with 3-lists.
    NoAdjacentTriples,
    /// The path lists form a proper coloring.
    PathProper,
    /// A common neighbor of a 2-path does not have exactly the path's colors.
    CommonNeighbor,
    S,
    N,
    M,
    P,
    T,
    C,
    Distance,
    ListProfile,
    /// Every list has at least five colors.
    FiveLists,
    CrossingCount,
    Obstructions,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::InteriorLists => "(i)",
            Condition::OuterLists => "(ii)",
            Condition::PathLists => "(iii)",
            Condition::NoAdjacentTriples => "(iv)",
            Condition::PathProper => "(v)",
            Condition::CommonNeighbor => "(vi)",
            Condition::S => "(S)",
            Condition::N => "(N)",
            Condition::M => "(M)",
            Condition::P => "(P)",
            Condition::T => "(T)",
            Condition::C => "(C)",
            Condition::Distance => "distance",
            Condition::ListProfile => "list profile",
            Condition::FiveLists => "five lists",
            Condition::CrossingCount => "crossing count",
            Condition::Obstructions => "(O)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpecialKind {
    CrossingPair,
    MiddleEdge,
    NVertex,
    MEdge,
}

impl SpecialKind {
    pub fn rank(self) -> usize {
        match self {
            SpecialKind::CrossingPair => 4,
            SpecialKind::MiddleEdge => 3,
            SpecialKind::NVertex => 2,
            SpecialKind::MEdge => 0,
        }
    }
}

/// Least distance two special subgraphs of the given kinds must keep.
pub fn required_distance(a: SpecialKind, b: SpecialKind) -> usize {
    a.rank() + b.rank() + 7
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpecialSubgraph {
    pub kind: SpecialKind,
    pub subgraph: SubgraphRef,
    pub rank: usize,
}

impl SpecialSubgraph {
    fn new(kind: SpecialKind, subgraph: SubgraphRef) -> Self {
        SpecialSubgraph { kind, subgraph, rank: kind.rank() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    Vertex { v: Vertex, list_size: usize },
    Edge { u: Vertex, v: Vertex },
    /// `x` is adjacent to every vertex of `path` and its list equals the
    /// union of theirs.
    CommonNeighbor { x: Vertex, path: Vec<Vertex> },
    /// `vertex` of crossing `index` breaks the 3-list rule.
    Crossing { index: usize, vertex: Vertex },
    Distance { a: SpecialSubgraph, b: SpecialSubgraph, distance: usize, required: usize },
    Count { found: usize, allowed: usize },
    Predicate,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex { v, list_size } => write!(f, "vertex {v} (list size {list_size})"),
            Witness::Edge { u, v } => write!(f, "edge {u}-{v}"),
            Witness::CommonNeighbor { x, path } => write!(f, "vertex {x} adjacent to {path:?}"),
            Witness::Crossing { index, vertex } => write!(f, "crossing {index} at vertex {vertex}"),
            Witness::Distance { a, b, distance, required } => write!(
                f,
                "{:?} {:?} and {:?} {:?} at distance {distance} < {required}",
                a.kind, a.subgraph.vertices, b.kind, b.subgraph.vertices
            ),
            Witness::Count { found, allowed } => write!(f, "{found} found, at most {allowed} allowed"),
            Witness::Predicate => write!(f, "predicate rejected the instance"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub condition: Condition,
    pub violations: Vec<Witness>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ValidityReport {
    pub checks: Vec<Check>,
}

impl ValidityReport {
    pub(crate) fn push(&mut self, condition: Condition, violations: Vec<Witness>) {
        self.checks.push(Check { condition, violations });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, condition: Condition) -> Option<&Check> {
        self.checks.iter().find(|c| c.condition == condition)
    }

    /// `Some(true)` if the condition was evaluated and passed.
    pub fn condition_passed(&self, condition: Condition) -> Option<bool> {
        self.check(condition).map(Check::passed)
    }

    pub fn merge(mut self, other: ValidityReport) -> Self {
        self.checks.extend(other.checks);
        self
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "{:<14} pass", c.condition.label())?;
            } else {
                writeln!(f, "{:<14} FAIL", c.condition.label())?;
                for w in &c.violations {
                    writeln!(f, "    {w}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidityError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("precolored path has length {found}, at most {max} allowed")]
    PathTooLong { found: usize, max: usize },
    #[error("a precolored edge is required, got a path of length {0}")]
    NeedsEdge(usize),
    #[error("the instance has crossings; this check needs a plane graph")]
    NotPlanar,
}

/// Data the list-size conditions are evaluated on. Neighbor lists are
/// indexed by vertex id; only `vertices` are inspected.
pub(crate) struct BasicView<'a> {
    pub vertices: Vec<Vertex>,
    pub neighbors: &'a [Vec<Vertex>],
    pub outer: &'a BTreeSet<Vertex>,
    pub p: &'a [Vertex],
    pub lists: &'a [ColorSet],
}

/// Conditions (i)-(vi) for a plane graph with precolored path `p`.
pub(crate) fn basic_report(view: &BasicView<'_>) -> ValidityReport {
    let lists = view.lists;
    let in_p = |v: Vertex| view.p.contains(&v);
    let size = |v: Vertex| lists[v].len();
    let mut r = ValidityReport::default();

    let mut i = Vec::new();
    let mut ii = Vec::new();
    let mut iii = Vec::new();
    for &v in &view.vertices {
        let s = size(v);
        if in_p(v) {
            if s != 1 {
                iii.push(Witness::Vertex { v, list_size: s });
            }
        } else if view.outer.contains(&v) {
            if s < 3 {
                ii.push(Witness::Vertex { v, list_size: s });
            }
        } else if s < 5 {
            i.push(Witness::Vertex { v, list_size: s });
        }
    }
    r.push(Condition::InteriorLists, i);
    r.push(Condition::OuterLists, ii);
    r.push(Condition::PathLists, iii);

    let mut iv = Vec::new();
    for &u in &view.vertices {
        for &v in &view.neighbors[u] {
            if u < v && size(u) == 3 && size(v) == 3 {
                iv.push(Witness::Edge { u, v });
            }
        }
    }
    r.push(Condition::NoAdjacentTriples, iv);

    r.push(Condition::PathProper, path_proper(view.p, view.neighbors, lists));

    let mut vi = Vec::new();
    if view.p.len() == 3 {
        vi = common_neighbor_violations(view.p, view.neighbors, lists, &view.vertices);
    }
    r.push(Condition::CommonNeighbor, vi);
    r
}

fn path_proper(p: &[Vertex], neighbors: &[Vec<Vertex>], lists: &[ColorSet]) -> Vec<Witness> {
    let mut out = Vec::new();
    for &v in p {
        if lists[v].len() != 1 {
            out.push(Witness::Vertex { v, list_size: lists[v].len() });
        }
    }
    for (a, &u) in p.iter().enumerate() {
        for &v in &p[a + 1..] {
            if neighbors[u].contains(&v) && lists[u].len() == 1 && lists[u] == lists[v] {
                out.push(Witness::Edge { u: u.min(v), v: u.max(v) });
            }
        }
    }
    out
}

/// Vertices adjacent to every vertex of the triple `t` whose list is the
/// union of the lists on `t`.
fn common_neighbor_violations(
    t: &[Vertex],
    neighbors: &[Vec<Vertex>],
    lists: &[ColorSet],
    candidates: &[Vertex],
) -> Vec<Witness> {
    let union: ColorSet = t.iter().flat_map(|&w| lists[w].iter().copied()).collect();
    candidates
        .iter()
        .copied()
        .filter(|x| !t.contains(x) && t.iter().all(|w| neighbors[*x].contains(w)) && lists[*x] == union)
        .map(|x| Witness::CommonNeighbor { x, path: t.to_vec() })
        .collect()
}

fn path_on_outer_face(g: &PlaneGraph, p: &Walk) -> Result<(), StructureError> {
    g.check_path(p)?;
    let outer_vs = g.outer_vertices();
    let outer_es: BTreeSet<_> =
        g.outer_faces().iter().flat_map(|f| f.darts.clone()).map(|(u, v)| edge(u, v)).collect();
    for &v in &p.vertices {
        if !outer_vs.contains(&v) {
            return Err(StructureError::PathOffOuterFace(format!("vertex {v}")));
        }
    }
    for (u, v) in p.edges() {
        if !outer_es.contains(&(u, v)) {
            return Err(StructureError::PathOffOuterFace(format!("edge {u}-{v}")));
        }
    }
    Ok(())
}

/// Conditions (i)-(vi) of the precolored-path theorem.
pub fn check_basic(g: &PlaneGraph, p: &Walk, lists: &ListAssignment) -> Result<ValidityReport, ValidityError> {
    if lists.len() != g.n() {
        return Err(InstanceError::ListCount { expected: g.n(), found: lists.len() }.into());
    }
    if p.length() > 2 {
        return Err(ValidityError::PathTooLong { found: p.length(), max: 2 });
    }
    path_on_outer_face(g, p)?;
    let adj = g.adjacency();
    let outer = g.outer_vertices();
    Ok(basic_report(&BasicView {
        vertices: (0..g.n()).collect(),
        neighbors: &adj,
        outer: &outer,
        p: &p.vertices,
        lists: lists.as_slice(),
    }))
}

/// Hypotheses of Thomassen's theorem for the precolored outer edge `xy`.
pub fn check_thomassen(
    g: &PlaneGraph,
    xy: (Vertex, Vertex),
    lists: &ListAssignment,
) -> Result<ValidityReport, ValidityError> {
    let p = Walk::path(vec![xy.0, xy.1]);
    let mut r = check_basic(g, &p, lists)?;
    r.checks.retain(|c| {
        matches!(c.condition, Condition::InteriorLists | Condition::OuterLists | Condition::PathLists | Condition::PathProper)
    });
    Ok(r)
}

/// The special subgraphs with their ranks.
pub fn special_subgraphs(inst: &Instance) -> Vec<SpecialSubgraph> {
    let mut out: Vec<SpecialSubgraph> = inst
        .drawing
        .crossings()
        .iter()
        .map(|c| SpecialSubgraph::new(SpecialKind::CrossingPair, c.subgraph().to_ref()))
        .collect();
    if inst.p.length() == 3 {
        let (a, b) = (inst.p.vertices[1], inst.p.vertices[2]);
        out.push(SpecialSubgraph::new(SpecialKind::MiddleEdge, SubgraphRef::from_edges([(a, b)])));
    }
    out.extend(inst.n_set.iter().map(|&v| SpecialSubgraph::new(SpecialKind::NVertex, SubgraphRef::vertex(v))));
    out.extend(
        inst.m_set.iter().map(|&(u, v)| SpecialSubgraph::new(SpecialKind::MEdge, SubgraphRef::from_edges([(u, v)]))),
    );
    out
}

fn distance_violations(adj: &[Vec<Vertex>], specials: &[SpecialSubgraph]) -> Vec<Witness> {
    let mut out = Vec::new();
    for (i, a) in specials.iter().enumerate() {
        for b in &specials[i + 1..] {
            let required = required_distance(a.kind, b.kind);
            if let Some(d) = set_distance(adj, &a.subgraph.vertices, &b.subgraph.vertices) {
                if d < required {
                    out.push(Witness::Distance { a: a.clone(), b: b.clone(), distance: d, required });
                }
            }
        }
    }
    out
}

/// The distance condition: `d(H1, H2) >= r(H1) + r(H2) + 7` for all pairs of
/// special subgraphs, measured in the original graph.
pub fn check_distant(inst: &Instance) -> ValidityReport {
    let adj = inst.drawing.original_adjacency();
    let mut r = ValidityReport::default();
    r.push(Condition::Distance, distance_violations(&adj, &special_subgraphs(inst)));
    r
}

/// Conditions (S), (N), (M), (P), (T) and (C).
pub fn check_valid(inst: &Instance) -> ValidityReport {
    let lists = inst.lists.as_slice();
    let adj = inst.drawing.original_adjacency();
    let outer = inst.drawing.outer_vertices();
    let p = &inst.p.vertices;
    let size = |v: Vertex| lists[v].len();
    let mut r = ValidityReport::default();

    let mut s = Vec::new();
    let mut n = Vec::new();
    for v in 0..inst.n() {
        let k = size(v);
        let bad = if p.contains(&v) {
            k != 1
        } else if outer.contains(&v) {
            k < 3
        } else {
            !inst.n_set.contains(&v) && k < 5
        };
        if bad {
            s.push(Witness::Vertex { v, list_size: k });
        }
        if inst.n_set.contains(&v) && !outer.contains(&v) && k < 4 {
            n.push(Witness::Vertex { v, list_size: k });
        }
    }
    r.push(Condition::S, s);
    r.push(Condition::N, n);

    let mut m = Vec::new();
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs {
            if u < v && size(u) == 3 && size(v) == 3 && !inst.m_set.contains(&(u, v)) {
                m.push(Witness::Edge { u, v });
            }
        }
    }
    r.push(Condition::M, m);

    r.push(Condition::P, path_proper(p, &adj, lists));

    let mut t = Vec::new();
    for v in 0..inst.n() {
        let in_p: Vec<Vertex> = p.iter().copied().filter(|w| adj[v].contains(w)).collect();
        for a in 0..in_p.len() {
            for b in a + 1..in_p.len() {
                for c in b + 1..in_p.len() {
                    let triple = [in_p[a], in_p[b], in_p[c]];
                    t.extend(common_neighbor_violations(&triple, &adj, lists, &[v]));
                }
            }
        }
    }
    r.push(Condition::T, t);

    let mut cx = Vec::new();
    for (index, c) in inst.drawing.crossings().iter().enumerate() {
        let vs = c.endpoints();
        if vs.iter().any(|&v| size(v) == 3) {
            for &v in &vs {
                let k = size(v);
                if k != 3 && k != 1 && k < 5 {
                    cx.push(Witness::Crossing { index, vertex: v });
                }
            }
            // Two 3-list vertices in one G_x also break the rule.
            let threes: Vec<_> = vs.iter().copied().filter(|&v| size(v) == 3).collect();
            if threes.len() > 1 {
                cx.extend(threes.into_iter().map(|vertex| Witness::Crossing { index, vertex }));
            }
        }
    }
    r.push(Condition::C, cx);
    r
}

/// Decides whether every obstruction of an instance is colorable. The
/// obstruction catalog is not modeled, so implementations are supplied by
/// the caller.
pub trait ObstructionCheck: Sync {
    fn all_colorable(&self, inst: &Instance) -> bool;
}

/// Treats every instance as obstruction-free.
#[derive(Debug, Clone, Copy, Default)]
pub struct AssumeColorable;

impl ObstructionCheck for AssumeColorable {
    fn all_colorable(&self, _inst: &Instance) -> bool {
        true
    }
}

pub const CROSSING_CROSSING_MIN: usize = 15;
pub const CROSSING_N_MIN: usize = 13;
pub const N_N_MIN: usize = 11;

/// Hypotheses for drawings with far-apart crossings and far-apart 4-lists:
/// `|L(v)| = 4` on `N`, `>= 5` elsewhere, crossed-edge pairs at distance
/// `>= 15`, crossings and `N` at `>= 13`, `N` pairwise at `>= 11`.
pub fn check_main0(drawing: &Drawing, n_set: &BTreeSet<Vertex>, lists: &ListAssignment) -> ValidityReport {
    let mut r = ValidityReport::default();
    let profile = (0..drawing.n_original())
        .filter(|&v| {
            let k = lists.size(v);
            if n_set.contains(&v) {
                k != 4
            } else {
                k < 5
            }
        })
        .map(|v| Witness::Vertex { v, list_size: lists.size(v) })
        .collect();
    r.push(Condition::ListProfile, profile);

    let adj = drawing.original_adjacency();
    let mut specials: Vec<SpecialSubgraph> = drawing
        .crossings()
        .iter()
        .map(|c| SpecialSubgraph::new(SpecialKind::CrossingPair, c.subgraph().to_ref()))
        .collect();
    specials.extend(n_set.iter().map(|&v| SpecialSubgraph::new(SpecialKind::NVertex, SubgraphRef::vertex(v))));
    let mut dist = Vec::new();
    for (i, a) in specials.iter().enumerate() {
        for b in &specials[i + 1..] {
            let required = match (a.kind, b.kind) {
                (SpecialKind::CrossingPair, SpecialKind::CrossingPair) => CROSSING_CROSSING_MIN,
                (SpecialKind::NVertex, SpecialKind::NVertex) => N_N_MIN,
                _ => CROSSING_N_MIN,
            };
            if let Some(d) = set_distance(&adj, &a.subgraph.vertices, &b.subgraph.vertices) {
                if d < required {
                    dist.push(Witness::Distance { a: a.clone(), b: b.clone(), distance: d, required });
                }
            }
        }
    }
    // Same pairs and ranks as the general distance condition with P and M empty.
    debug_assert_eq!(dist, distance_violations(&adj, &specials));
    r.push(Condition::Distance, dist);
    r
}

/// The statements whose hypotheses can be checked and verified in batch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum TheoremId {
    /// Plane graph, precolored outer edge, 3-lists outside, 5-lists inside.
    Thomassen,
    /// Plane graph, precolored outer path of length at most two, (i)-(vi).
    PrecoloredPath,
    /// Crossings and 4-list vertices far apart, 5-lists elsewhere.
    FarCrossings,
    /// At most two crossings, 5-lists.
    TwoCrossings,
    /// Plane graph, 4-list vertices pairwise far apart, 5-lists elsewhere.
    FarFours,
    /// Valid and distant lists with a path of length at most three.
    General,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Thomassen,
        TheoremId::PrecoloredPath,
        TheoremId::FarCrossings,
        TheoremId::TwoCrossings,
        TheoremId::FarFours,
        TheoremId::General,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thomassen => "thomassen",
            TheoremId::PrecoloredPath => "precolored-path",
            TheoremId::FarCrossings => "far-crossings",
            TheoremId::TwoCrossings => "two-crossings",
            TheoremId::FarFours => "far-fours",
            TheoremId::General => "general",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s)
    }
}

/// Evaluates the hypotheses of `which` on an instance.
pub fn check_theorem(
    inst: &Instance,
    which: TheoremId,
    obstructions: &dyn ObstructionCheck,
) -> Result<ValidityReport, ValidityError> {
    let planar = || {
        if inst.drawing.crossing_count() > 0 {
            Err(ValidityError::NotPlanar)
        } else {
            Ok(inst.drawing.base())
        }
    };
    match which {
        TheoremId::Thomassen => {
            let g = planar()?;
            if inst.p.length() != 1 {
                return Err(ValidityError::NeedsEdge(inst.p.length()));
            }
            check_thomassen(g, (inst.p.vertices[0], inst.p.vertices[1]), &inst.lists)
        }
        TheoremId::PrecoloredPath => check_basic(planar()?, &inst.p, &inst.lists),
        TheoremId::FarCrossings => Ok(check_main0(&inst.drawing, &inst.n_set, &inst.lists)),
        TheoremId::FarFours => {
            planar()?;
            Ok(check_main0(&inst.drawing, &inst.n_set, &inst.lists))
        }
        TheoremId::TwoCrossings => {
            let mut r = ValidityReport::default();
            let k = inst.drawing.crossing_count();
            r.push(
                Condition::CrossingCount,
                if k > 2 { vec![Witness::Count { found: k, allowed: 2 }] } else { vec![] },
            );
            let small = (0..inst.n())
                .filter(|&v| inst.lists.size(v) < 5)
                .map(|v| Witness::Vertex { v, list_size: inst.lists.size(v) })
                .collect();
            r.push(Condition::FiveLists, small);
            Ok(r)
        }
        TheoremId::General => {
            if inst.p.length() > 3 {
                return Err(ValidityError::PathTooLong { found: inst.p.length(), max: 3 });
            }
            let mut r = check_valid(inst).merge(check_distant(inst));
            let ok = obstructions.all_colorable(inst);
            r.push(Condition::Obstructions, if ok { vec![] } else { vec![Witness::Predicate] });
            Ok(r)
        }
    }
}

/// Re-evaluates one witness against the instance in isolation. Returns true
/// iff the witness still demonstrates a violation of `condition`.
pub fn confirm_witness(inst: &Instance, condition: Condition, w: &Witness) -> bool {
    let lists = &inst.lists;
    let adj = inst.drawing.original_adjacency();
    let outer = inst.drawing.outer_vertices();
    let p = &inst.p.vertices;
    let size = |v: Vertex| lists.size(v);
    match (condition, w) {
        (Condition::InteriorLists, Witness::Vertex { v, .. }) => !outer.contains(v) && !p.contains(v) && size(*v) < 5,
        (Condition::OuterLists, Witness::Vertex { v, .. }) => outer.contains(v) && !p.contains(v) && size(*v) < 3,
        (Condition::PathLists, Witness::Vertex { v, .. }) => p.contains(v) && size(*v) != 1,
        (Condition::NoAdjacentTriples, Witness::Edge { u, v }) => adj[*u].contains(v) && size(*u) == 3 && size(*v) == 3,
        (Condition::PathProper | Condition::P, Witness::Vertex { v, .. }) => p.contains(v) && size(*v) != 1,
        (Condition::PathProper | Condition::P, Witness::Edge { u, v }) => {
            p.contains(u) && p.contains(v) && adj[*u].contains(v) && size(*u) == 1 && lists.get(*u) == lists.get(*v)
        }
        (Condition::CommonNeighbor | Condition::T, Witness::CommonNeighbor { x, path }) => {
            let union: ColorSet = path.iter().flat_map(|&w| lists.get(w).iter().copied()).collect();
            path.iter().all(|w| p.contains(w) && adj[*x].contains(w)) && *lists.get(*x) == union
        }
        (Condition::S, Witness::Vertex { v, .. }) => {
            if p.contains(v) {
                size(*v) != 1
            } else if outer.contains(v) {
                size(*v) < 3
            } else {
                !inst.n_set.contains(v) && size(*v) < 5
            }
        }
        (Condition::N, Witness::Vertex { v, .. }) => inst.n_set.contains(v) && !outer.contains(v) && size(*v) < 4,
        (Condition::M, Witness::Edge { u, v }) => {
            adj[*u].contains(v) && size(*u) == 3 && size(*v) == 3 && !inst.m_set.contains(&edge(*u, *v))
        }
        (Condition::C, Witness::Crossing { index, vertex }) => {
            let Some(c) = inst.drawing.crossings().get(*index) else { return false };
            let vs = c.endpoints();
            let threes = vs.iter().filter(|&&v| size(v) == 3).count();
            vs.contains(vertex)
                && threes > 0
                && ((size(*vertex) != 3 && size(*vertex) != 1 && size(*vertex) < 5) || (size(*vertex) == 3 && threes > 1))
        }
        (Condition::Distance, Witness::Distance { a, b, distance, required }) => {
            set_distance(&adj, &a.subgraph.vertices, &b.subgraph.vertices) == Some(*distance) && distance < required
        }
        (Condition::ListProfile, Witness::Vertex { v, .. }) => {
            if inst.n_set.contains(v) {
                size(*v) != 4
            } else {
                size(*v) < 5
            }
        }
        (Condition::FiveLists, Witness::Vertex { v, .. }) => size(*v) < 5,
        (Condition::CrossingCount, Witness::Count { found, allowed }) => {
            inst.drawing.crossing_count() == *found && found > allowed
        }
        _ => false,
    }
}

/// Histogram of list sizes, handy for reports.
pub fn list_size_profile(lists: &ListAssignment) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for (_, l) in lists.iter() {
        *h.entry(l.len()).or_insert(0) += 1;
    }
    h
}
