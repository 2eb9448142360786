//! Exact list coloring by backtracking search, choosability enumeration and
//! batch verification of theorem statements.
//!
//! The search uses minimum-remaining-values ordering (ties by vertex id),
//! ascending color order and forward checking. Domains are bitsets over the
//! compressed palette.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instance::Instance;
use crate::lists::{verify_coloring, Color, ColorSet, Coloring, ListAssignment};
use crate::plane::Vertex;
use crate::validity::{check_theorem, ObstructionCheck, TheoremId};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SearchOutcome {
    Colorable,
    Uncolorable,
    /// The node budget ran out before the search finished.
    Limit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub backtracks: u64,
    pub wall_time: Duration,
    pub outcome: SearchOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactResult {
    pub coloring: Option<Coloring>,
    pub stats: SearchStats,
}

impl ExactResult {
    pub fn outcome(&self) -> SearchOutcome {
        self.stats.outcome
    }

    pub fn is_colorable(&self) -> bool {
        self.stats.outcome == SearchOutcome::Colorable
    }
}

struct Search<'a> {
    adj: &'a [Vec<Vertex>],
    palette: Vec<Color>,
    words: usize,
    dom: Vec<u64>,
    assigned: Vec<Option<usize>>,
    trail: Vec<(Vertex, usize)>,
    nodes: u64,
    backtracks: u64,
    limit: u64,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<Vertex>], lists: &ListAssignment, limit: u64) -> Self {
        let palette: Vec<Color> = lists.palette().into_iter().collect();
        let index: BTreeMap<Color, usize> = palette.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let words = palette.len().div_ceil(64).max(1);
        let mut dom = vec![0u64; adj.len() * words];
        for (v, l) in lists.iter() {
            for c in l {
                let i = index[c];
                dom[v * words + i / 64] |= 1 << (i % 64);
            }
        }
        Search {
            adj,
            palette,
            words,
            dom,
            assigned: vec![None; adj.len()],
            trail: Vec::new(),
            nodes: 0,
            backtracks: 0,
            limit,
        }
    }

    fn size(&self, v: Vertex) -> u32 {
        self.dom[v * self.words..(v + 1) * self.words].iter().map(|w| w.count_ones()).sum()
    }

    fn has(&self, v: Vertex, i: usize) -> bool {
        self.dom[v * self.words + i / 64] >> (i % 64) & 1 == 1
    }

    fn values(&self, v: Vertex) -> Vec<usize> {
        (0..self.palette.len()).filter(|&i| self.has(v, i)).collect()
    }

    fn pick(&self) -> Option<Vertex> {
        (0..self.adj.len()).filter(|&v| self.assigned[v].is_none()).min_by_key(|&v| (self.size(v), v))
    }

    /// Assigns `i` to `v` and prunes neighbors. Returns false on a wipeout;
    /// the trail is left for the caller to undo either way.
    fn assign(&mut self, v: Vertex, i: usize) -> bool {
        self.assigned[v] = Some(i);
        let mut ok = true;
        for &w in &self.adj[v] {
            if self.assigned[w].is_none() && self.has(w, i) {
                self.dom[w * self.words + i / 64] &= !(1 << (i % 64));
                self.trail.push((w, i));
                if self.size(w) == 0 {
                    ok = false;
                }
            }
        }
        ok
    }

    fn undo(&mut self, v: Vertex, mark: usize) {
        while self.trail.len() > mark {
            let (w, i) = self.trail.pop().unwrap();
            self.dom[w * self.words + i / 64] |= 1 << (i % 64);
        }
        self.assigned[v] = None;
    }

    /// `Some(true)` when a full assignment is found, `None` on the limit.
    fn run(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return None;
        }
        let Some(v) = self.pick() else { return Some(true) };
        for i in self.values(v) {
            let mark = self.trail.len();
            if self.assign(v, i) {
                match self.run() {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.undo(v, mark);
        }
        self.backtracks += 1;
        Some(false)
    }
}

/// Exact search with the default node limit.
pub fn solve_exact(adj: &[Vec<Vertex>], lists: &ListAssignment) -> ExactResult {
    solve_exact_with_limit(adj, lists, DEFAULT_NODE_LIMIT)
}

/// Exact search expanding at most `limit` nodes.
pub fn solve_exact_with_limit(adj: &[Vec<Vertex>], lists: &ListAssignment, limit: u64) -> ExactResult {
    assert_eq!(adj.len(), lists.len(), "one list per vertex");
    let start = Instant::now();
    let mut s = Search::new(adj, lists, limit);
    let found = if (0..adj.len()).any(|v| s.size(v) == 0) {
        s.nodes = 1;
        Some(false)
    } else {
        s.run()
    };
    let outcome = match found {
        Some(true) => SearchOutcome::Colorable,
        Some(false) => SearchOutcome::Uncolorable,
        None => SearchOutcome::Limit,
    };
    let coloring = (outcome == SearchOutcome::Colorable)
        .then(|| Coloring(s.assigned.iter().map(|a| s.palette[a.expect("total assignment")]).collect()));
    if let Some(c) = &coloring {
        verify_coloring(adj, lists, c).expect("exact search returned an improper coloring");
    }
    ExactResult {
        coloring,
        stats: SearchStats { nodes: s.nodes, backtracks: s.backtracks, wall_time: start.elapsed(), outcome },
    }
}

/// All proper L-colorings in lexicographic order (vertex 0 most
/// significant), up to `limit` of them.
pub fn enumerate_colorings(adj: &[Vec<Vertex>], lists: &ListAssignment, limit: usize) -> Vec<Coloring> {
    fn go(
        v: usize,
        adj: &[Vec<Vertex>],
        lists: &ListAssignment,
        cur: &mut Vec<Color>,
        out: &mut Vec<Coloring>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if v == adj.len() {
            out.push(Coloring(cur.clone()));
            return;
        }
        for &c in lists.get(v) {
            if adj[v].iter().any(|&w| w < v && cur[w] == c) {
                continue;
            }
            cur.push(c);
            go(v + 1, adj, lists, cur, out, limit);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, adj, lists, &mut Vec::with_capacity(adj.len()), &mut out, limit);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityLimits {
    pub max_vertices: usize,
    /// Largest palette as a multiple of `k`.
    pub max_palette_factor: usize,
}

impl Default for ChoosabilityLimits {
    fn default() -> Self {
        ChoosabilityLimits { max_vertices: 10, max_palette_factor: 2 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChoosabilityError {
    #[error("choosability enumeration is limited to {max} vertices, got {found}")]
    TooManyVertices { found: usize, max: usize },
    #[error("palette of {found} colors exceeds the limit of {max} (= {factor}k)")]
    PaletteTooLarge { found: usize, max: usize, factor: usize },
    #[error("an assignment hit the search node limit")]
    Limit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Choosability {
    pub choosable: bool,
    /// An assignment admitting no coloring, when not choosable.
    pub witness: Option<ListAssignment>,
    /// Number of canonical assignments examined.
    pub assignments: u64,
}

/// Sizes of consecutive k-subsets to try for one vertex: pairs of
/// (old colors taken, new colors taken).
fn canonical_lists(k: usize, used: usize, palette: usize) -> Vec<Vec<Color>> {
    // Lists reuse as many old colors as possible first, so identical lists
    // come early.
    let mut out = Vec::new();
    for old in (0..=k.min(used)).rev() {
        let new = k - old;
        if used + new > palette {
            continue;
        }
        let fresh: Vec<Color> = (used..used + new).map(|c| c as Color).collect();
        for_each_subset(used, old, &mut |s| {
            let mut l: Vec<Color> = s.iter().map(|&c| c as Color).collect();
            l.extend(&fresh);
            out.push(l);
        });
    }
    out
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), f);
}

/// Decides whether the graph is L-colorable for every assignment of
/// `k`-lists over a palette of `palette_size` colors, with the default
/// limits.
pub fn is_choosable(adj: &[Vec<Vertex>], k: usize, palette_size: usize) -> Result<Choosability, ChoosabilityError> {
    is_choosable_with(adj, k, palette_size, ChoosabilityLimits::default())
}

/// Assignments are enumerated up to color permutation: each list is a set of
/// already used colors plus the next unused ones, which visits every orbit.
pub fn is_choosable_with(
    adj: &[Vec<Vertex>],
    k: usize,
    palette_size: usize,
    limits: ChoosabilityLimits,
) -> Result<Choosability, ChoosabilityError> {
    let n = adj.len();
    if n > limits.max_vertices {
        return Err(ChoosabilityError::TooManyVertices { found: n, max: limits.max_vertices });
    }
    let max_palette = limits.max_palette_factor * k;
    if palette_size > max_palette {
        return Err(ChoosabilityError::PaletteTooLarge {
            found: palette_size,
            max: max_palette,
            factor: limits.max_palette_factor,
        });
    }
    if n == 0 {
        return Ok(Choosability { choosable: true, witness: None, assignments: 1 });
    }
    if k > palette_size {
        // No k-list fits in the palette; the statement is vacuous.
        return Ok(Choosability { choosable: true, witness: None, assignments: 0 });
    }

    struct Walker<'a> {
        adj: &'a [Vec<Vertex>],
        k: usize,
        palette: usize,
        lists: Vec<Vec<Color>>,
        count: u64,
        witness: Option<ListAssignment>,
        limit_hit: bool,
        stop: &'a AtomicBool,
    }
    impl Walker<'_> {
        fn go(&mut self, v: usize, used: usize) {
            if self.witness.is_some() || self.limit_hit || self.stop.load(Ordering::Relaxed) {
                return;
            }
            if v == self.adj.len() {
                self.count += 1;
                let la = ListAssignment::new(self.lists.iter().map(|l| l.iter().copied().collect()).collect());
                let r = solve_exact(self.adj, &la);
                match r.outcome() {
                    SearchOutcome::Colorable => {}
                    SearchOutcome::Uncolorable => self.witness = Some(la),
                    SearchOutcome::Limit => self.limit_hit = true,
                }
                if self.witness.is_some() || self.limit_hit {
                    self.stop.store(true, Ordering::Relaxed);
                }
                return;
            }
            for l in canonical_lists(self.k, used, self.palette) {
                let new_used = used.max(l.iter().map(|&c| c as usize + 1).max().unwrap_or(0));
                self.lists.push(l);
                self.go(v + 1, new_used);
                self.lists.pop();
                if self.witness.is_some() || self.limit_hit {
                    return;
                }
            }
        }
    }

    // Vertex 0 always gets colors 0..k; the second vertex's choices are
    // split across threads.
    let first: Vec<Color> = (0..k as Color).collect();
    let branches: Vec<Vec<Color>> = if n > 1 { canonical_lists(k, k, palette_size) } else { vec![vec![]] };
    let stop = AtomicBool::new(false);
    let results: Vec<(u64, Option<ListAssignment>, bool)> = branches
        .into_par_iter()
        .map(|second| {
            let mut w = Walker {
                adj,
                k,
                palette: palette_size,
                lists: vec![first.clone()],
                count: 0,
                witness: None,
                limit_hit: false,
                stop: &stop,
            };
            if n > 1 {
                let used = k.max(second.iter().map(|&c| c as usize + 1).max().unwrap_or(0));
                w.lists.push(second);
                w.go(2, used);
            } else {
                w.go(1, k);
            }
            (w.count, w.witness, w.limit_hit)
        })
        .collect();
    let assignments = results.iter().map(|r| r.0).sum();
    if results.iter().any(|r| r.2) {
        return Err(ChoosabilityError::Limit);
    }
    let witness = results.into_iter().find_map(|r| r.1);
    Ok(Choosability { choosable: witness.is_none(), witness, assignments })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum BatchOutcome {
    Colorable,
    Uncolorable,
    Limit,
    /// The instance fails the theorem's hypotheses; the text lists why.
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchEntry {
    pub index: usize,
    pub outcome: BatchOutcome,
    pub stats: Option<SearchStats>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub theorem: TheoremId,
    pub entries: Vec<BatchEntry>,
    /// Indices of hypothesis-passing instances found uncolorable.
    pub falsifications: Vec<usize>,
    pub colorable: usize,
    pub uncolorable: usize,
    pub limit: usize,
    pub skipped: usize,
    pub total_nodes: u64,
}

/// Checks each instance against `which`'s hypotheses and runs the exact
/// search on those that pass. Instances are processed in parallel; the report
/// is in input order.
pub fn verify_theorem_batch(
    instances: &[Instance],
    which: TheoremId,
    obstructions: &dyn ObstructionCheck,
    node_limit: u64,
) -> BatchReport {
    let entries: Vec<BatchEntry> = instances
        .par_iter()
        .enumerate()
        .map(|(index, inst)| {
            let skip = match check_theorem(inst, which, obstructions) {
                Err(e) => Some(e.to_string()),
                Ok(r) if !r.passed() => Some(r.to_string()),
                Ok(_) => None,
            };
            if let Some(why) = skip {
                return BatchEntry { index, outcome: BatchOutcome::Skipped(why), stats: None };
            }
            let r = solve_exact_with_limit(&inst.drawing.original_adjacency(), &inst.lists, node_limit);
            let outcome = match r.outcome() {
                SearchOutcome::Colorable => BatchOutcome::Colorable,
                SearchOutcome::Uncolorable => BatchOutcome::Uncolorable,
                SearchOutcome::Limit => BatchOutcome::Limit,
            };
            BatchEntry { index, outcome, stats: Some(r.stats) }
        })
        .collect();
    let count = |f: fn(&BatchOutcome) -> bool| entries.iter().filter(|e| f(&e.outcome)).count();
    BatchReport {
        theorem: which,
        falsifications: entries
            .iter()
            .filter(|e| e.outcome == BatchOutcome::Uncolorable)
            .map(|e| e.index)
            .collect(),
        colorable: count(|o| *o == BatchOutcome::Colorable),
        uncolorable: count(|o| *o == BatchOutcome::Uncolorable),
        limit: count(|o| *o == BatchOutcome::Limit),
        skipped: count(|o| matches!(o, BatchOutcome::Skipped(_))),
        total_nodes: entries.iter().filter_map(|e| e.stats.as_ref()).map(|s| s.nodes).sum(),
        entries,
    }
}

/// Convenience: `ColorSet` from a slice.
pub fn color_set(colors: &[Color]) -> ColorSet {
    colors.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<Vec<Vertex>> {
        (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect()
    }

    fn cycle(n: usize) -> Vec<Vec<Vertex>> {
        (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect()
    }

    #[test]
    fn small_decisions() {
        assert_eq!(solve_exact(&complete(6), &ListAssignment::uniform(6, 1..=5)).outcome(), SearchOutcome::Uncolorable);
        assert_eq!(solve_exact(&complete(4), &ListAssignment::uniform(4, 1..=3)).outcome(), SearchOutcome::Uncolorable);
        assert_eq!(solve_exact(&cycle(5), &ListAssignment::uniform(5, 1..=2)).outcome(), SearchOutcome::Uncolorable);
        let r = solve_exact(&cycle(6), &ListAssignment::uniform(6, 1..=2));
        assert_eq!(r.coloring, Some(Coloring(vec![1, 2, 1, 2, 1, 2])));
    }

    #[test]
    fn empty_list_is_uncolorable_at_the_root() {
        let mut lists = ListAssignment::uniform(3, 1..=3);
        lists.set(1, ColorSet::new());
        let r = solve_exact(&complete(3), &lists);
        assert_eq!(r.outcome(), SearchOutcome::Uncolorable);
        assert_eq!(r.stats.nodes, 1);
    }

    #[test]
    fn limit_is_distinct_from_uncolorable() {
        let r = solve_exact_with_limit(&complete(8), &ListAssignment::uniform(8, 1..=7), 50);
        assert_eq!(r.outcome(), SearchOutcome::Limit);
        assert!(r.coloring.is_none());
    }

    #[test]
    fn enumeration_counts_cycle_colorings() {
        // C4 with 3 colors: (k-1)^n + (-1)^n (k-1) = 16 + 2.
        assert_eq!(enumerate_colorings(&cycle(4), &ListAssignment::uniform(4, 1..=3), usize::MAX).len(), 18);
        assert_eq!(enumerate_colorings(&cycle(4), &ListAssignment::uniform(4, 1..=3), 5).len(), 5);
    }

    #[test]
    fn choosability_controls() {
        let c5 = is_choosable(&cycle(5), 2, 4).unwrap();
        assert!(!c5.choosable);
        let w = c5.witness.unwrap();
        assert!(w.iter().all(|(_, l)| l == w.get(0)), "first witness has identical lists");

        let k6 = is_choosable(&complete(6), 5, 10).unwrap();
        assert!(!k6.choosable);
        let w = k6.witness.unwrap();
        assert!(w.iter().all(|(_, l)| l == w.get(0)), "identical lists");

        // Even cycles are 2-choosable.
        assert!(is_choosable(&cycle(4), 2, 4).unwrap().choosable);
    }

    #[test]
    fn choosability_refuses_large_inputs() {
        assert!(matches!(is_choosable(&complete(11), 5, 5), Err(ChoosabilityError::TooManyVertices { .. })));
        assert!(matches!(is_choosable(&cycle(5), 2, 5), Err(ChoosabilityError::PaletteTooLarge { .. })));
        let wide = ChoosabilityLimits { max_vertices: 10, max_palette_factor: 3 };
        assert!(is_choosable_with(&cycle(4), 2, 5, wide).unwrap().choosable);
    }

    #[test]
    fn canonical_lists_reuse_old_colors_first() {
        let ls = canonical_lists(2, 2, 4);
        assert_eq!(ls[0], vec![0, 1]);
        assert_eq!(ls.last().unwrap(), &vec![2, 3]);
        assert_eq!(ls.len(), 1 + 2 + 1);
    }
}
