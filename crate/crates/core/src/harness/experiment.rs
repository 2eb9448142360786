//! Batch runs: generate, check hypotheses, solve, verify.
//!
//! Each instance is handled on its own; a failure at any stage becomes that
//! instance's outcome and never stops the batch. A falsification is an
//! instance that meets the hypotheses but is found uncolorable, that the
//! constructive solver fails on, or whose returned coloring does not verify.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gen::{gen_instance, GenSpec};
use crate::format::serialize_instance;
use crate::instance::Instance;
use crate::lists::{verify_coloring, Color, Coloring};
use crate::oracle::{solve_exact_with_limit, SearchOutcome, DEFAULT_NODE_LIMIT};
use crate::plane::Walk;
use crate::solver::{color_basic, color_one_crossing, color_thomassen, SolveError};
use crate::validity::{check_theorem, AssumeColorable, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverChoice {
    /// The constructive solver where one covers the theorem, else the oracle.
    Constructive,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Solved,
    Uncolorable,
    Skipped,
    Limit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Thomassen,
    Basic,
    OneCrossing,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub label: String,
    pub vertices: usize,
    pub crossings: usize,
    pub outcome: Outcome,
    pub method: Option<Method>,
    pub nodes: Option<u64>,
    pub coloring: Option<Vec<Color>>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FalsificationKind {
    Uncolorable,
    SolverError,
    BadColoring,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Falsification {
    pub index: usize,
    pub label: String,
    pub kind: FalsificationKind,
    pub detail: String,
    /// The instance in the text format.
    pub reproducer: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub theorem: TheoremId,
    pub solver: SolverChoice,
    pub total: usize,
    pub solved: usize,
    pub uncolorable: usize,
    pub skipped: usize,
    pub limit: usize,
    pub total_nodes: u64,
    pub elapsed_ms: u128,
    pub falsifications: Vec<Falsification>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instances: Vec<InstanceRecord>,
    pub summary: Summary,
}

impl RunReport {
    pub fn count(&self, outcome: Outcome) -> usize {
        self.instances.iter().filter(|r| r.outcome == outcome).count()
    }

    /// Writes each falsification as `<dir>/falsification-<index>.inst`.
    pub fn write_reproducers(&self, dir: &Path) -> std::io::Result<Vec<std::path::PathBuf>> {
        std::fs::create_dir_all(dir)?;
        self.summary
            .falsifications
            .iter()
            .map(|f| {
                let path = dir.join(format!("falsification-{}.inst", f.index));
                std::fs::write(&path, &f.reproducer)?;
                Ok(path)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub solver: SolverChoice,
    pub node_limit: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { solver: SolverChoice::Constructive, node_limit: DEFAULT_NODE_LIMIT }
    }
}

/// Generates every spec and runs the batch. A spec the generator refuses
/// is reported as SKIPPED.
pub fn run_experiment(specs: &[GenSpec], theorem: TheoremId, solver: SolverChoice) -> RunReport {
    let items: Vec<(String, Result<Instance, String>)> = specs
        .par_iter()
        .map(|s| (format!("{:?} seed={}", s.family, s.seed), gen_instance(s).map_err(|e| e.to_string())))
        .collect();
    run_batch(items, theorem, RunOptions { solver, ..RunOptions::default() })
}

/// Runs already-built instances.
pub fn run_instances(instances: Vec<(String, Instance)>, theorem: TheoremId, options: RunOptions) -> RunReport {
    run_batch(instances.into_iter().map(|(l, i)| (l, Ok(i))).collect(), theorem, options)
}

struct Attempt {
    record: InstanceRecord,
    falsification: Option<(FalsificationKind, String)>,
}

pub fn run_batch(items: Vec<(String, Result<Instance, String>)>, theorem: TheoremId, options: RunOptions) -> RunReport {
    let start = Instant::now();
    let attempts: Vec<(Attempt, Option<String>)> = items
        .into_par_iter()
        .enumerate()
        .map(|(index, (label, inst))| match inst {
            Err(why) => (skipped(index, label, 0, 0, why), None),
            Ok(inst) => {
                let a = run_one(index, label, &inst, theorem, options);
                let repro = a.falsification.as_ref().map(|_| serialize_instance(&inst));
                (a, repro)
            }
        })
        .collect();

    let mut instances = Vec::with_capacity(attempts.len());
    let mut falsifications = Vec::new();
    for (a, repro) in attempts {
        if let Some((kind, detail)) = a.falsification {
            falsifications.push(Falsification {
                index: a.record.index,
                label: a.record.label.clone(),
                kind,
                detail,
                reproducer: repro.unwrap_or_default(),
            });
        }
        instances.push(a.record);
    }
    let count = |o: Outcome| instances.iter().filter(|r| r.outcome == o).count();
    let summary = Summary {
        theorem,
        solver: options.solver,
        total: instances.len(),
        solved: count(Outcome::Solved),
        uncolorable: count(Outcome::Uncolorable),
        skipped: count(Outcome::Skipped),
        limit: count(Outcome::Limit),
        total_nodes: instances.iter().filter_map(|r| r.nodes).sum(),
        elapsed_ms: start.elapsed().as_millis(),
        falsifications,
    };
    RunReport { instances, summary }
}

fn skipped(index: usize, label: String, vertices: usize, crossings: usize, why: String) -> Attempt {
    Attempt {
        record: InstanceRecord {
            index,
            label,
            vertices,
            crossings,
            outcome: Outcome::Skipped,
            method: None,
            nodes: None,
            coloring: None,
            detail: Some(why),
        },
        falsification: None,
    }
}

/// The constructive solver for `theorem` on `inst`, if there is one.
fn constructive(inst: &Instance, theorem: TheoremId) -> Option<(Method, Result<Coloring, SolveError>)> {
    let g = inst.drawing.base();
    match theorem {
        TheoremId::Thomassen => {
            let xy = (inst.p.vertices[0], inst.p.vertices[1]);
            Some((Method::Thomassen, color_thomassen(g, &inst.lists, xy)))
        }
        TheoremId::PrecoloredPath => Some((Method::Basic, color_basic(g, &inst.p, &inst.lists))),
        TheoremId::TwoCrossings if inst.drawing.crossing_count() <= 1 && inst.p.vertices.is_empty() => {
            Some((Method::OneCrossing, color_one_crossing(&inst.drawing, &inst.lists)))
        }
        _ => None,
    }
}

fn run_one(index: usize, label: String, inst: &Instance, theorem: TheoremId, options: RunOptions) -> Attempt {
    let (n, k) = (inst.n(), inst.drawing.crossing_count());
    match check_theorem(inst, theorem, &AssumeColorable) {
        Err(e) => return skipped(index, label, n, k, e.to_string()),
        Ok(r) if !r.passed() => return skipped(index, label, n, k, r.to_string()),
        Ok(_) => {}
    }
    let record = |outcome, method, nodes, coloring: Option<&Coloring>, detail: Option<String>| InstanceRecord {
        index,
        label: label.clone(),
        vertices: n,
        crossings: k,
        outcome,
        method,
        nodes,
        coloring: coloring.map(|c| c.0.clone()),
        detail,
    };
    let adj = inst.drawing.original_adjacency();
    let verified = |method, nodes, c: Coloring| match verify_coloring(&adj, &inst.lists, &c) {
        Ok(()) => Attempt { record: record(Outcome::Solved, Some(method), nodes, Some(&c), None), falsification: None },
        Err(d) => Attempt {
            record: record(Outcome::Solved, Some(method), nodes, Some(&c), Some(d.to_string())),
            falsification: Some((FalsificationKind::BadColoring, d.to_string())),
        },
    };

    if options.solver == SolverChoice::Constructive {
        match constructive(inst, theorem) {
            Some((method, Ok(c))) => return verified(method, None, c),
            Some((method, Err(e))) => {
                let detail = format!("{method:?}: {e}");
                return Attempt {
                    record: record(Outcome::Skipped, Some(method), None, None, Some(detail.clone())),
                    falsification: Some((FalsificationKind::SolverError, detail)),
                };
            }
            None => {}
        }
    }
    let r = solve_exact_with_limit(&adj, &inst.lists, options.node_limit);
    let nodes = Some(r.stats.nodes);
    match (r.outcome(), r.coloring) {
        (SearchOutcome::Colorable, Some(c)) => verified(Method::Oracle, nodes, c),
        (SearchOutcome::Limit, _) => Attempt {
            record: record(Outcome::Limit, Some(Method::Oracle), nodes, None, Some("node limit reached".into())),
            falsification: None,
        },
        _ => Attempt {
            record: record(Outcome::Uncolorable, Some(Method::Oracle), nodes, None, None),
            falsification: Some((FalsificationKind::Uncolorable, "no proper coloring from the lists".into())),
        },
    }
}

/// A batch item whose lists have been emptied at vertex 0, so it fails any
/// list-size hypothesis. Used as a control.
pub fn corrupt(mut inst: Instance) -> Instance {
    inst.lists.set(0, Default::default());
    inst.p = Walk::default();
    inst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::gen::{Family, ListProfile};

    fn specs(family: Family, lists: ListProfile, count: u64) -> Vec<GenSpec> {
        (0..count).map(|seed| GenSpec { family: family.clone(), lists: lists.clone(), palette: 7, seed }).collect()
    }

    #[test]
    fn precolored_path_batch_is_solved() {
        let s = specs(Family::Triangulation { n: 14, crossings: 0 }, ListProfile::PrecoloredPath { length: 2 }, 40);
        let r = run_experiment(&s, TheoremId::PrecoloredPath, SolverChoice::Constructive);
        assert_eq!(r.summary.solved, 40);
        assert!(r.summary.falsifications.is_empty());
        assert!(r.instances.iter().all(|i| i.method == Some(Method::Basic)));
    }

    #[test]
    fn one_crossing_batch_uses_the_crossing_solver() {
        let s = specs(Family::Triangulation { n: 12, crossings: 1 }, ListProfile::Uniform { size: 5 }, 20);
        let r = run_experiment(&s, TheoremId::TwoCrossings, SolverChoice::Constructive);
        assert_eq!(r.summary.solved, 20);
        assert!(r.instances.iter().all(|i| i.method == Some(Method::OneCrossing)));
    }

    #[test]
    fn corrupted_instance_is_skipped() {
        let s = specs(Family::Triangulation { n: 10, crossings: 0 }, ListProfile::Uniform { size: 5 }, 3);
        let mut items: Vec<(String, Instance)> =
            s.iter().map(|s| (format!("{}", s.seed), gen_instance(s).unwrap())).collect();
        items[1].1 = corrupt(items[1].1.clone());
        let r = run_instances(items, TheoremId::TwoCrossings, RunOptions::default());
        assert_eq!((r.summary.solved, r.summary.skipped), (2, 1));
        assert_eq!(r.instances[1].outcome, Outcome::Skipped);
        assert!(r.instances[1].detail.as_ref().unwrap().contains("five lists"));
        assert!(r.summary.falsifications.is_empty());
    }

    #[test]
    fn refused_spec_is_skipped() {
        let s = vec![GenSpec {
            family: Family::FarFours { spine: 12, ears: 0, n_vertices: 2, spacing: 10 },
            lists: ListProfile::Uniform { size: 5 },
            palette: 6,
            seed: 0,
        }];
        let r = run_experiment(&s, TheoremId::FarFours, SolverChoice::Oracle);
        assert_eq!(r.summary.skipped, 1);
    }

    #[test]
    fn json_has_stable_top_level_keys() {
        let s = specs(Family::Grid { rows: 3, cols: 3 }, ListProfile::Uniform { size: 5 }, 2);
        let r = run_experiment(&s, TheoremId::FarFours, SolverChoice::Oracle);
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["instances", "summary"]);
        assert_eq!(v["instances"][0]["outcome"], "SOLVED");
        assert_eq!(v["summary"]["solved"], 2);
    }
}
