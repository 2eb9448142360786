//! Runs a seeded batch through hypothesis checks, the constructive solver
//! and the exact oracle, then prints the JSON summary.
//!
//! cargo run --release --example run_batch -- [count]

use choosable::harness::experiment::{run_experiment, Outcome, SolverChoice};
use choosable::harness::gen::{Family, GenSpec, ListProfile};
use choosable::validity::TheoremId;

fn main() {
    let count: u64 = std::env::args().nth(1).map(|s| s.parse().expect("count")).unwrap_or(50);
    let specs: Vec<GenSpec> = (0..count)
        .map(|seed| GenSpec {
            family: Family::Triangulation { n: 10 + (seed as usize % 30), crossings: 0 },
            lists: ListProfile::Thomassen,
            palette: 8,
            seed,
        })
        .collect();
    for solver in [SolverChoice::Constructive, SolverChoice::Oracle] {
        let report = run_experiment(&specs, TheoremId::Thomassen, solver);
        assert_eq!(report.count(Outcome::Uncolorable), 0);
        println!("{}", serde_json::to_string_pretty(&report.summary).unwrap());
    }
}
