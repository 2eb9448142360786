//! Colors part of a graph, reduces the rest, solves the reduced instance and
//! composes the two colorings.
//!
//! cargo run --example reduce_partial_coloring

use std::collections::BTreeMap;

use choosable::harness::gen::wheel;
use choosable::lists::{verify_coloring, ListAssignment};
use choosable::oracle::solve_exact;
use choosable::plane::Walk;
use choosable::solver::reduce_by_partial_coloring;

fn main() {
    // Wheel with rim 0..5 and hub 6; rim vertices 0 and 1 are precolored.
    let g = wheel(6);
    let mut lists = ListAssignment::uniform(7, 1..=5);
    lists.set(0, [1].into());
    lists.set(1, [2].into());
    let p = Walk::path(vec![0, 1]);

    // Color the hub first.
    let phi = BTreeMap::from([(6, 3)]);
    let red = reduce_by_partial_coloring(&g, &lists, &p, &phi).unwrap();
    println!("removed {:?}; R_z = {:?}", red.removed, red.r_z);
    for (i, &v) in red.subgraph.host.iter().enumerate() {
        println!("  {v}: {:?} -> {:?}", lists.get(v), red.lists.get(i));
    }

    let psi = solve_exact(&red.subgraph.graph.adjacency(), &red.lists).coloring.expect("reduced instance is colorable");
    let full = red.compose(&psi);
    verify_coloring(&g.adjacency(), &lists, &full).unwrap();
    println!("composed coloring: {:?}", full.as_slice());
}
