//! K5 drawn with one crossing is 5-choosable: builds the plane graph around
//! the crossing, precolors three of its corners and colors the rest.
//!
//! cargo run --example one_crossing_k5

use choosable::harness::gen::{k5_one_crossing, random_list, rng};
use choosable::lists::{verify_coloring, ListAssignment};
use choosable::solver::{color_one_crossing, one_crossing_reduction};

fn main() {
    let d = k5_one_crossing();
    let c = &d.crossings()[0];
    println!("crossing of {:?} and {:?} at dummy {}", c.e1, c.e2, c.dummy);

    let mut r = rng(3);
    let lists = ListAssignment::new((0..5).map(|_| random_list(7, 5, &mut r)).collect());
    let red = one_crossing_reduction(&d, &lists).unwrap();
    println!("reduced graph has {} edges; precolored path {:?}", red.graph.edge_count(), red.p.vertices);
    for v in 0..5 {
        println!("  {v}: {:?} -> {:?}", lists.get(v), red.lists.get(v));
    }

    let coloring = color_one_crossing(&d, &lists).unwrap();
    verify_coloring(&d.original_adjacency(), &lists, &coloring).unwrap();
    println!("coloring: {:?}", coloring.as_slice());
}
