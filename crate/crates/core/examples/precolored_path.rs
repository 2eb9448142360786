//! Extends a precoloring of an outer path of length two and prints the
//! reductions the solver took.
//!
//! cargo run --example precolored_path -- [seed]

use choosable::harness::gen::{basic_lists, near_triangulation, random_outer_path, rng};
use choosable::lists::verify_coloring;
use choosable::plane::Walk;
use choosable::solver::color_basic_traced;
use choosable::validity::check_basic;

fn main() {
    let seed = std::env::args().nth(1).map(|s| s.parse().expect("seed")).unwrap_or(7);
    let mut r = rng(seed);
    // Redraw until the random lists satisfy the hypotheses.
    let (g, p, lists) = loop {
        let g = near_triangulation(14, 9, &mut r);
        let p = random_outer_path(&g, 2, &mut r).unwrap();
        let lists = basic_lists(&g, &p, 6, &mut r);
        if check_basic(&g, &Walk::path(p.clone()), &lists).unwrap().passed() {
            break (g, Walk::path(p), lists);
        }
    };
    println!("path {:?}, outer cycle {:?}", p.vertices, g.outer_cycle().unwrap().vertices);

    let (coloring, trace) = color_basic_traced(&g, &p, &lists).unwrap();
    for step in &trace.steps {
        println!("{step:?}");
    }
    println!("selection rules used: {:?}", trace.rules());
    verify_coloring(&g.adjacency(), &lists, &coloring).unwrap();
    println!("coloring: {:?}", coloring.as_slice());
}
