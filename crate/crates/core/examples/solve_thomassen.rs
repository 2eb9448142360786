//! Colors a random near-triangulation from lists of size 5 inside and 3 on
//! the outer face, with one precolored outer edge.
//!
//! cargo run --example solve_thomassen -- [n] [seed]

use choosable::harness::gen::{near_triangulation, random_outer_path, relabel_random, rng, thomassen_lists};
use choosable::lists::verify_coloring;
use choosable::solver::color_thomassen;
use choosable::validity::check_thomassen;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("numeric argument"));
    let n = args.next().unwrap_or(30) as usize;
    let seed = args.next().unwrap_or(1);

    let mut r = rng(seed);
    let g = relabel_random(&near_triangulation(n, (n / 3).max(3), &mut r), &mut r);
    let xy = random_outer_path(&g, 1, &mut r).expect("outer edge");
    let lists = thomassen_lists(&g, &xy, 8, &mut r);
    let report = check_thomassen(&g, (xy[0], xy[1]), &lists).unwrap();
    println!("hypotheses:\n{report}");

    let coloring = color_thomassen(&g, &lists, (xy[0], xy[1])).expect("hypotheses hold");
    verify_coloring(&g.adjacency(), &lists, &coloring).expect("proper and from the lists");
    for v in 0..g.n() {
        println!("{v:>3} {:?} -> {}", lists.get(v), coloring.color(v));
    }
}
