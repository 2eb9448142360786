//! Constructive solvers on random instances, cross-checked by the oracle on
//! small ones. `STRESS_ROUNDS` scales the number of instances.

use choosable::drawing::Drawing;
use choosable::harness::gen::*;
use choosable::lists::{verify_coloring, ListAssignment};
use choosable::oracle::solve_exact;
use choosable::plane::Walk;
use choosable::solver::{color_basic, color_one_crossing, color_thomassen};
use choosable::validity::check_basic;

fn rounds(default: u64) -> u64 {
    std::env::var("STRESS_ROUNDS").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

#[test]
fn color_basic_on_random_near_triangulations() {
    let mut solved = 0;
    for seed in 0..rounds(300) {
        let mut r = rng(seed);
        let n = 4 + (seed % 20) as usize;
        let k = 3 + (seed as usize * 7) % (n - 2);
        let mut g = near_triangulation(n, k, &mut r);
        if seed % 3 == 0 {
            g = sparsify(&g, 0.5, &mut r);
        }
        let g = relabel_random(&g, &mut r);
        let len = (seed % 3) as usize;
        let Some(p) = random_outer_path(&g, len, &mut r) else { continue };
        let lists = basic_lists(&g, &p, 6, &mut r);
        let walk = Walk::path(p);
        if !check_basic(&g, &walk, &lists).unwrap().passed() {
            continue;
        }
        let c = color_basic(&g, &walk, &lists).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(verify_coloring(&g.adjacency(), &lists, &c).is_ok());
        solved += 1;
    }
    assert!(solved > 0);
}

#[test]
fn color_thomassen_on_random_near_triangulations() {
    for seed in 0..rounds(300) {
        let mut r = rng(seed);
        let n = 3 + (seed % 25) as usize;
        let k = 3 + (seed as usize * 5) % (n - 2);
        let mut g = near_triangulation(n, k, &mut r);
        if seed % 2 == 0 {
            g = sparsify(&g, 0.4, &mut r);
        }
        let g = relabel_random(&g, &mut r);
        let p = random_outer_path(&g, 1, &mut r).unwrap();
        let lists = thomassen_lists(&g, &p, 5, &mut r);
        let c = color_thomassen(&g, &lists, (p[0], p[1])).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(verify_coloring(&g.adjacency(), &lists, &c).is_ok());
    }
}

#[test]
fn color_one_crossing_on_random_triangulations() {
    for seed in 0..rounds(200) {
        let mut r = rng(seed);
        let n = 5 + (seed % 30) as usize;
        let g = relabel_random(&near_triangulation(n, 3, &mut r), &mut r);
        let Ok(d) = plant_crossings(&Drawing::planar(g), 1, &mut r, |_| true) else { continue };
        let lists = ListAssignment::new((0..n).map(|_| random_list(7, 5, &mut r)).collect());
        let c = color_one_crossing(&d, &lists).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(verify_coloring(&d.original_adjacency(), &lists, &c).is_ok());
        if n <= 12 {
            assert!(solve_exact(&d.original_adjacency(), &lists).is_colorable());
        }
    }
}
