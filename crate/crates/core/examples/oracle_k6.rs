//! The exact search: K6 with identical 5-lists has no coloring, and small
//! graphs can be tested for k-choosability outright.
//!
//! cargo run --example oracle_k6

use choosable::harness::gen::complete_adjacency;
use choosable::lists::ListAssignment;
use choosable::oracle::{is_choosable, solve_exact};

fn main() {
    let k6 = complete_adjacency(6);
    let res = solve_exact(&k6, &ListAssignment::uniform(6, 1..=5));
    println!("K6, lists {{1..5}}: {:?} after {} nodes", res.outcome(), res.stats.nodes);

    let res = solve_exact(&k6, &ListAssignment::uniform(6, 1..=6));
    println!("K6, lists {{1..6}}: {:?} {:?}", res.outcome(), res.coloring.map(|c| c.0));

    // K_{2,4} is not 2-choosable; C4 is.
    let c4 = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]];
    let k24: Vec<Vec<usize>> = (0..6).map(|v| if v < 2 { (2..6).collect() } else { vec![0, 1] }).collect();
    for (name, adj) in [("C4", c4), ("K2,4", k24)] {
        let ch = is_choosable(&adj, 2, 4).unwrap();
        println!("{name}: 2-choosable = {} ({} assignments)", ch.choosable, ch.assignments);
        if let Some(w) = ch.witness {
            println!("  bad lists: {:?}", w.as_slice());
        }
    }
}
