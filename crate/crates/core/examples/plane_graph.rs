//! Embeds a graph from coordinates, walks its faces and cuts it along a
//! cycle and a chord.
//!
//! cargo run --example plane_graph

use choosable::harness::gen::from_coordinates;
use choosable::plane::Walk;

fn main() {
    // A square 0 1 2 3 with a center 4 joined to every corner.
    let points = [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0), (1.0, 1.0)];
    let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)];
    let g = from_coordinates(&points, &edges);
    println!("n = {}, m = {}, faces = {}", g.n(), g.edge_count(), g.trace_faces().len());
    g.check_euler().expect("traced embedding satisfies Euler");
    for v in 0..g.n() {
        println!("rotation of {v}: {:?}", g.rotation(v));
    }
    let outer = g.outer_cycle().expect("2-connected");
    println!("outer cycle: {:?}", outer.vertices);

    for order in 1..=2 {
        for q in g.k_chords(&outer, order).unwrap() {
            let (a, b) = g.q_components(&outer, &q).unwrap();
            println!("{order}-chord {:?}: sides {:?} / {:?}", q.vertices, a.host_vertices(), b.host_vertices());
        }
    }

    let link = Walk::cycle(vec![0, 1, 4]);
    let (inside, outside) = g.split_at_cycle(&link).unwrap();
    println!("inside of {:?}: {:?}", link.vertices, inside.host_edges());
    println!("outside: {:?}", outside.host_edges());
}
