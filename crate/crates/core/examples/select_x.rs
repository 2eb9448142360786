//! The rule that picks which outer vertices to color next, shown on a few
//! list-size patterns.
//!
//! cargo run --example select_x

use choosable::lists::ColorSet;
use choosable::solver::{select_x, OuterContext};

fn list(colors: &[u32]) -> ColorSet {
    colors.iter().copied().collect()
}

fn main() {
    // (lists of v1..v4, v1 v2 v3 share a neighbor, v1 v2 crossing-adjacent)
    let patterns: [([&[u32]; 4], bool, bool); 8] = [
        ([&[1, 2, 3], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5], &[2, 3, 4]], false, false),
        ([&[1, 2, 3], &[2, 3, 4, 5], &[2, 3, 4], &[1, 2, 3]], false, false),
        ([&[1, 2, 3, 4, 5], &[1, 2, 3], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5]], false, false),
        ([&[1, 2, 3, 4, 5], &[1, 2, 3], &[2, 3, 4, 5], &[3, 4, 5]], false, false),
        ([&[1, 2, 3, 4], &[1, 2, 3], &[2, 3, 4, 5], &[3, 4, 5]], true, false),
        ([&[1, 2, 3, 4], &[1, 2, 3, 4], &[1, 2, 3, 4, 5], &[1, 2, 3]], false, true),
        ([&[1, 2, 3, 4], &[1, 2, 3, 4], &[2, 3, 4], &[1, 2, 3, 4, 5]], false, true),
        ([&[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5], &[1, 2, 3], &[1, 2, 3, 4, 5]], false, false),
    ];
    for (lists, common_neighbor, crossing_adjacent) in patterns {
        let ctx = OuterContext {
            p0: 0,
            v: [1, 2, 3, 4],
            list_p0: list(&[1]),
            lists: lists.map(list),
            common_neighbor,
            crossing_adjacent,
        };
        let sizes = lists.map(|l| l.len());
        match select_x(&ctx) {
            Ok(s) => println!("sizes {sizes:?}: {:?} colors {:?}", s.rule, s.coloring),
            Err(e) => println!("sizes {sizes:?}: {e}"),
        }
    }
}
