//! Generates one instance per family, colors it and writes SVG drawings.
//!
//! cargo run --example generate_and_render -- [OUT_DIR]

use std::path::PathBuf;

use choosable::format::serialize_instance;
use choosable::harness::gen::{gen_instance, Family, GenSpec, ListProfile};
use choosable::harness::svg::render_svg;
use choosable::oracle::solve_exact;

fn main() {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("choosable-svg"));
    std::fs::create_dir_all(&out).unwrap();
    let families = [
        ("triangulation", Family::Triangulation { n: 18, crossings: 1 }),
        ("grid", Family::Grid { rows: 4, cols: 6 }),
        ("wheel_stack", Family::WheelStack { rim: 8, rings: 3 }),
        ("near_planar", Family::NearPlanar { rows: 16, cols: 16, crossings: 1, n_vertices: 1 }),
        ("n_set", Family::FarFours { spine: 24, ears: 4, n_vertices: 2, spacing: 11 }),
    ];
    for (name, family) in families {
        let spec = GenSpec { family, lists: ListProfile::Uniform { size: 5 }, palette: 7, seed: 11 };
        let inst = gen_instance(&spec).unwrap();
        let coloring = solve_exact(&inst.drawing.original_adjacency(), &inst.lists).coloring;
        let svg = render_svg(&inst, coloring.as_ref());
        std::fs::write(out.join(format!("{name}.svg")), svg).unwrap();
        std::fs::write(out.join(format!("{name}.inst")), serialize_instance(&inst)).unwrap();
        println!("{name}: n = {}, colored = {}", inst.n(), coloring.is_some());
    }
    println!("wrote {}", out.display());
}
