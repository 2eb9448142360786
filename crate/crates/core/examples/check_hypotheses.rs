//! Checks instance files against each theorem's hypotheses and prints the
//! violated conditions with their witnesses.
//!
//! cargo run --example check_hypotheses -- FILE...
//! (defaults to the test corpus)

use std::path::PathBuf;

use choosable::format::parse_instance;
use choosable::validity::{check_theorem, confirm_witness, AssumeColorable, TheoremId};

fn main() {
    let mut files: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    if files.is_empty() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
        files = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
        files.sort();
    }
    for f in files {
        let inst = parse_instance(&std::fs::read_to_string(&f).unwrap()).unwrap();
        println!("{} (n = {}, crossings = {})", f.display(), inst.n(), inst.drawing.crossing_count());
        for t in TheoremId::ALL {
            match check_theorem(&inst, t, &AssumeColorable) {
                Err(e) => println!("  {:<16} n/a: {e}", t.name()),
                Ok(r) if r.passed() => println!("  {:<16} ok", t.name()),
                Ok(r) => {
                    println!("  {:<16} violated", t.name());
                    for c in r.failures() {
                        let shown: Vec<String> = c.violations.iter().take(3).map(|w| w.to_string()).collect();
                        let reproduced = c.violations.iter().filter(|w| confirm_witness(&inst, c.condition, w)).count();
                        println!("    {}: {} ({reproduced} reproduced)", c.condition.label(), shown.join("; "));
                    }
                }
            }
        }
    }
}
