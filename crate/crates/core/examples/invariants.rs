//! Reads a graph file and prints its invariants.
//!
//! ```text
//! cargo run --example invariants -- crates/core/examples/data/k4.graph
//! ```

use std::env;
use std::fs;

use admissible::graph::{genus, parse_graph, validate};
use admissible::invariants::invariant_set;
use admissible::rational::{format_rational, to_f64};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/k4.graph").to_string());
    let g = parse_graph(&fs::read_to_string(&path)?)?;
    validate(&g).into_result()?;

    let gd = genus(&g);
    println!("{path}: {} vertices, {} edges, {gd:?}", g.vertex_count(), g.edge_count());
    let set = invariant_set(&g)?;
    for (name, value) in set.fields() {
        if name == "g" || name == "gbar" {
            continue;
        }
        println!("  {name:<8} {:>16}   {:.6}", format_rational(&value), to_f64(&value));
    }
    if set.phi.is_none() {
        println!("  (total genus is not 3, so the Zhang invariants are left out)");
    }
    Ok(())
}
