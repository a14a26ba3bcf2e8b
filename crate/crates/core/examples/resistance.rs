//! Effective resistances and the bridge classification that feeds delta.

use admissible::graph::parse_graph;
use admissible::invariants::delta;
use admissible::rational::format_rational;
use admissible::resistance::{classify_edges, resistance_matrix, EdgeKind};

const DUMBBELL: &str = "\
# two loops joined by a bridge, genus 1 on one side
vertex x q=1
vertex y
edge left x x 2
edge bar x y 3/2
edge right y y 1
";

fn main() -> admissible::Result<()> {
    for (name, text) in [("theta", include_str!("data/theta.graph")), ("dumbbell", DUMBBELL)] {
        let g = parse_graph(text)?;
        let r = resistance_matrix(&g)?;
        println!("{name}:");
        for (i, id) in r.ids().iter().enumerate() {
            let row: Vec<String> = (0..r.ids().len()).map(|j| format_rational(r.get(i, j))).collect();
            println!("  r({id}, .) = [{}]", row.join(", "));
        }
        for (edge, kind) in &classify_edges(&g, &r)?.kinds {
            match kind {
                EdgeKind::TypeZero => println!("  {edge}: not a bridge"),
                EdgeKind::Bridge { sides, type_index } => {
                    println!("  {edge}: bridge splitting genus {} | {}, type {type_index}", sides.0, sides.1)
                }
            }
        }
        let d: Vec<String> = delta(&g)?.iter().map(|(i, v)| format!("delta{i} = {}", format_rational(v))).collect();
        println!("  {}", d.join(", "));
    }
    Ok(())
}
