//! Every catalog family at unit lengths, with the ratios that the lower
//! bounds are stated in.

use admissible::bounds::Invariant;
use admissible::catalog::{self, uniform_lengths};
use admissible::rational::{format_rational, one};

fn main() -> admissible::Result<()> {
    println!("{:<8} {:>3} {:>6} {:>12} {:>12} {:>12}", "family", "e", "params", "phi/ell", "lambda/ell", "eps/ell");
    for f in catalog::families() {
        if f.degenerate {
            println!("{:<8} (a single point, no edges)", f.id);
            continue;
        }
        let lengths = uniform_lengths(f, &one());
        let g = f.build(&lengths)?;
        let engine = admissible::invariant_set(&g)?;
        // The engine and the closed form agree exactly; print either one.
        assert_eq!(engine, f.closed_form(&lengths)?);
        let ratio = |inv: Invariant| format_rational(&(inv.of(&engine) / &engine.ell));
        println!(
            "{:<8} {:>3} {:>6} {:>12} {:>12} {:>12}",
            f.id,
            g.edge_count(),
            f.params.iter().collect::<String>(),
            ratio(Invariant::Phi),
            ratio(Invariant::Lambda),
            ratio(Invariant::Epsilon),
        );
    }
    Ok(())
}
