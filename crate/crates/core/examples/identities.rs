//! Runs the symbolic certificate registry and prints one line per identity.
//! Pass a name to see just one, e.g. `xiv.S_sum_of_squares`.

use admissible::poly::registry::{self, named};

fn main() -> admissible::Result<()> {
    let certs = match std::env::args().nth(1) {
        Some(name) => vec![registry::verify_identity(&name)?],
        None => registry::verify_all(),
    };
    for c in &certs {
        println!("{c}");
    }

    let (a, b, c) = (named("xiv.A")?, named("xiv.B")?, named("xiv.C")?);
    println!();
    println!("tetrahedral building blocks: A has {} terms, B {}, C {}", a.term_count(), b.term_count(), c.term_count());
    println!("C = {c}");

    let bad = certs.iter().filter(|c| !c.as_expected()).count();
    if bad > 0 {
        eprintln!("{bad} certificates did not behave as expected");
        std::process::exit(1);
    }
    Ok(())
}
