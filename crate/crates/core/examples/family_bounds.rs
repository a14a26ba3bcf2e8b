//! Samples one family and reports how close each invariant gets to its floor.
//!
//! ```text
//! cargo run --release --example family_bounds -- g2.III 2000
//! ```

use admissible::bounds::{bound_table, family_samples, witness_check, Invariant};
use admissible::catalog::format_lengths;
use admissible::rational::{format_rational, to_f64, Rational};

fn main() -> admissible::Result<()> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "g2.III".into());
    let samples: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(500);

    let data = family_samples(&id, samples, 7)?;
    for spec in bound_table().iter().filter(|s| s.family == id) {
        let (min, at) = data
            .iter()
            .map(|(l, set)| (spec.invariant.of(set) / &set.ell, l))
            .min_by(|x, y| x.0.cmp(&y.0))
            .expect("at least one sample");
        let gap: Rational = &min - &spec.floor;
        println!(
            "{:<8} floor {:>8}  min {:>14} (~{:.6}, gap {:.2e}) at {}",
            spec.invariant.name(),
            format_rational(&spec.floor),
            format_rational(&min),
            to_f64(&min),
            to_f64(&gap),
            format_lengths(at)
        );
        if spec.witness.is_some() {
            let w = witness_check(spec)?;
            println!("         witness {} gives exactly {}", format_lengths(&w.witness.lengths), format_rational(&w.ratio));
        }
    }
    if !bound_table().iter().any(|s| s.family == id && s.invariant == Invariant::Phi) {
        println!("no phi floor is tabulated for {id}");
    }
    Ok(())
}
