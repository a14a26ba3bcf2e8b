//! The tetrahedron is where the global phi floor 17/288 is attained. Along
//! the way from an uneven tetrahedron to the regular one, `R` and `S` shrink
//! to zero and phi/ell falls to the floor; the engine's gaps match the
//! certificate quotients at every step.

use admissible::catalog::{self, parse_lengths, Lengths};
use admissible::invariant_set;
use admissible::poly::registry::named;
use admissible::rational::{format_rational, frac, int, one, to_f64};

fn main() -> admissible::Result<()> {
    let (r, s, c) = (named("xiv.R")?, named("xiv.S")?, named("xiv.C")?);
    let start = parse_lengths("a=3,b=1/2,c=2,d=1,e=5/4,f=1/3")?;
    println!("{:>8} {:>14} {:>14} {:>12}", "t", "R", "S", "phi/ell");
    for k in 0..=6 {
        let t = frac(1, 1 << k) - frac(1, 64);
        let t = if k == 6 { int(0) } else { t };
        // lengths = t * start + (1 - t) * 1
        let lengths: Lengths = start.iter().map(|(&p, v)| (p, &t * v + (one() - &t))).collect();
        let set = invariant_set(&catalog::build("g3.XIV", &lengths)?)?;
        let phi = set.phi.clone().expect("genus 3");
        let (rv, sv, cv) = (r.evaluate_at(&lengths), s.evaluate_at(&lengths), c.evaluate_at(&lengths));
        assert_eq!(&phi - &set.ell * frac(17, 288), &rv / (&cv * int(288)));
        assert_eq!(&set.tau - &set.ell * frac(5, 96), &sv / (&cv * int(96)));
        println!(
            "{:>8} {:>14.6e} {:>14.6e} {:>12.8}",
            format_rational(&t),
            to_f64(&rv),
            to_f64(&sv),
            to_f64(&(phi / &set.ell))
        );
    }
    println!("17/288 = {:.8}", 17.0 / 288.0);
    Ok(())
}
