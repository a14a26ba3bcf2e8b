//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#[path = "support/quadrature.rs"]
mod quadrature;

use std::process::ExitCode;
use std::time::Instant;

use admissible::bounds::{self, Invariant};
use admissible::catalog::{self, Lengths};
use admissible::graph::{parse_graph, subdivide, wedge, PmGraph};
use admissible::invariants::{invariant_set, tau, tau_with_base, theta};
use admissible::poly::registry::{self, Expectation, Failure};
use admissible::rational::{format_rational, frac, int, Rational};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_equivalence() -> Check {
    let checks = catalog::check_all(100, 1).map_err(|e| e.to_string())?;
    ensure(checks.len() == 40, || format!("{} families checked", checks.len()))?;
    let failing: Vec<String> = checks
        .iter()
        .filter(|c| !c.failures.is_empty() || c.samples != 100)
        .map(|c| c.family.clone())
        .collect();
    ensure(failing.is_empty(), || format!("mismatches in {}", failing.join(", ")))?;
    Ok("40 families x 100 tuples, engine == closed form on every field".into())
}

fn tetrahedron_values() -> Check {
    let g = parse_graph(include_str!("../examples/data/k4.graph")).map_err(|e| e.to_string())?;
    let s = invariant_set(&g).map_err(|e| e.to_string())?;
    let expect = [
        ("tau", s.tau.clone(), frac(5, 16)),
        ("theta", s.theta.clone(), int(6)),
        ("phi", Invariant::Phi.of(&s), frac(17, 48)),
        ("epsilon", Invariant::Epsilon.of(&s), frac(11, 6)),
        ("lambda", Invariant::Lambda.of(&s), frac(75, 112)),
        ("delta1", s.delta(1), int(0)),
    ];
    for (name, got, want) in &expect {
        ensure(got == want, || format!("{name} = {}, expected {}", format_rational(got), format_rational(want)))?;
    }
    Ok("tau 5/16, theta 6, phi 17/48, epsilon 11/6, lambda 75/112, delta1 0".into())
}

fn identity_suite() -> Check {
    let certs = registry::verify_all();
    let bad: Vec<&str> = certs.iter().filter(|c| !c.as_expected()).map(|c| c.name.as_str()).collect();
    ensure(bad.is_empty(), || format!("unexpected outcome for {}", bad.join(", ")))?;
    for required in [
        "xiv.D_equals_M",
        "xiv.ellC",
        "xiv.tau_rewrite",
        "xiv.phi_rewrite",
        "xiv.case_I",
        "xiv.case_VIII",
        "xiv.T1_sub",
        "xiv.T8_sub",
        "viii.H_amhm",
        "xiii.H_amhm",
        "sym.equivalence",
        "xiv.tau_simplex",
    ] {
        ensure(certs.iter().any(|c| c.name == required), || format!("{required} missing"))?;
    }
    for probe in [
        "probe.xiv_tau_bound_as_printed",
        "probe.xiv_phi_simplex_as_printed",
        "probe.g3_IX_tau_as_printed",
    ] {
        let c = certs
            .iter()
            .find(|c| c.name == probe)
            .ok_or_else(|| format!("{probe} missing"))?;
        ensure(c.expectation == Expectation::Fails, || format!("{probe} is not a probe"))?;
        ensure(matches!(c.failure, Some(Failure::Witness { .. })), || {
            format!("{probe} has no witness point")
        })?;
    }
    let holds = certs.iter().filter(|c| c.expectation == Expectation::Holds).count();
    Ok(format!(
        "{holds} identities hold, {} probes fail as expected",
        certs.len() - holds
    ))
}

fn bound_suite() -> Check {
    let report = bounds::verify_bounds(None, None, bounds::DEFAULT_SEED).map_err(|e| e.to_string())?;
    for s in &report.samples {
        let need = if s.family == "g3.XIV" { 10_000 } else { 1_000 };
        ensure(s.samples >= need, || format!("{} sampled {} times", s.family, s.samples))?;
        ensure(s.passed(), || format!("{} {} violated at {:?}", s.family, s.invariant.name(), s.violation))?;
    }
    ensure(report.global.len() == 3, || "global floors missing".into())?;
    for g in &report.global {
        ensure(g.passed, || format!("global {} minimum {}", g.invariant.name(), format_rational(&g.minimum)))?;
    }
    for w in &report.witnesses {
        ensure(w.passed, || format!("witness {} {} ratio {}", w.family, w.invariant.name(), format_rational(&w.ratio)))?;
    }
    let tet = report.tetrahedron.as_ref().ok_or("tetrahedron certificates missing")?;
    ensure(tet.passed(), || format!("R/S certificate broken at {:?}", tet.violation))?;
    ensure(report.passed(), || "report did not pass".into())?;
    let mins: Vec<String> = report
        .global
        .iter()
        .map(|g| format!("{} {}", g.invariant.name(), format_rational(&g.minimum)))
        .collect();
    Ok(format!(
        "{} floors, {} witnesses exact; global minima {}",
        report.samples.len(),
        report.witnesses.len(),
        mins.join(", ")
    ))
}

fn random_lengths(id: &str, rng: &mut ChaCha8Rng) -> Lengths {
    let f = catalog::family(id).unwrap();
    f.params.iter().map(|&c| (c, frac(rng.gen_range(1..=48), rng.gen_range(1..=12)))).collect()
}

fn random_tree(rng: &mut ChaCha8Rng) -> PmGraph {
    let n = rng.gen_range(2..=8);
    let mut b = PmGraph::builder().vertex("v0", 0);
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        b = b
            .vertex(format!("v{i}"), 0)
            .edge(format!("e{i}"), format!("v{parent}"), format!("v{i}"), frac(rng.gen_range(1..40), 7));
    }
    b.build().unwrap()
}

fn random_circle(rng: &mut ChaCha8Rng) -> PmGraph {
    let k = rng.gen_range(1..=7);
    let mut b = PmGraph::builder();
    for i in 0..k {
        b = b.vertex(format!("v{i}"), 0);
    }
    for i in 0..k {
        b = b.edge(format!("e{i}"), format!("v{i}"), format!("v{}", (i + 1) % k), frac(rng.gen_range(1..40), 5));
    }
    b.build().unwrap()
}

fn property_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ids: Vec<&str> = catalog::families().iter().filter(|f| !f.degenerate).map(|f| f.id).collect();
    let err = |e: admissible::Error| e.to_string();
    let mut instances = 0;
    for round in 0..3 {
        for &id in &ids {
            let l = random_lengths(id, &mut rng);
            let g = catalog::build(id, &l).map_err(err)?;
            let at = || format!("{id} at {}", catalog::format_lengths(&l));
            let s = invariant_set(&g).map_err(err)?;

            let reference = tau_with_base(&g, 0).map_err(err)?;
            for base in 1..g.vertex_count() {
                ensure(tau_with_base(&g, base).map_err(err)? == reference, || format!("base dependence: {}", at()))?;
            }

            let edge = g.edges()[round % g.edge_count()].id.clone();
            let split = subdivide(&g, &edge, &frac(rng.gen_range(1..8), 8)).map_err(err)?;
            ensure(invariant_set(&split).map_err(err)? == s, || format!("subdivision: {}", at()))?;

            let other = ids[rng.gen_range(0..ids.len())];
            let h = catalog::build(other, &random_lengths(other, &mut rng)).map_err(err)?;
            let joined = wedge(&g, &g.vertices()[0].id, &h, &h.vertices()[0].id, "w.").map_err(err)?;
            ensure(tau(&joined).map_err(err)? == &s.tau + tau(&h).map_err(err)?, || format!("wedge with {other}: {}", at()))?;

            ensure(!theta(&g).map_err(err)?.is_negative(), || format!("negative theta: {}", at()))?;

            let (phi, lambda, epsilon, z) = (
                Invariant::Phi.of(&s),
                Invariant::Lambda.of(&s),
                Invariant::Epsilon.of(&s),
                s.z.clone().ok_or("Z missing")?,
            );
            let e_plus_l = &epsilon + &s.ell;
            ensure(lambda == &phi / int(21) + &e_plus_l / int(12), || format!("lambda identity: {}", at()))?;
            ensure(phi == z * int(9) - e_plus_l / int(4), || format!("phi identity: {}", at()))?;

            let t: Rational = frac(rng.gen_range(1..20), rng.gen_range(1..20));
            let scaled = invariant_set(&g.scaled(&t)).map_err(err)?;
            let fields = s.fields();
            for ((name, a), (_, b)) in fields.iter().zip(scaled.fields()) {
                let want = if name == "g" || name == "gbar" { a.clone() } else { a * &t };
                ensure(b == want, || format!("{name} does not scale: {}", at()))?;
            }
            instances += 1;
        }
    }
    for _ in 0..40 {
        let t = random_tree(&mut rng);
        ensure(tau(&t).map_err(err)? == t.total_length() / int(4), || "tree tau".into())?;
        let c = random_circle(&mut rng);
        ensure(tau(&c).map_err(err)? == c.total_length() / int(12), || "circle tau".into())?;
    }
    Ok(format!("{instances} catalog instances, 40 trees, 40 circles"))
}

fn quadrature_oracle() -> Check {
    let results = quadrature::compare_all();
    ensure(results.len() >= 5, || "too few graphs".into())?;
    let mut worst: f64 = 0.0;
    for (id, exact, numeric, rel) in &results {
        ensure(*rel <= 1e-9, || format!("{id}: exact {exact}, quadrature {numeric}, relative error {rel:e}"))?;
        worst = worst.max(*rel);
    }
    Ok(format!("{} graphs, worst relative error {worst:.1e}", results.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("catalog oracle equivalence", catalog_equivalence),
        ("tetrahedron spot values", tetrahedron_values),
        ("identity suite", identity_suite),
        ("bound suite", bound_suite),
        ("property suite", property_suite),
        ("independent tau oracle", quadrature_oracle),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
