//! Exact tau against numeric quadrature of its integral formula.

#[path = "support/quadrature.rs"]
mod quadrature;

#[test]
fn quadrature_agrees_with_exact_tau() {
    let results = quadrature::compare_all();
    assert!(results.len() >= 5);
    for (id, exact, numeric, rel) in results {
        assert!(rel <= 1e-9, "{id}: exact {exact}, quadrature {numeric}, relative error {rel:e}");
    }
}

#[test]
fn quadrature_sees_a_wrong_answer() {
    // The oracle must be able to fail: a circle is not a tree.
    let g = admissible::catalog::build("g1.I", &admissible::catalog::parse_lengths("a=1").unwrap()).unwrap();
    let numeric = quadrature::tau_by_quadrature(&g);
    assert!((numeric - 1.0 / 12.0).abs() < 1e-12);
    assert!((numeric - 1.0 / 4.0).abs() > 0.1);
}
