//! The 41 pm-graphs of total genus 3, as length-parameterized constructors
//! paired with closed forms for their invariants.
//!
//! Families are keyed `g{genus}.{roman}`. Every edge carries one length
//! parameter and has the parameter letter as its id, so
//! `build("g3.XIV", ..)` yields a K4 whose edge `a` joins vertices `1` and
//! `2`.

mod families;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Signed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Dsu, PmGraph};
use crate::invariants::{invariant_set, InvariantSet};
use crate::poly::registry::{self, Failure};
use crate::poly::{parse_ratfn, Bindings, Polynomial, RatFn};
use crate::rational::{format_rational, frac, int, parse_rational, Rational};

use families::{FamilyDef, Forms, FAMILIES};

/// Named length assignment, e.g. `{a: 1, b: 2/3}`.
pub type Lengths = BTreeMap<char, Rational>;

/// Static description of one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub id: &'static str,
    /// First Betti number of the underlying graph.
    pub genus: u32,
    pub params: Vec<char>,
    /// Only the single point `g0.I`, whose total length is zero.
    pub degenerate: bool,
}

impl FamilySpec {
    pub fn build(&self, lengths: &Lengths) -> Result<PmGraph> {
        build(self.id, lengths)
    }

    pub fn closed_form(&self, lengths: &Lengths) -> Result<InvariantSet> {
        closed_form(self.id, lengths)
    }
}

fn spec_of(def: &FamilyDef) -> FamilySpec {
    let genus = def.id[1..2].parse().expect("id starts with g<digit>");
    FamilySpec {
        id: def.id,
        genus,
        params: def.edges.iter().map(|e| e.0).collect(),
        degenerate: def.edges.is_empty(),
    }
}

pub fn families() -> &'static [FamilySpec] {
    static SPECS: OnceLock<Vec<FamilySpec>> = OnceLock::new();
    SPECS.get_or_init(|| FAMILIES.iter().map(spec_of).collect())
}

pub fn list_families() -> Vec<&'static str> {
    families().iter().map(|f| f.id).collect()
}

pub fn family(id: &str) -> Result<&'static FamilySpec> {
    families()
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

fn def(id: &str) -> Result<(usize, &'static FamilyDef)> {
    FAMILIES
        .iter()
        .enumerate()
        .find(|(_, d)| d.id == id)
        .ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

/// Checks that `lengths` names exactly the parameters of `id`. With
/// `allow_zero`, zero lengths pass (used for limits on the boundary).
fn check_lengths(id: &str, params: &[char], lengths: &Lengths, allow_zero: bool) -> Result<()> {
    for &p in params {
        let value = lengths.get(&p).ok_or_else(|| Error::MissingParameter {
            family: id.to_string(),
            param: p,
        })?;
        let bad = if allow_zero {
            value.is_negative()
        } else {
            !value.is_positive()
        };
        if bad {
            return Err(Error::NonPositiveParameter {
                param: p,
                value: format_rational(value),
            });
        }
    }
    if let Some(extra) = lengths.keys().find(|c| !params.contains(c)) {
        return Err(Error::UnknownVariable(extra.to_string()));
    }
    Ok(())
}

/// The pm-graph of family `id` with the given edge lengths.
pub fn build(id: &str, lengths: &Lengths) -> Result<PmGraph> {
    let (_, d) = def(id)?;
    let spec = family(id)?;
    check_lengths(id, &spec.params, lengths, false)?;
    let mut builder = PmGraph::builder();
    for &(v, q) in d.vertices {
        builder = builder.vertex(v, q);
    }
    for &(p, u, v) in d.edges {
        builder = builder.edge(p.to_string(), u, v, lengths[&p].clone());
    }
    builder.build()
}

/// Closed forms of one family as rational functions of its lengths.
struct Parsed {
    ell: RatFn,
    delta0: RatFn,
    delta1: RatFn,
    tau: RatFn,
    theta: RatFn,
    phi: RatFn,
    lambda: RatFn,
    epsilon: RatFn,
}

fn bindings_for(d: &FamilyDef) -> Bindings {
    let mut b = Bindings::new();
    for &(name, src) in d.bindings {
        let value = parse_ratfn(src, &b).unwrap_or_else(|e| panic!("{} {name}: {e}", d.id));
        b.insert(name, value);
    }
    let ell = if d.forms.ell.is_empty() {
        d.edges.iter().map(|e| e.0.to_string()).collect::<Vec<_>>().join(" + ")
    } else {
        d.forms.ell.to_string()
    };
    b.insert('L', parse_ratfn(&ell, &b).unwrap_or_else(|e| panic!("{} ell: {e}", d.id)));
    b
}

fn parse_forms(d: &FamilyDef, forms: &Forms) -> Parsed {
    let b = bindings_for(d);
    let p = |src: &str| parse_ratfn(src, &b).unwrap_or_else(|e| panic!("{}: {src}: {e}", d.id));
    let ell = b[&'L'].clone();
    let delta1 = p(forms.delta1);
    let delta0 = match forms.delta0 {
        Some(src) => p(src),
        None => &ell - &delta1,
    };
    Parsed {
        delta0,
        delta1,
        tau: p(forms.tau),
        theta: p(forms.theta),
        phi: p(forms.phi),
        lambda: p(forms.lambda),
        epsilon: p(forms.epsilon),
        ell,
    }
}

fn parsed(index: usize) -> &'static Parsed {
    static PARSED: OnceLock<Vec<Parsed>> = OnceLock::new();
    &PARSED.get_or_init(|| FAMILIES.iter().map(|d| parse_forms(d, &d.forms)).collect())[index]
}

fn evaluate(spec: &FamilySpec, forms: &Parsed, lengths: &Lengths) -> Result<InvariantSet> {
    let at = |f: &RatFn| f.evaluate_at(lengths);
    let ell = at(&forms.ell)?;
    let phi = at(&forms.phi)?;
    let epsilon = at(&forms.epsilon)?;
    // The tables list phi, lambda and epsilon; Z follows from
    // phi = 9Z - (epsilon + ell)/4.
    let z = (&phi + (&epsilon + &ell) / int(4)) / int(9);
    let mut delta = BTreeMap::new();
    delta.insert(0, at(&forms.delta0)?);
    delta.insert(1, at(&forms.delta1)?);
    Ok(InvariantSet {
        g: spec.genus,
        gbar: 3,
        tau: at(&forms.tau)?,
        theta: at(&forms.theta)?,
        delta,
        phi: Some(phi),
        lambda: Some(at(&forms.lambda)?),
        epsilon: Some(epsilon),
        z: Some(z),
        ell,
    })
}

/// The tabulated invariants of family `id` at `lengths`.
pub fn closed_form(id: &str, lengths: &Lengths) -> Result<InvariantSet> {
    let (index, _) = def(id)?;
    let spec = family(id)?;
    check_lengths(id, &spec.params, lengths, false)?;
    evaluate(spec, parsed(index), lengths)
}

/// Like [`closed_form`], but zero lengths are allowed. This evaluates the
/// continuous extension at a boundary point of the parameter space, and
/// fails with `DivisionByZero` where no such value exists.
pub fn closed_form_at_boundary(id: &str, lengths: &Lengths) -> Result<InvariantSet> {
    let (index, _) = def(id)?;
    let spec = family(id)?;
    check_lengths(id, &spec.params, lengths, true)?;
    evaluate(spec, parsed(index), lengths)
}

/// The closed forms exactly as typeset. They differ from [`closed_form`]
/// only in the tau entry of `g3.IX`.
pub fn closed_form_as_printed(id: &str, lengths: &Lengths) -> Result<InvariantSet> {
    let (index, d) = def(id)?;
    let spec = family(id)?;
    check_lengths(id, &spec.params, lengths, false)?;
    if id != "g3.IX" {
        return evaluate(spec, parsed(index), lengths);
    }
    let printed = Forms {
        tau: families::G3_IX_TAU_PRINTED,
        ..d.forms
    };
    evaluate(spec, &parse_forms(d, &printed), lengths)
}

/// Engine output against the closed form for one length tuple.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub family: String,
    pub lengths: String,
    pub engine: InvariantSet,
    pub closed_form: InvariantSet,
    /// Fields that differ; empty on success.
    pub mismatches: Vec<String>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn report(id: &str, lengths: &Lengths, expected: InvariantSet) -> Result<CrossCheck> {
    let engine = invariant_set(&build(id, lengths)?)?;
    Ok(CrossCheck {
        family: id.to_string(),
        lengths: format_lengths(lengths),
        mismatches: engine.differences(&expected),
        engine,
        closed_form: expected,
    })
}

/// Computes the invariants of `build(id, lengths)` with the engine and
/// compares every field exactly with [`closed_form`].
pub fn cross_check(id: &str, lengths: &Lengths) -> Result<CrossCheck> {
    report(id, lengths, closed_form(id, lengths)?)
}

/// [`cross_check`] against [`closed_form_as_printed`].
pub fn cross_check_as_printed(id: &str, lengths: &Lengths) -> Result<CrossCheck> {
    report(id, lengths, closed_form_as_printed(id, lengths)?)
}

pub fn format_lengths(lengths: &Lengths) -> String {
    lengths
        .iter()
        .map(|(c, v)| format!("{c}={}", format_rational(v)))
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses `a=1,b=2/3,c=0.5`. An empty string gives no lengths.
pub fn parse_lengths(text: &str) -> Result<Lengths> {
    let mut out = Lengths::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidRational(part.to_string()))?;
        let mut chars = name.trim().chars();
        let c = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => return Err(Error::UnknownVariable(name.trim().to_string())),
        };
        if out.insert(c, parse_rational(value.trim())?).is_some() {
            return Err(Error::DuplicateId(c.to_string()));
        }
    }
    Ok(out)
}

/// Every parameter of `spec` set to `value`.
pub fn uniform_lengths(spec: &FamilySpec, value: &Rational) -> Lengths {
    spec.params.iter().map(|&c| (c, value.clone())).collect()
}

/// Denominator of sampled lengths.
pub const SAMPLE_DENOMINATOR: i64 = 64;
/// Largest sampled numerator, so lengths lie in `(0, 4]`.
pub const SAMPLE_MAX_NUMERATOR: i64 = 256;

/// A random positive length tuple `n / 64` with `1 <= n <= 256`.
pub fn sample_lengths(spec: &FamilySpec, rng: &mut impl Rng) -> Lengths {
    spec.params
        .iter()
        .map(|&c| {
            let n = rng.gen_range(1..=SAMPLE_MAX_NUMERATOR);
            (c, frac(n, SAMPLE_DENOMINATOR))
        })
        .collect()
}

/// The generator for family `id` under `seed`: one ChaCha8 stream per
/// family, so results do not depend on which families are run.
pub fn family_rng(id: &str, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let index = FAMILIES.iter().position(|d| d.id == id).unwrap_or(usize::MAX);
    rng.set_stream(index as u64);
    rng
}

/// Outcome of [`check_family`].
#[derive(Clone, Debug, Serialize)]
pub struct FamilyCheck {
    pub family: String,
    pub samples: usize,
    pub seed: u64,
    pub failures: Vec<CrossCheck>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Cross-checks `samples` random tuples (a single empty tuple for `g0.I`).
pub fn check_family(id: &str, samples: usize, seed: u64) -> Result<FamilyCheck> {
    let spec = family(id)?;
    let mut rng = family_rng(id, seed);
    let tuples: Vec<Lengths> = if spec.degenerate {
        vec![Lengths::new()]
    } else {
        (0..samples).map(|_| sample_lengths(spec, &mut rng)).collect()
    };
    let checks: Result<Vec<CrossCheck>> = tuples.par_iter().map(|l| cross_check(id, l)).collect();
    Ok(FamilyCheck {
        family: id.to_string(),
        samples: tuples.len(),
        seed,
        failures: checks?.into_iter().filter(|c| !c.passed()).collect(),
    })
}

/// [`check_family`] for all non-degenerate families, in catalog order.
pub fn check_all(samples: usize, seed: u64) -> Result<Vec<FamilyCheck>> {
    families()
        .par_iter()
        .filter(|f| !f.degenerate)
        .map(|f| check_family(f.id, samples, seed))
        .collect()
}

/// `Σ_T Π_{e ∉ T} x_e` over the spanning trees `T` of `g`, where `x_e` is
/// the variable named by the edge id.
pub fn complement_spanning_tree_polynomial(g: &PmGraph) -> Result<Polynomial> {
    let n = g.vertex_count();
    let edges = g.edges();
    let vars: Vec<Polynomial> = edges
        .iter()
        .map(|e| {
            let mut chars = e.id.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Polynomial::named_var(c),
                _ => Err(Error::UnknownVariable(e.id.clone())),
            }
        })
        .collect::<Result<_>>()?;
    let m = edges.len();
    assert!(m < 32, "spanning tree enumeration over {m} edges");
    let mut out = Polynomial::zero();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize + 1 != n {
            continue;
        }
        let mut dsu = Dsu::new(n);
        let forest = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .all(|i| dsu.union(edges[i].u, edges[i].v));
        if !forest {
            continue;
        }
        let mut term = Polynomial::one();
        for (i, x) in vars.iter().enumerate() {
            if mask & (1 << i) == 0 {
                term = &term * x;
            }
        }
        out = out + term;
    }
    Ok(out)
}

/// Compares a named denominator polynomial with the spanning-tree
/// polynomial of the family graph.
pub(crate) fn spanning_tree_failure(id: &str, name: &str) -> Option<Failure> {
    let spec = family(id).expect("catalog family");
    let g = build(id, &uniform_lengths(spec, &int(1))).expect("unit lengths build");
    let trees = complement_spanning_tree_polynomial(&g).expect("single-letter edge ids");
    let named = registry::named(name).expect("registered polynomial");
    registry::ratfn_difference(&RatFn::from(named), &RatFn::from(trees))
}

/// Checks the typeset tau of `g3.IX` against the value that
/// `phi = 13/3 tau + theta/12 - L/4` forces from the row's theta and phi
/// entries. Returns the witness of disagreement.
pub fn printed_g3_ix_tau_failure() -> Option<Failure> {
    let (index, d) = def("g3.IX").expect("g3.IX is registered");
    let forms = parsed(index);
    let b = bindings_for(d);
    let printed = parse_ratfn(families::G3_IX_TAU_PRINTED, &b).expect("printed tau parses");
    registry::ratfn_difference(&printed, &forced_tau(forms, &b))
}

/// `tau = 3/13 (phi - theta/12 + L/4)`.
fn forced_tau(forms: &Parsed, b: &Bindings) -> RatFn {
    let quarter = RatFn::constant(frac(1, 4));
    let twelfth = RatFn::constant(frac(1, 12));
    let inner = &(&forms.phi - &(&forms.theta * &twelfth)) + &(&b[&'L'] * &quarter);
    inner.scale(&frac(3, 13))
}

/// The corrected tau of `g3.IX` agrees symbolically with its phi and theta.
pub fn corrected_g3_ix_tau_failure() -> Option<Failure> {
    let (index, d) = def("g3.IX").expect("g3.IX is registered");
    let forms = parsed(index);
    registry::ratfn_difference(&forms.tau, &forced_tau(forms, &bindings_for(d)))
}
