//! Sharp lower bounds for `phi`, `lambda`, `epsilon` (and `tau` on the
//! tetrahedron), certified two ways: exact sampling over random rational
//! lengths, and exact evaluation at the length assignments that attain them.
//!
//! Every ratio is `invariant / ℓ`, which is scale free. Sampling never
//! proves a bound; it only corroborates the polynomial certificates.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    self, closed_form_at_boundary, family_rng, format_lengths, sample_lengths, Lengths,
};
use crate::error::{Error, Result};
use crate::invariants::{invariant_set, InvariantSet};
use crate::poly::registry::named;
use crate::rational::{format_rational, frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Phi,
    Lambda,
    Epsilon,
    Tau,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Phi => "phi",
            Invariant::Lambda => "lambda",
            Invariant::Epsilon => "epsilon",
            Invariant::Tau => "tau",
        }
    }

    pub fn of(self, set: &InvariantSet) -> Rational {
        let value = match self {
            Invariant::Phi => set.phi.clone(),
            Invariant::Lambda => set.lambda.clone(),
            Invariant::Epsilon => set.epsilon.clone(),
            Invariant::Tau => Some(set.tau.clone()),
        };
        value.expect("catalog graphs have total genus 3")
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `invariant >= floor * ℓ`.
    Floor,
    /// `invariant == floor * ℓ` for every length assignment.
    Exact,
}

/// A length assignment attaining a bound. Zero lengths mark a boundary
/// point, reached only as a limit of honest pm-graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub family: &'static str,
    #[serde(serialize_with = "serialize_lengths")]
    pub lengths: Lengths,
}

fn serialize_lengths<S: serde::Serializer>(l: &Lengths, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_lengths(l))
}

impl Witness {
    pub fn is_boundary(&self) -> bool {
        self.lengths.values().any(|v| !v.is_positive())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundSpec {
    pub family: &'static str,
    pub invariant: Invariant,
    pub relation: Relation,
    #[serde(with = "crate::rational::serde_str")]
    pub floor: Rational,
    pub witness: Option<Witness>,
}

fn witness(family: &'static str, assignment: &str) -> Option<Witness> {
    Some(Witness {
        family,
        lengths: catalog::parse_lengths(assignment).expect("static witness"),
    })
}

/// The witness assignment with every parameter of `family` equal to 1.
fn unit(family: &'static str) -> Option<Witness> {
    let spec = catalog::family(family).expect("static family");
    Some(Witness {
        family,
        lengths: catalog::uniform_lengths(spec, &int(1)),
    })
}

/// Boundary witnesses for the `g3` floors of `ℓ/9` and `7ℓ/81`.
fn g3_phi_witness(id: &'static str) -> Option<Witness> {
    match id {
        "g3.I" | "g3.II" | "g3.XIV" => unit(id),
        "g3.III" => witness(id, "a=1,b=1,c=1,d=0"),
        "g3.IV" => witness(id, "a=1,b=1,c=0,d=1"),
        "g3.V" => witness(id, "a=1,b=1,c=1,d=0"),
        "g3.VI" => witness(id, "a=1,b=1,c=1,d=0,e=0"),
        "g3.VII" => witness(id, "a=1,b=1,c=0,d=0,e=1"),
        "g3.VIII" => witness(id, "a=0,b=1,c=1,d=1,e=1"),
        "g3.IX" => witness(id, "a=0,b=0,c=1,d=1,e=1"),
        "g3.X" => witness(id, "a=1,b=1,c=1,d=0,e=0"),
        "g3.XI" => witness(id, "a=1,b=1,c=0,d=0,e=0,f=1"),
        "g3.XII" => witness(id, "a=1,b=1,c=1,d=0,e=0,f=0"),
        "g3.XIII" => witness(id, "a=0,b=0,c=1,d=1,e=1,f=1"),
        _ => None,
    }
}

fn g3_phi_floor(id: &str) -> Rational {
    match id {
        "g3.I" | "g3.IV" | "g3.V" | "g3.VI" | "g3.VII" | "g3.XI" => frac(1, 9),
        "g3.III" | "g3.IX" | "g3.X" | "g3.XII" => frac(7, 81),
        "g3.II" | "g3.VIII" | "g3.XIII" => frac(1, 16),
        "g3.XIV" => frac(17, 288),
        _ => unreachable!("{id} is not a g3 family"),
    }
}

/// Per-family bounds, in catalog order. `g0.I` has `ℓ = 0` and no ratio.
pub fn bound_table() -> Vec<BoundSpec> {
    use Invariant::*;
    let mut out = Vec::new();
    let mut push = |family, invariant, relation, floor: Rational, witness| {
        out.push(BoundSpec {
            family,
            invariant,
            relation,
            floor,
            witness,
        })
    };
    for spec in catalog::families().iter().filter(|f| !f.degenerate) {
        let id = spec.id;
        match spec.genus {
            0 => {
                push(id, Phi, Relation::Exact, frac(4, 3), unit(id));
                push(id, Lambda, Relation::Exact, frac(2, 7), unit(id));
                push(id, Epsilon, Relation::Exact, frac(5, 3), unit(id));
            }
            1 | 2 => {
                let phi_floor = if spec.genus == 1 { frac(1, 9) } else { frac(7, 81) };
                let (phi_witness, other_witness) = match id {
                    "g1.I" => (unit(id), unit(id)),
                    "g2.III" => (unit(id), None),
                    "g2.I" => (None, unit(id)),
                    _ => (None, None),
                };
                push(id, Phi, Relation::Floor, phi_floor, phi_witness);
                push(id, Lambda, Relation::Floor, frac(3, 28), other_witness.clone());
                push(id, Epsilon, Relation::Floor, frac(2, 9), other_witness);
            }
            _ => {
                let other_witness = if id == "g3.I" { unit(id) } else { None };
                push(id, Phi, Relation::Floor, g3_phi_floor(id), g3_phi_witness(id));
                push(id, Lambda, Relation::Floor, frac(3, 28), other_witness.clone());
                push(id, Epsilon, Relation::Floor, frac(2, 9), other_witness);
                if id == "g3.XIV" {
                    push(id, Tau, Relation::Floor, frac(5, 96), unit(id));
                }
            }
        }
    }
    out
}

/// The headline floors over every genus.
pub fn global_floors() -> Vec<(Invariant, Rational)> {
    vec![
        (Invariant::Phi, frac(17, 288)),
        (Invariant::Lambda, frac(3, 28)),
        (Invariant::Epsilon, frac(2, 9)),
    ]
}

pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_XIV_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 7;

/// Default sample count for `family`: more for the tetrahedron, whose floor
/// is the global one.
pub fn default_samples(family: &str) -> usize {
    if family == "g3.XIV" {
        DEFAULT_XIV_SAMPLES
    } else {
        DEFAULT_SAMPLES
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub family: String,
    pub invariant: Invariant,
    pub relation: Relation,
    #[serde(with = "crate::rational::serde_str")]
    pub floor: Rational,
    pub samples: usize,
    pub seed: u64,
    #[serde(with = "crate::rational::serde_str")]
    pub minimum: Rational,
    /// Lengths at which the minimum was found.
    pub argmin: String,
    /// First sampled tuple violating the bound.
    pub violation: Option<String>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Engine invariants at `samples` random tuples of `family`.
pub fn family_samples(family: &str, samples: usize, seed: u64) -> Result<Vec<(Lengths, InvariantSet)>> {
    let spec = catalog::family(family)?;
    let mut rng = family_rng(family, seed);
    let tuples: Vec<Lengths> = (0..samples).map(|_| sample_lengths(spec, &mut rng)).collect();
    tuples
        .into_par_iter()
        .map(|l| {
            let set = invariant_set(&catalog::build(family, &l)?)?;
            Ok((l, set))
        })
        .collect()
}

fn report_from(spec: &BoundSpec, data: &[(Lengths, InvariantSet)], seed: u64) -> SampleReport {
    let mut minimum: Option<(Rational, &Lengths)> = None;
    let mut violation = None;
    for (l, set) in data {
        let ratio = spec.invariant.of(set) / &set.ell;
        let bad = match spec.relation {
            Relation::Floor => ratio < spec.floor,
            Relation::Exact => ratio != spec.floor,
        };
        if bad && violation.is_none() {
            violation = Some(format_lengths(l));
        }
        if minimum.as_ref().is_none_or(|(m, _)| ratio < *m) {
            minimum = Some((ratio, l));
        }
    }
    let (minimum, argmin) = minimum.expect("at least one sample");
    SampleReport {
        family: spec.family.to_string(),
        invariant: spec.invariant,
        relation: spec.relation,
        floor: spec.floor.clone(),
        samples: data.len(),
        seed,
        minimum,
        argmin: format_lengths(argmin),
        violation,
    }
}

/// Samples `spec.family` and reports the exact minimum of `invariant / ℓ`.
pub fn sample_check(spec: &BoundSpec, samples: usize, seed: u64) -> Result<SampleReport> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let data = family_samples(spec.family, samples, seed)?;
    Ok(report_from(spec, &data, seed))
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub family: String,
    pub invariant: Invariant,
    pub witness: Witness,
    #[serde(with = "crate::rational::serde_str")]
    pub floor: Rational,
    /// `invariant / ℓ` at the witness (closed form on the boundary).
    #[serde(with = "crate::rational::serde_str")]
    pub ratio: Rational,
    /// For boundary witnesses, engine ratios along the path where every zero
    /// length is replaced by `1/n`, `n = 1, 2, 4, ..., 1024`.
    #[serde(serialize_with = "serialize_path")]
    pub approach: Vec<Rational>,
    pub passed: bool,
}

fn serialize_path<S: serde::Serializer>(p: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(format_rational))
}

fn approach_path(spec: &BoundSpec, w: &Witness) -> Result<Vec<Rational>> {
    (0..=10)
        .map(|k| {
            let t = frac(1, 1 << k);
            let lengths: Lengths = w
                .lengths
                .iter()
                .map(|(&c, v)| (c, if v.is_positive() { v.clone() } else { t.clone() }))
                .collect();
            let set = invariant_set(&catalog::build(w.family, &lengths)?)?;
            Ok(spec.invariant.of(&set) / &set.ell)
        })
        .collect()
}

/// Evaluates the bound exactly at its witness. Interior witnesses go
/// through the engine; boundary witnesses through the closed form, plus a
/// check that engine ratios decrease strictly towards the floor along the
/// approach path.
pub fn witness_check(spec: &BoundSpec) -> Result<WitnessReport> {
    let w = spec
        .witness
        .clone()
        .ok_or_else(|| Error::MissingWitness(format!("{} {}", spec.family, spec.invariant)))?;
    let (ratio, approach) = if w.is_boundary() {
        let set = closed_form_at_boundary(w.family, &w.lengths)?;
        (spec.invariant.of(&set) / &set.ell, approach_path(spec, &w)?)
    } else {
        let set = invariant_set(&catalog::build(w.family, &w.lengths)?)?;
        (spec.invariant.of(&set) / &set.ell, Vec::new())
    };
    let descends = approach
        .windows(2)
        .all(|p| p[1] < p[0] && p[1] > spec.floor);
    let closing = match (approach.first(), approach.last()) {
        (Some(first), Some(last)) => (last - &spec.floor) * int(100) < first - &spec.floor,
        _ => true,
    };
    Ok(WitnessReport {
        family: spec.family.to_string(),
        invariant: spec.invariant,
        passed: ratio == spec.floor && descends && closing,
        witness: w,
        floor: spec.floor.clone(),
        ratio,
        approach,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GlobalReport {
    pub invariant: Invariant,
    #[serde(with = "crate::rational::serde_str")]
    pub floor: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub minimum: Rational,
    pub family: String,
    pub argmin: String,
    pub passed: bool,
}

/// Nonnegativity of the tetrahedral certificates `R` and `S` at every
/// sampled point, and their agreement with the engine:
/// `phi - 17ℓ/288 = R/(288C)` and `tau - 5ℓ/96 = S/(96C)`.
#[derive(Clone, Debug, Serialize)]
pub struct TetrahedronReport {
    pub samples: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub min_r: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub min_s: Rational,
    /// First tuple where a certificate is negative or disagrees.
    pub violation: Option<String>,
}

impl TetrahedronReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn tetrahedron_check(data: &[(Lengths, InvariantSet)]) -> Result<TetrahedronReport> {
    let (r, s, c) = (named("xiv.R")?, named("xiv.S")?, named("xiv.C")?);
    let mut min_r: Option<Rational> = None;
    let mut min_s: Option<Rational> = None;
    let mut violation = None;
    for (l, set) in data {
        let (rv, sv, cv) = (r.evaluate_at(l), s.evaluate_at(l), c.evaluate_at(l));
        let phi_gap = Invariant::Phi.of(set) - &set.ell * frac(17, 288);
        let tau_gap = &set.tau - &set.ell * frac(5, 96);
        let agrees = phi_gap == &rv / (&cv * int(288)) && tau_gap == &sv / (&cv * int(96));
        if (rv.is_negative() || sv.is_negative() || !agrees) && violation.is_none() {
            violation = Some(format_lengths(l));
        }
        if min_r.as_ref().is_none_or(|m| rv < *m) {
            min_r = Some(rv);
        }
        if min_s.as_ref().is_none_or(|m| sv < *m) {
            min_s = Some(sv);
        }
    }
    Ok(TetrahedronReport {
        samples: data.len(),
        min_r: min_r.unwrap_or_default(),
        min_s: min_s.unwrap_or_default(),
        violation,
    })
}

/// Everything `verify bounds` checks.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub seed: u64,
    pub samples: Vec<SampleReport>,
    pub witnesses: Vec<WitnessReport>,
    /// Present when every family was sampled.
    pub global: Vec<GlobalReport>,
    pub tetrahedron: Option<TetrahedronReport>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(SampleReport::passed)
            && self.witnesses.iter().all(|w| w.passed)
            && self.global.iter().all(|g| g.passed)
            && self.tetrahedron.as_ref().is_none_or(TetrahedronReport::passed)
    }
}

/// Runs the bound suite, optionally for one family. `samples` overrides
/// [`default_samples`].
pub fn verify_bounds(family: Option<&str>, samples: Option<usize>, seed: u64) -> Result<BoundsReport> {
    if let Some(id) = family {
        catalog::family(id)?;
    }
    if samples == Some(0) {
        return Err(Error::NoSamples);
    }
    let table = bound_table();
    let ids: Vec<&'static str> = catalog::families()
        .iter()
        .filter(|f| !f.degenerate && family.is_none_or(|id| id == f.id))
        .map(|f| f.id)
        .collect();
    let data: BTreeMap<&str, Vec<(Lengths, InvariantSet)>> = ids
        .par_iter()
        .map(|&id| Ok((id, family_samples(id, samples.unwrap_or_else(|| default_samples(id)), seed)?)))
        .collect::<Result<_>>()?;
    let specs: Vec<&BoundSpec> = table.iter().filter(|s| data.contains_key(s.family)).collect();
    let sample_reports: Vec<SampleReport> = specs
        .iter()
        .map(|s| report_from(s, &data[s.family], seed))
        .collect();
    let witnesses = specs
        .par_iter()
        .filter(|s| s.witness.is_some())
        .map(|s| witness_check(s))
        .collect::<Result<Vec<_>>>()?;
    let global = if family.is_none() {
        global_floors()
            .into_iter()
            .map(|(inv, floor)| {
                let best = sample_reports
                    .iter()
                    .filter(|r| r.invariant == inv)
                    .min_by(|a, b| a.minimum.cmp(&b.minimum))
                    .expect("every family is sampled");
                GlobalReport {
                    invariant: inv,
                    passed: best.minimum >= floor,
                    floor,
                    minimum: best.minimum.clone(),
                    family: best.family.clone(),
                    argmin: best.argmin.clone(),
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    let tetrahedron = match data.get("g3.XIV") {
        Some(d) => Some(tetrahedron_check(d)?),
        None => None,
    };
    Ok(BoundsReport {
        seed,
        samples: sample_reports,
        witnesses,
        global,
        tetrahedron,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: &str, invariant: Invariant) -> BoundSpec {
        bound_table()
            .into_iter()
            .find(|s| s.family == family && s.invariant == invariant)
            .unwrap()
    }

    #[test]
    fn table_contains_headline_entries() {
        let xiv = spec("g3.XIV", Invariant::Phi);
        assert_eq!(xiv.floor, frac(17, 288));
        assert!(xiv.witness.is_some());
        assert_eq!(spec("g3.XIV", Invariant::Tau).floor, frac(5, 96));
        let g0 = spec("g0.III", Invariant::Phi);
        assert_eq!((g0.relation, g0.floor), (Relation::Exact, frac(4, 3)));
        assert_eq!(spec("g1.IV", Invariant::Epsilon).floor, frac(2, 9));
        assert!(bound_table().iter().all(|s| s.family != "g0.I"));
    }

    #[test]
    fn every_witness_attains_its_floor() {
        for s in bound_table().iter().filter(|s| s.witness.is_some()) {
            let w = witness_check(s).unwrap();
            assert!(w.passed, "{} {}: {} vs {}", s.family, s.invariant, w.ratio, w.floor);
        }
    }

    #[test]
    fn missing_witness_is_an_error() {
        let s = spec("g2.V", Invariant::Phi);
        assert!(matches!(witness_check(&s), Err(Error::MissingWitness(_))));
    }

    #[test]
    fn trees_are_exact_on_samples() {
        let r = sample_check(&spec("g0.II", Invariant::Phi), 20, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.minimum, frac(4, 3));
    }

    #[test]
    fn theta_graph_stays_above_its_floor() {
        let r = sample_check(&spec("g2.III", Invariant::Phi), 200, 1).unwrap();
        assert!(r.passed());
        assert!(r.minimum >= frac(7, 81));
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = spec("g3.VIII", Invariant::Phi);
        let a = sample_check(&s, 50, 11).unwrap();
        let b = sample_check(&s, 50, 11).unwrap();
        assert_eq!((a.minimum, a.argmin), (b.minimum, b.argmin));
    }
}
