//! The invariant engine.
//!
//! For a fixed base vertex `y`, the resistance `r(x, y)` restricted to an
//! edge `e = (p, q, L)` is a quadratic `A t^2 + B t + C` in the arclength `t`
//! from `p`. Its leading coefficient is `-1 / (L + R_e)`, where `R_e` is the
//! resistance between the endpoints in the graph with `e` removed, which in
//! terms of the full-graph resistance `x = r(p, q)` is `A = -(L - x) / L^2`.
//! The end values fix `B = (r(q, y) - r(p, y)) / L - A L`, and the tau
//! constant is a quarter of the sum of `∫ (2 A t + B)^2 dt` over all edges.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_coefficients, genus, validate, PmGraph};
use crate::rational::{frac, int, Rational};
use crate::resistance::{classify_edges, resistance_matrix, ResistanceMatrix};

/// The invariants of one pm-graph. The Zhang quartet is present iff `gbar == 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSet {
    #[serde(with = "crate::rational::serde_str")]
    pub ell: Rational,
    pub g: u32,
    pub gbar: u32,
    #[serde(with = "crate::rational::serde_str")]
    pub tau: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub theta: Rational,
    #[serde(with = "delta_map")]
    pub delta: BTreeMap<u32, Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::rational::serde_str::option"
    )]
    pub phi: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::rational::serde_str::option"
    )]
    pub lambda: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::rational::serde_str::option"
    )]
    pub epsilon: Option<Rational>,
    #[serde(
        rename = "Z",
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::rational::serde_str::option"
    )]
    pub z: Option<Rational>,
}

impl InvariantSet {
    pub fn delta(&self, i: u32) -> Rational {
        self.delta.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Names and values of every populated field, in schema order.
    pub fn fields(&self) -> Vec<(String, Rational)> {
        let mut out = vec![
            ("ell".to_string(), self.ell.clone()),
            ("g".to_string(), int(self.g.into())),
            ("gbar".to_string(), int(self.gbar.into())),
            ("tau".to_string(), self.tau.clone()),
            ("theta".to_string(), self.theta.clone()),
        ];
        for (i, d) in &self.delta {
            out.push((format!("delta{i}"), d.clone()));
        }
        for (name, value) in [
            ("phi", &self.phi),
            ("lambda", &self.lambda),
            ("epsilon", &self.epsilon),
            ("Z", &self.z),
        ] {
            if let Some(v) = value {
                out.push((name.to_string(), v.clone()));
            }
        }
        out
    }

    /// Field names whose values differ between `self` and `other`.
    pub fn differences(&self, other: &InvariantSet) -> Vec<String> {
        let mine = self.fields();
        let theirs = other.fields();
        let mut names: Vec<String> = mine.iter().map(|(n, _)| n.clone()).collect();
        for (n, _) in &theirs {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        let lookup = |set: &[(String, Rational)], n: &str| {
            set.iter().find(|(m, _)| m == n).map(|(_, v)| v.clone())
        };
        names
            .into_iter()
            .filter(|n| lookup(&mine, n) != lookup(&theirs, n))
            .collect()
    }
}

mod delta_map {
    use super::*;
    use crate::rational::{format_rational, parse_rational};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<u32, Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let as_strings: BTreeMap<String, String> = map
            .iter()
            .map(|(k, v)| (k.to_string(), format_rational(v)))
            .collect();
        as_strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<u32, Rational>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let k = k.parse().map_err(serde::de::Error::custom)?;
                let v = parse_rational(&v).map_err(serde::de::Error::custom)?;
                Ok((k, v))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZhangInvariants {
    pub phi: Rational,
    pub lambda: Rational,
    pub epsilon: Rational,
    pub z: Rational,
}

pub fn tau(g: &PmGraph) -> Result<Rational> {
    let r = resistance_matrix(g)?;
    Ok(tau_with(g, &r, 0))
}

/// The tau constant computed with base vertex index `base`.
pub fn tau_with_base(g: &PmGraph, base: usize) -> Result<Rational> {
    let r = resistance_matrix(g)?;
    Ok(tau_with(g, &r, base))
}

pub(crate) fn tau_with(g: &PmGraph, r: &ResistanceMatrix, base: usize) -> Rational {
    if g.vertex_count() == 0 {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for e in g.edges() {
        let len = &e.length;
        let x = r.get(e.u, e.v);
        let a = -(len - x) / (len * len);
        let b = (r.get(e.v, base) - r.get(e.u, base)) / len - &a * len;
        let len2 = len * len;
        let len3 = &len2 * len;
        total += &a * &a * &len3 * frac(4, 3) + &a * &b * &len2 * int(2) + &b * &b * len;
    }
    total / int(4)
}

/// `sum over ordered pairs (p, s) of K(p) K(s) r(p, s)`.
pub fn theta(g: &PmGraph) -> Result<Rational> {
    let r = resistance_matrix(g)?;
    Ok(theta_with(g, &r))
}

pub(crate) fn theta_with(g: &PmGraph, r: &ResistanceMatrix) -> Rational {
    let k = canonical_coefficients(g);
    let mut total = Rational::zero();
    for i in 0..k.len() {
        for j in 0..k.len() {
            if i != j && k[i] != 0 && k[j] != 0 {
                total += r.get(i, j) * int(k[i] * k[j]);
            }
        }
    }
    total
}

/// Total length of type-`i` points for every `i` in `0..=gbar/2`.
pub fn delta(g: &PmGraph) -> Result<BTreeMap<u32, Rational>> {
    let r = resistance_matrix(g)?;
    delta_with(g, &r)
}

pub(crate) fn delta_with(g: &PmGraph, r: &ResistanceMatrix) -> Result<BTreeMap<u32, Rational>> {
    let gbar = genus(g).gbar;
    let mut out: BTreeMap<u32, Rational> = (0..=gbar / 2).map(|i| (i, Rational::zero())).collect();
    let classes = classify_edges(g, r)?;
    for (e, (_, kind)) in g.edges().iter().zip(&classes.kinds) {
        *out.entry(kind.type_index()).or_insert_with(Rational::zero) += &e.length;
    }
    Ok(out)
}

/// The linear relations for total genus 3:
/// `phi = 13/3 tau + theta/12 - ell/4`, `Z = 5/9 tau + theta/72`,
/// `lambda = 3/7 tau + theta/56 + ell/14`, `epsilon = 8/3 tau + theta/6`.
pub fn zhang_from_parts(tau: &Rational, theta: &Rational, ell: &Rational) -> ZhangInvariants {
    ZhangInvariants {
        phi: tau * frac(13, 3) + theta * frac(1, 12) - ell * frac(1, 4),
        z: tau * frac(5, 9) + theta * frac(1, 72),
        lambda: tau * frac(3, 7) + theta * frac(1, 56) + ell * frac(1, 14),
        epsilon: tau * frac(8, 3) + theta * frac(1, 6),
    }
}

pub fn zhang_invariants(g: &PmGraph) -> Result<ZhangInvariants> {
    let gbar = genus(g).gbar;
    if gbar != 3 {
        return Err(Error::UnsupportedGenus(gbar));
    }
    let r = resistance_matrix(g)?;
    Ok(zhang_from_parts(
        &tau_with(g, &r, 0),
        &theta_with(g, &r),
        &g.total_length(),
    ))
}

/// Validates `g` and computes every invariant with a single resistance solve.
pub fn invariant_set(g: &PmGraph) -> Result<InvariantSet> {
    validate(g).into_result()?;
    let r = resistance_matrix(g)?;
    let genus = genus(g);
    let ell = g.total_length();
    let tau = tau_with(g, &r, 0);
    let theta = theta_with(g, &r);
    let delta = delta_with(g, &r)?;
    let zhang = (genus.gbar == 3).then(|| zhang_from_parts(&tau, &theta, &ell));
    Ok(InvariantSet {
        g: genus.g,
        gbar: genus.gbar,
        phi: zhang.as_ref().map(|z| z.phi.clone()),
        lambda: zhang.as_ref().map(|z| z.lambda.clone()),
        epsilon: zhang.as_ref().map(|z| z.epsilon.clone()),
        z: zhang.map(|z| z.z),
        ell,
        tau,
        theta,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn k4_unit() -> PmGraph {
        parse_graph(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\n\
             edge a 1 2 1\nedge b 1 3 1\nedge c 1 4 1\n\
             edge d 2 3 1\nedge e 2 4 1\nedge f 3 4 1",
        )
        .unwrap()
    }

    #[test]
    fn tree_tau_is_quarter_length() {
        let g = parse_graph(
            "vertex p q=1\nvertex m q=1\nvertex s\nvertex t q=1\n\
             edge a p m 1\nedge b m s 2\nedge c s t 3",
        )
        .unwrap();
        assert_eq!(tau(&g).unwrap(), frac(3, 2));
    }

    #[test]
    fn circle_tau_is_twelfth_length() {
        let one = parse_graph("vertex x q=2\nedge l x x 12").unwrap();
        assert_eq!(tau(&one).unwrap(), int(1));
        let three = parse_graph(
            "vertex x q=2\nvertex y\nvertex z\nedge a x y 5\nedge b y z 4\nedge c z x 3",
        )
        .unwrap();
        assert_eq!(tau(&three).unwrap(), int(1));
    }

    #[test]
    fn theta_graph_tau() {
        // ell/12 - abc / (6 (ab + ac + bc)) at a = b = c = 1.
        let g = parse_graph("vertex x q=1\nvertex y\nedge a x y 1\nedge b x y 1\nedge c x y 1")
            .unwrap();
        assert_eq!(tau(&g).unwrap(), frac(7, 36));
    }

    #[test]
    fn k4_unit_values() {
        let g = k4_unit();
        assert_eq!(tau(&g).unwrap(), frac(5, 16));
        assert_eq!(theta(&g).unwrap(), int(6));
        let z = zhang_invariants(&g).unwrap();
        assert_eq!(z.phi, frac(17, 48));
        assert_eq!(z.epsilon, frac(11, 6));
        assert_eq!(z.lambda, frac(75, 112));
        assert_eq!(z.z, frac(5, 16) * frac(5, 9) + frac(6, 72));
        let d = delta(&g).unwrap();
        assert_eq!(d[&0], int(6));
        assert_eq!(d[&1], int(0));
    }

    #[test]
    fn theta_examples() {
        let g = parse_graph("vertex p q=1\nvertex q q=2\nedge e p q 5").unwrap();
        assert_eq!(theta(&g).unwrap(), int(30));
        let circle = parse_graph("vertex x q=2\nedge l x x 7").unwrap();
        assert_eq!(theta(&circle).unwrap(), int(0));
    }

    #[test]
    fn delta_on_loop_with_bridge() {
        let g = parse_graph("vertex x q=1\nvertex leaf q=1\nedge b x x 3\nedge a x leaf 2").unwrap();
        let d = delta(&g).unwrap();
        assert_eq!(d[&0], int(3));
        assert_eq!(d[&1], int(2));
    }

    #[test]
    fn zhang_values_for_small_families() {
        let g = parse_graph("vertex p q=1\nvertex q q=2\nedge e p q 1").unwrap();
        let z = zhang_invariants(&g).unwrap();
        assert_eq!(
            (z.phi, z.lambda, z.epsilon),
            (frac(4, 3), frac(2, 7), frac(5, 3))
        );
        let circle = parse_graph("vertex x q=2\nedge l x x 9").unwrap();
        let z = zhang_invariants(&circle).unwrap();
        assert_eq!(
            (z.phi, z.epsilon, z.lambda),
            (int(1), int(2), frac(27, 28))
        );
    }

    #[test]
    fn zhang_refuses_other_genera() {
        let g = parse_graph("vertex x q=1\nedge l x x 9").unwrap();
        assert!(matches!(
            zhang_invariants(&g),
            Err(Error::UnsupportedGenus(2))
        ));
        let set = invariant_set(&g).unwrap();
        assert_eq!(set.gbar, 2);
        assert!(set.phi.is_none() && set.lambda.is_none() && set.epsilon.is_none() && set.z.is_none());
    }

    #[test]
    fn point_graph_is_all_zero() {
        let g = parse_graph("vertex p q=3").unwrap();
        let set = invariant_set(&g).unwrap();
        assert!(set.ell.is_zero() && set.tau.is_zero() && set.theta.is_zero());
        assert!(set.phi.as_ref().unwrap().is_zero());
        assert!(set.z.as_ref().unwrap().is_zero());
        assert!(set.delta.values().all(Zero::is_zero));
    }

    #[test]
    fn invalid_graph_is_rejected() {
        let g = parse_graph("vertex p\nvertex q q=3\nedge e p q 1").unwrap();
        assert!(matches!(invariant_set(&g), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn json_schema() {
        let set = invariant_set(&k4_unit()).unwrap();
        let json = serde_json::to_value(&set).unwrap();
        assert_eq!(json["phi"], "17/48");
        assert_eq!(json["delta"]["0"], "6/1");
        assert_eq!(json["delta"]["1"], "0/1");
        assert_eq!(json["g"], 3);
        assert!(json.get("Z").is_some());
        let back: InvariantSet = serde_json::from_value(json).unwrap();
        assert_eq!(back, set);
    }
}
