//! Named polynomials from the genus-3 lower-bound proofs and the identity
//! certificates that check them.
//!
//! The same letters (A, B, C, D, H, M, N) are reused for different families,
//! so every name carries a prefix: `xiv.` for the tetrahedral graph, `viii.`
//! and `xiii.` for the two other simple graphs whose floor is `ℓ/16`, and
//! `sym.` for the symmetric restatement of the tetrahedral inequality.
//!
//! Certificates are either expected to hold, or are *probes*: a formula
//! reproduced exactly as typeset where it is known to be wrong, kept so the
//! discrepancy stays visible. A probe is reported as expected when it fails
//! with a concrete witness.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{format_monomial, parse_polynomial, parse_ratfn, Bindings, Polynomial, RatFn, Var};
use crate::rational::{format_rational, frac, int, Rational};

const NAMED: &[(&str, &str)] = &[
    (
        "xiv.A",
        "abcd + abce + abde + acde + abcf + abdf + bcdf + acef + bcef + adef + bdef + cdef",
    ),
    ("xiv.B", "bcde + acdf + abef"),
    (
        "xiv.C",
        "abd + acd + bcd + abe + ace + bce + bde + cde + abf + acf + bcf + adf + cdf + aef + bef + def",
    ),
    (
        "xiv.M",
        "a^2bd + a^2be + a^2bf + a^2cd + a^2ce + a^2cf + a^2df + a^2ef + ab^2d + ab^2e + ab^2f \
         + abd^2 + abe^2 + abf^2 + ac^2d + ac^2e + ac^2f + acd^2 + ace^2 + acf^2 + ad^2f + adf^2 \
         + ae^2f + aef^2 + b^2cd + b^2ce + b^2cf + b^2de + b^2ef + bc^2d + bc^2e + bc^2f + bcd^2 \
         + bce^2 + bcf^2 + bd^2e + bde^2 + be^2f + bef^2 + c^2de + c^2df + cd^2e + cd^2f + cde^2 \
         + cdf^2 + d^2ef + de^2f + def^2",
    ),
    (
        "xiv.D",
        "a^2bd + a^2be + a^2bf + a^2cd + a^2ce + a^2cf + a^2df + a^2ef + ab^2d + ab^2e + ab^2f \
         + abd^2 + abe^2 + abf^2 + ac^2d + ac^2e + ac^2f + acd^2 + ace^2 + acf^2 + ad^2f + adf^2 \
         + ae^2f + aef^2 + b^2cd + b^2ce + b^2cf + b^2de + b^2ef + bc^2d + bc^2e + bc^2f + bcd^2 \
         + bce^2 + bcf^2 + bd^2e + bde^2 + be^2f + bef^2 + c^2de + c^2df + cd^2e + cd^2f + cde^2 \
         + cdf^2 + d^2ef + de^2f + def^2",
    ),
    ("xiv.S", "3M - 7A - 20B"),
    ("xiv.R", "15D - 19A - 164B"),
    (
        "viii.H",
        "b^2cd + bc^2d + bcd^2 + b^2ce + bc^2e + b^2de - 12bcde + c^2de + bd^2e + cd^2e + bce^2 \
         + bde^2 + cde^2",
    ),
    ("viii.D", "ace + abe + cbe + acd + abd + cbd + ced + bed"),
    (
        "viii.N",
        "14ace + 3c^2e + 14abe + 3b^2e + 3ce^2 + 3be^2 + 14acd + 3c^2d + 14abd + 3b^2d + 3cd^2 \
         + 3bd^2",
    ),
    ("viii.M", "(c-b)^2e + (c-b)^2d + c(e-d)^2 + b(e-d)^2"),
    ("xiii.A", "acde + bcde + acdf + bcdf + acef + bcef + adef + bdef"),
    ("xiii.B", "abce + abde + abcf + abdf"),
    ("xiii.C", "cdef"),
    (
        "xiii.D",
        "(a+b)ce + (a+b)de + cde + (a+b)cf + (a+b)df + cdf + cef + def",
    ),
    (
        "xiii.H",
        "c^2de + cd^2e + cde^2 + c^2df + cd^2f + c^2ef - 12cdef + d^2ef + ce^2f + de^2f + cdf^2 \
         + cef^2 + def^2",
    ),
    (
        "xiii.N",
        "14(a+b)ce + 3c^2e + 14(a+b)de + 3d^2e + 3ce^2 + 3de^2 + 14(a+b)cf + 3c^2f + 14(a+b)df \
         + 3d^2f + 3cf^2 + 3df^2",
    ),
    ("xiii.M", "(c-d)^2e + (c-d)^2f + c(e-f)^2 + d(e-f)^2"),
    ("sym.A", "cd(b + e)(a + f) + be(c + d)(a + f) + af(c + d)(b + e)"),
    (
        "sym.C",
        "cd(a + b + e + f) + af(b + c + d + e) + be(a + c + d + f) + abd + ace + bcf + def",
    ),
];

/// Sum-of-squares form of `S = 3M - 7A - 20B`.
const S_DECOMPOSITION: &str = "2[be((a-f)^2 + (d-c)^2) + cd((a-f)^2 + (b-e)^2) + af((e-b)^2 + (d-c)^2)] \
    + 3/2[bd((a-c)^2 + (a-e)^2 + (c-e)^2) + ce((b-a)^2 + (d-a)^2 + (b-d)^2) \
    + ad((b-c)^2 + (b-f)^2 + (c-f)^2) + cf((a-b)^2 + (a-d)^2 + (d-b)^2) \
    + bf((c-a)^2 + (e-a)^2 + (c-e)^2) + ae((b-c)^2 + (f-b)^2 + (f-c)^2) \
    + ef((a-b)^2 + (a-d)^2 + (d-b)^2) + ab((d-e)^2 + (d-f)^2 + (f-e)^2) \
    + ac((d-e)^2 + (d-f)^2 + (e-f)^2) + df((a-c)^2 + (e-a)^2 + (e-c)^2) \
    + de((b-c)^2 + (b-f)^2 + (c-f)^2) + bc((d-e)^2 + (d-f)^2 + (e-f)^2)] \
    + 1/2[cd(a-b)^2 + be(a-c)^2 + af(b-c)^2 + be(a-d)^2 + af(b-d)^2 + cd(a-e)^2 \
    + af(c-e)^2 + af(d-e)^2 + be((c-f)^2 + (d-f)^2) + cd(b-f)^2 + cd(e-f)^2]";

/// One of the eight sign cases for `R = 15D - 19A - 164B`. Each case fixes
/// the order within the opposite-edge pairs `(a,f)`, `(b,e)`, `(c,d)` and
/// writes the larger of each pair as the smaller plus a fresh nonnegative
/// variable `k`, `m` or `n`.
struct CaseData {
    label: &'static str,
    /// `(larger, smaller, slack)`: substitute `larger = smaller + slack`.
    shifts: [(char, char, char); 3],
    /// Right-hand side of `R = ...`, with the residual written as `T`.
    decomposition: &'static str,
    t: &'static str,
    /// `T` after the shift, expected to have only nonnegative coefficients.
    expansion: &'static str,
}

const CASES: [CaseData; 8] = [
    CaseData {
        label: "I",
        shifts: [('a', 'f', 'k'), ('b', 'e', 'm'), ('c', 'd', 'n')],
        decomposition: "2[cd(b+e-a-f)^2 + be(c+d-a-f)^2 + af(c+d-b-e)^2] + 13[be(a-c+d-f)^2 + cd(a-b+e-f)^2 + af(-b+c-d+e)^2] + 15[de(b-c)^2 + bd(c-e)^2 + df(c-a)^2 + da(c-f)^2 + ab(e-f)^2 + ac(d-f)^2 + ae(b-f)^2 + bc(d-e)^2 + bf(a-e)^2 + ce(b-d)^2 + cf(a-d)^2 + ef(a-b)^2] + 11[cd(a-f)(b-e) + be(a-f)(c-d) + af(b-e)(c-d)] + 15T",
        t: "a^2bd + a^2ce + ab^2d + abd^2 - 2abde - 2abdf + ac^2e - 2acde + ace^2 - 2acef + b^2cf + bc^2f - 2bcd f - 2bcef + bcf^2 + d^2ef + de^2f + def^2",
        expansion: "d^2km + 2dek^2 + 2dfm^2 + dk^2m + dkm^2 + e^2kn + 2efn^2 + ek^2n + ekn^2 + f^2mn + fm^2n + fmn^2",
    },
    CaseData {
        label: "II",
        shifts: [('a', 'f', 'k'), ('b', 'e', 'm'), ('d', 'c', 'n')],
        decomposition: "2[af(-b+c+d-e)^2 + be(-a+c+d-f)^2 + cd(-a+b+e-f)^2] + 13[be(a+c-d-f)^2 + cd(a-b+e-f)^2 + af(-b-c+d+e)^2] + 15[ae(b-f)^2 + ab(e-f)^2 + bf(a-e)^2 + ef(a-b)^2 + df(c-a)^2 + ad(c-f)^2 + ac(d-f)^2 + cf(a-d)^2 + bd(c-e)^2 + bc(d-e)^2 + ce(b-d)^2 + de(b-c)^2] + 11[cd(a-f)(b-e) + be(a-f)(d-c) + af(b-e)(d-c)] + 15T",
        t: "a^2bd + a^2ce + ab^2d - 2abce - 2abcf + abd^2 + ac^2e - 2acde + ace^2 - 2adef + b^2cf + bc^2f - 2bcd f + bcf^2 - 2bdef + d^2ef + de^2f + def^2",
        expansion: "c^2km + 2cek^2 + 2cfm^2 + ck^2m + ckm^2 + 2ckmn + e^2kn + 2efn^2 + ek^2n + 2ekmn + ekn^2 + f^2mn + 2fkmn + fm^2n + fmn^2 + k^2mn + km^2n + kmn^2",
    },
    CaseData {
        label: "III",
        shifts: [('a', 'f', 'k'), ('e', 'b', 'm'), ('c', 'd', 'n')],
        decomposition: "2[af(-b+c+d-e)^2 + be(-a+c+d-f)^2 + cd(-a+b+e-f)^2] + 13[cd(a-f+b-e)^2 + be(a-f-c+d)^2 + af(c-d+b-e)^2] + 15[ae(b-f)^2 + ab(e-f)^2 + bf(a-e)^2 + ef(a-b)^2 + df(c-a)^2 + ad(c-f)^2 + ac(d-f)^2 + cf(a-d)^2 + bd(c-e)^2 + bc(d-e)^2 + ce(b-d)^2 + de(b-c)^2] + 11[cd(a-f)(e-b) + be(a-f)(c-d) + af(e-b)(c-d)] + 15T",
        t: "a^2bd + a^2ce + ab^2d - 2abcd - 2abcf + abd^2 - 2abde + ac^2e + ace^2 - 2adef + b^2cf + bc^2f - 2bcef + bcf^2 - 2cdef + d^2ef + de^2f + def^2",
        expansion: "b^2kn + 2bdk^2 + 2bfn^2 + bk^2n + 2bkmn + bkn^2 + d^2km + 2dfm^2 + dk^2m + dkm^2 + 2dkmn + f^2mn + 2fkmn + fm^2n + fmn^2 + k^2mn + km^2n + kmn^2",
    },
    CaseData {
        label: "IV",
        shifts: [('a', 'f', 'k'), ('e', 'b', 'm'), ('d', 'c', 'n')],
        decomposition: "2[af(-b + c + d - e)^2 + be(-a + c + d - f)^2 + cd(-a + b + e - f)^2] + 13[be(a + c - d - f)^2 + cd(a + b - e - f)^2 + af(b - c + d - e)^2] + 15[ae(b - f)^2 + ab(e - f)^2 + bf(a - e)^2 + ef(a - b)^2 + df(c - a)^2 + ad(c - f)^2 + ac(d - f)^2 + cf(a - d)^2 + bd(c - e)^2 + bc(d - e)^2 + ce(b - d)^2 + de(b - c)^2] + 11[cd(a - f)(e - b) + be(a - f)(d - c) + af(e - b)(d - c)] + 15T",
        t: "a^2bd + a^2ce + ab^2d - 2abcd - 2abce + abd^2 - 2abdf + ac^2e + ace^2 - 2acef + b^2cf + bc^2f + bcf^2 - 2bdef - 2cdef + d^2ef + de^2f + def^2",
        expansion: "b^2kn + 2bck^2 + 2bfn^2 + bk^2n + bkn^2 + c^2km + 2cfm^2 + ck^2m + ckm^2 + f^2mn + fm^2n + fmn^2",
    },
    CaseData {
        label: "V",
        shifts: [('f', 'a', 'k'), ('b', 'e', 'm'), ('c', 'd', 'n')],
        decomposition: "2[af(-b + c + d - e)^2 + be(-a + c + d - f)^2 + cd(-a + b + e - f)^2] + 13[be(-a - c + d + f)^2 + cd(-a - b + e + f)^2 + af(-b + c - d + e)^2] + 15[ae(b - f)^2 + ab(e - f)^2 + bf(a - e)^2 + ef(a - b)^2 + df(c - a)^2 + ad(c - f)^2 + ac(d - f)^2 + cf(a - d)^2 + bd(c - e)^2 + bc(d - e)^2 + ce(b - d)^2 + de(b - c)^2] + 11[af(b - e)(c - d) + cd(f - a)(b - e) + be(f - a)(c - d)] + 15T",
        t: "a^2bd + a^2ce + ab^2d - 2abcd - 2abce + abd^2 - 2abdf + ac^2e + ace^2 - 2acef + b^2cf + bc^2f + bcf^2 - 2bdef - 2cdef + d^2ef + de^2f + def^2",
        expansion: "a^2mn + 2adm^2 + 2aen^2 + 2akmn + am^2n + amn^2 + d^2km + 2dek^2 + dk^2m + dkm^2 + 2dkmn + e^2kn + ek^2n + 2ekmn + ekn^2 + k^2mn + km^2n + kmn^2",
    },
    CaseData {
        label: "VI",
        shifts: [('f', 'a', 'k'), ('b', 'e', 'm'), ('d', 'c', 'n')],
        decomposition: "2[af(-b+c+d-e)^2 + be(-a+c+d-f)^2 + cd(-a+b+e-f)^2] + 13[be(-a+c-d+f)^2 + cd(-a-b+e+f)^2 + af(-b-c+d+e)^2] + 15[ae(b-f)^2 + ab(e-f)^2 + bf(a-e)^2 + ef(a-b)^2 + df(c-a)^2 + ad(c-f)^2 + ac(d-f)^2 + cf(a-d)^2 + bd(c-e)^2 + bc(d-e)^2 + ce(b-d)^2 + de(b-c)^2] + 11[af(b-e)(d-c) + cd(f-a)(b-e) + be(f-a)(d-c)] + 15T",
        t: "a^2bd + a^2ce + ab^2d - 2abcd - 2abcf + abd^2 - 2abde + ac^2e + ace^2 - 2adef + b^2cf + bc^2f - 2bcef + bcf^2 - 2cdef + d^2ef + de^2f + def^2",
        expansion: "a^2mn + 2acm^2 + 2aen^2 + am^2n + amn^2 + c^2km + 2cek^2 + ck^2m + ckm^2 + e^2kn + ek^2n + ekn^2",
    },
    CaseData {
        label: "VII",
        shifts: [('f', 'a', 'k'), ('e', 'b', 'm'), ('c', 'd', 'n')],
        decomposition: "2[af(-b+c+d-e)^2 + be(-a+c+d-f)^2 + cd(-a+b+e-f)^2] + 13[be(-a-c+d+f)^2 + cd(-a+b-e+f)^2 + af(b+c-d-e)^2] + 15[ae(b-f)^2 + ab(e-f)^2 + bf(a-e)^2 + ef(a-b)^2 + df(c-a)^2 + ad(c-f)^2 + ac(d-f)^2 + cf(a-d)^2 + bd(c-e)^2 + bc(d-e)^2 + ce(b-d)^2 + de(b-c)^2] + 11[af(e-b)(c-d) + be(f-a)(c-d) + cd(f-a)(e-b)] + 15T",
        t: "a^2bd + a^2ce + ab^2d - 2abce - 2abcf + abd^2 + ac^2e - 2acde + ace^2 - 2adef + b^2cf + bc^2f - 2bcd f + bcf^2 - 2bdef + d^2ef + de^2f + def^2",
        expansion: "a^2mn + 2abn^2 + 2adm^2 + am^2n + amn^2 + b^2kn + 2bdk^2 + bk^2n + bkn^2 + d^2km + dk^2m + dkm^2",
    },
    CaseData {
        label: "VIII",
        shifts: [('f', 'a', 'k'), ('e', 'b', 'm'), ('d', 'c', 'n')],
        decomposition: "2[af(-b+c+d-e)^2 + be(-a+c+d-f)^2 + cd(-a+b+e-f)^2] + 13[be(-a+c-d+f)^2 + cd(-a+b-e+f)^2 + af(b-c+d-e)^2] + 15[ae(b-f)^2 + ab(e-f)^2 + bf(a-e)^2 + ef(a-b)^2 + df(c-a)^2 + ad(c-f)^2 + ac(d-f)^2 + cf(a-d)^2 + bd(c-e)^2 + bc(d-e)^2 + ce(b-d)^2 + de(b-c)^2] + 11[af(e-b)(d-c) + be(f-a)(d-c) + cd(f-a)(e-b)] + 15T",
        t: "a^2bd + a^2ce + ab^2d + abd^2 - 2abde - 2abdf + ac^2e - 2acde + ace^2 - 2acef + b^2cf + bc^2f - 2bcd f - 2bcef + bcf^2 + d^2ef + de^2f + def^2",
        expansion: "a^2mn + 2abn^2 + 2acm^2 + 2akmn + am^2n + amn^2 + b^2kn + 2bck^2 + bk^2n + 2bkmn + bkn^2 + c^2km + ck^2m + ckm^2 + 2ckmn + k^2mn + km^2n + kmn^2",
    },
];

/// The shifted expansions of `T_3` and `T_4` as typeset. Both carry the
/// term `2bfm^2` where the substitution produces `2bfn^2`.
const PRINTED_T3_EXPANSION: &str = "b^2kn + 2bdk^2 + 2bfm^2 + bk^2n + 2bkmn + bkn^2 + d^2km + 2dfm^2 \
    + dk^2m + dkm^2 + 2dkmn + f^2mn + 2fkmn + fm^2n + fmn^2 + k^2mn + km^2n + kmn^2";
const PRINTED_T4_EXPANSION: &str = "b^2kn + 2bck^2 + 2bfm^2 + bk^2n + bkn^2 + c^2km + 2cfm^2 + ck^2m \
    + ckm^2 + f^2mn + fm^2n + fmn^2";

fn registry() -> &'static BTreeMap<String, Polynomial> {
    static CELL: OnceLock<BTreeMap<String, Polynomial>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut map = BTreeMap::new();
        for (name, formula) in NAMED {
            let prefix = name.split('.').next().unwrap();
            let bindings = namespace_bindings(&map, prefix);
            let value = parse_ratfn(formula, &bindings)
                .and_then(|f| f.as_polynomial().ok_or_else(|| Error::NotPolynomial(formula.to_string())))
                .unwrap_or_else(|e| panic!("registry entry {name}: {e}"));
            map.insert(name.to_string(), value);
        }
        for (i, case) in CASES.iter().enumerate() {
            let t = parse_polynomial(case.t).expect("residual polynomial");
            map.insert(format!("xiv.T{}", i + 1), t);
        }
        map
    })
}

fn namespace_bindings(map: &BTreeMap<String, Polynomial>, prefix: &str) -> Bindings {
    let mut bindings = Bindings::new();
    for (name, p) in map {
        if let Some(short) = name.strip_prefix(prefix).and_then(|s| s.strip_prefix('.')) {
            let mut chars = short.chars();
            if let (Some(c), None) = (chars.next(), chars.next()) {
                bindings.insert(c, RatFn::from(p.clone()));
            }
        }
    }
    bindings
}

/// Every registered polynomial name, sorted.
pub fn named_polynomials() -> Vec<&'static str> {
    registry().keys().map(String::as_str).collect()
}

/// The exact expansion of a registered polynomial, e.g. `named("xiv.B")`.
pub fn named(name: &str) -> Result<Polynomial> {
    registry()
        .get(name)
        .cloned()
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn get(name: &str) -> Polynomial {
    named(name).expect("registered name")
}

fn xiv_bindings() -> Bindings {
    let mut b = namespace_bindings(registry(), "xiv");
    b.insert('L', RatFn::from(ell6()));
    b
}

fn ell6() -> Polynomial {
    parse_polynomial("a + b + c + d + e + f").unwrap()
}

fn var(c: char) -> Var {
    Var::from_char(c).expect("fixed variable")
}

pub type Point = BTreeMap<char, Rational>;

fn uniform_point(value: Rational) -> Point {
    "abcdef".chars().map(|c| (c, value.clone())).collect()
}

fn format_point(p: &Point) -> String {
    p.iter()
        .map(|(c, v)| format!("{c}={}", format_rational(v)))
        .collect::<Vec<_>>()
        .join(",")
}

/// Whether a certificate is a mathematical claim or a recorded typo probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    /// `left - right` has this nonzero coefficient.
    Monomial {
        monomial: String,
        #[serde(with = "crate::rational::serde_str")]
        coefficient: Rational,
    },
    /// An expansion that should be coefficientwise nonnegative is not.
    NegativeCoefficient {
        monomial: String,
        #[serde(with = "crate::rational::serde_str")]
        coefficient: Rational,
    },
    /// A point where the claimed relation is violated.
    Witness {
        point: String,
        #[serde(with = "crate::rational::serde_str")]
        left: Rational,
        #[serde(with = "crate::rational::serde_str")]
        right: Rational,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Monomial { monomial, coefficient } => write!(
                f,
                "left - right has coefficient {} at {monomial}",
                format_rational(coefficient)
            ),
            Failure::NegativeCoefficient { monomial, coefficient } => write!(
                f,
                "coefficient {} at {monomial} is negative",
                format_rational(coefficient)
            ),
            Failure::Witness { point, left, right } => write!(
                f,
                "at {point}: left = {}, right = {}",
                format_rational(left),
                format_rational(right)
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCertificate {
    pub name: String,
    pub statement: String,
    pub expectation: Expectation,
    pub failure: Option<Failure>,
}

impl IdentityCertificate {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Holds-claims must pass; probes must fail.
    pub fn as_expected(&self) -> bool {
        match self.expectation {
            Expectation::Holds => self.passed(),
            Expectation::Fails => !self.passed(),
        }
    }
}

impl fmt::Display for IdentityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // A probe is fine when it fails: the typeset formula is wrong.
        let status = if self.as_expected() { "pass" } else { "FAIL" };
        let tag = match (self.expectation, self.passed()) {
            (Expectation::Holds, _) => "",
            (Expectation::Fails, false) => " (probe, fails as expected)",
            (Expectation::Fails, true) => " (probe, unexpectedly holds)",
        };
        write!(f, "{status} {}{tag}: {}", self.name, self.statement)?;
        if let Some(failure) = &self.failure {
            write!(f, " [{failure}]")?;
        }
        Ok(())
    }
}

fn polynomial_difference(left: &Polynomial, right: &Polynomial) -> Option<Failure> {
    let diff = left - right;
    let first = diff.terms().next().map(|(m, c)| Failure::Monomial {
        monomial: format_monomial(m),
        coefficient: c.clone(),
    });
    first
}

/// Points used to exhibit a failing rational identity.
fn probe_points() -> Vec<Point> {
    let mut pts = vec![uniform_point(int(1))];
    let ramp: Point = "abcdef".chars().zip(1..).map(|(c, i)| (c, int(i))).collect();
    pts.push(ramp);
    let mut bump = uniform_point(int(1));
    bump.insert('a', int(2));
    pts.push(bump);
    pts
}

pub(crate) fn ratfn_difference(left: &RatFn, right: &RatFn) -> Option<Failure> {
    if left.identical(right) {
        return None;
    }
    for p in probe_points() {
        if let (Ok(l), Ok(r)) = (left.evaluate_at(&p), right.evaluate_at(&p)) {
            if l != r {
                return Some(Failure::Witness {
                    point: format_point(&p),
                    left: l,
                    right: r,
                });
            }
        }
    }
    let diff = left.cleared_difference(right);
    let (m, c) = diff.terms().next().expect("nonzero difference");
    Some(Failure::Monomial {
        monomial: format_monomial(m),
        coefficient: c.clone(),
    })
}

/// Witness for a claimed inequality `poly >= 0` (or `= 0` when `exact`).
fn value_at(poly: &Polynomial, point: &Point, exact: bool) -> Option<Failure> {
    let v = poly.evaluate_at(point);
    let bad = if exact { !v.is_zero() } else { v.is_negative() };
    bad.then(|| Failure::Witness {
        point: format_point(point),
        left: v,
        right: Rational::zero(),
    })
}

fn shift_substitution(case: &CaseData) -> Vec<(Var, Polynomial)> {
    case.shifts
        .iter()
        .map(|&(big, small, slack)| {
            let p = Polynomial::var(var(small)) + Polynomial::var(var(slack));
            (var(big), p)
        })
        .collect()
}

fn check_expansion(case: &CaseData, expansion: &str) -> Option<Failure> {
    let t = parse_polynomial(case.t).unwrap();
    let shifted = t.substitute_all(&shift_substitution(case));
    let displayed = parse_polynomial(expansion).unwrap();
    if let Some(f) = polynomial_difference(&shifted, &displayed) {
        return Some(f);
    }
    displayed
        .first_negative()
        .map(|(m, c)| Failure::NegativeCoefficient {
            monomial: format_monomial(&m),
            coefficient: c,
        })
}

struct Entry {
    name: String,
    statement: String,
    expectation: Expectation,
    check: Box<dyn Fn() -> Option<Failure> + Send + Sync>,
}

fn entry(
    name: impl Into<String>,
    statement: impl Into<String>,
    expectation: Expectation,
    check: impl Fn() -> Option<Failure> + Send + Sync + 'static,
) -> Entry {
    Entry {
        name: name.into(),
        statement: statement.into(),
        expectation,
        check: Box::new(check),
    }
}

fn rat(src: &str, b: &Bindings) -> RatFn {
    parse_ratfn(src, b).unwrap_or_else(|e| panic!("{src}: {e}"))
}

fn entries() -> Vec<Entry> {
    use Expectation::{Fails, Holds};
    let mut out = vec![
        entry("xiv.D_equals_M", "D = M", Holds, || {
            polynomial_difference(&get("xiv.D"), &get("xiv.M"))
        }),
        entry("xiv.ellC", "(a+b+c+d+e+f)C = D + 3A + 4B", Holds, || {
            let b = xiv_bindings();
            polynomial_difference(
                &(&ell6() * &get("xiv.C")),
                &rat("D + 3A + 4B", &b).as_polynomial().unwrap(),
            )
        }),
        entry(
            "xiv.S_sum_of_squares",
            "3M - 7A - 20B equals its sum-of-squares form",
            Holds,
            || polynomial_difference(&get("xiv.S"), &parse_polynomial(S_DECOMPOSITION).unwrap()),
        ),
        entry(
            "xiv.tau_rewrite",
            "L/12 - (A+2B)/(6C) = 5L/96 + S/(96C)",
            Holds,
            || {
                let b = xiv_bindings();
                ratfn_difference(&rat("L/12 - (A+2B)/(6C)", &b), &rat("5L/96 + S/(96C)", &b))
            },
        ),
        entry(
            "xiv.phi_rewrite",
            "L/9 - (2A+7B)/(9C) = 17L/288 + R/(288C)",
            Holds,
            || {
                let b = xiv_bindings();
                ratfn_difference(
                    &rat("L/9 - (2A+7B)/(9C)", &b),
                    &rat("17L/288 + R/(288C)", &b),
                )
            },
        ),
        entry(
            "xiv.theorem_consistency",
            "the closed forms for tau, theta and phi satisfy phi = 13tau/3 + theta/12 - L/4",
            Holds,
            || {
                let b = xiv_bindings();
                ratfn_difference(
                    &rat("L/9 - (2A+7B)/(9C)", &b),
                    &rat("13/3(L/12 - (A+2B)/(6C)) + (6A+8B)/(12C) - L/4", &b),
                )
            },
        ),
        entry("xiv.S_diagonal", "S vanishes on a=b=c=d=e=f", Holds, || {
            diagonal_zero(&get("xiv.S"))
        }),
        entry("xiv.R_diagonal", "R vanishes on a=b=c=d=e=f", Holds, || {
            diagonal_zero(&get("xiv.R"))
        }),
    ];
    for (i, case) in CASES.iter().enumerate() {
        let idx = i + 1;
        out.push(entry(
            format!("xiv.case_{}", case.label),
            format!("R = case {} decomposition + 15 T{idx}", case.label),
            Holds,
            move || {
                let mut b = Bindings::new();
                b.insert('T', RatFn::from(parse_polynomial(CASES[i].t).unwrap()));
                let rhs = rat(CASES[i].decomposition, &b).as_polynomial().unwrap();
                polynomial_difference(&get("xiv.R"), &rhs)
            },
        ));
    }
    for (i, case) in CASES.iter().enumerate() {
        let idx = i + 1;
        let shifts = case
            .shifts
            .iter()
            .map(|(x, y, s)| format!("{x}={y}+{s}"))
            .collect::<Vec<_>>()
            .join(", ");
        out.push(entry(
            format!("xiv.T{idx}_sub"),
            format!("T{idx} with {shifts} has the displayed nonnegative expansion"),
            Holds,
            move || check_expansion(&CASES[i], CASES[i].expansion),
        ));
    }
    out.extend([
        entry(
            "viii.H_amhm",
            "H = (b+c+d+e)(bcd+bce+bde+cde) - 16bcde",
            Holds,
            || {
                polynomial_difference(
                    &get("viii.H"),
                    &parse_polynomial("(b+c+d+e)(bcd+bce+bde+cde) - 16bcde").unwrap(),
                )
            },
        ),
        entry(
            "viii.denominator",
            "D = cde + a(b+c)(d+e) + b(de + c(d+e))",
            Holds,
            || {
                polynomial_difference(
                    &get("viii.D"),
                    &parse_polynomial("cde + a(b+c)(d+e) + b(de + c(d+e))").unwrap(),
                )
            },
        ),
        entry(
            "viii.phi_rewrite",
            "phi - L/16 = (a(N+11M) + 14H)/(288D)",
            Holds,
            || {
                let mut b = namespace_bindings(registry(), "viii");
                b.insert('L', rat("a+b+c+d+e", &Bindings::new()));
                let phi = rat(
                    "L/9 - (7bcde + 2a(cde + b(de + c(d+e))))/(9(cde + a(b+c)(d+e) + b(de + c(d+e))))",
                    &b,
                );
                ratfn_difference(&phi, &rat("L/16 + (a(N + 11M) + 14H)/(288D)", &b))
            },
        ),
        entry(
            "xiii.H_amhm",
            "H = (c+d+e+f)(cde+cdf+cef+def) - 16cdef",
            Holds,
            || {
                polynomial_difference(
                    &get("xiii.H"),
                    &parse_polynomial("(c+d+e+f)(cde+cdf+cef+def) - 16cdef").unwrap(),
                )
            },
        ),
        entry(
            "xiii.phi_rewrite",
            "phi - L/16 = ((a+b)(N+11M) + 14H + 192ab(c+d)(e+f))/(288D)",
            Holds,
            || {
                let mut b = namespace_bindings(registry(), "xiii");
                b.insert('L', RatFn::from(ell6()));
                ratfn_difference(
                    &rat("L/9 - (2A - 6B + 7C)/(9D)", &b),
                    &rat("L/16 + ((a+b)(N + 11M) + 14H + 192ab(c+d)(e+f))/(288D)", &b),
                )
            },
        ),
        entry(
            "sym.equivalence",
            "the symmetric A and C expand to xiv.A and xiv.C, and 32C times the inequality is 15LC - 64A - 224B = R",
            Holds,
            || {
                polynomial_difference(&get("sym.A"), &get("xiv.A"))
                    .or_else(|| polynomial_difference(&get("sym.C"), &get("xiv.C")))
                    .or_else(|| {
                        let b = xiv_bindings();
                        let cleared = rat("32C(15/32 L - (7B + 2A)/C)", &b);
                        let target = rat("15LC - 64A - 224B", &b);
                        ratfn_difference(&cleared, &target)
                    })
                    .or_else(|| {
                        let b = xiv_bindings();
                        let p = rat("15LC - 64A - 224B", &b).as_polynomial().unwrap();
                        polynomial_difference(&p, &get("xiv.R"))
                    })
            },
        ),
        entry(
            "xiv.tau_bound",
            "16C(3/16 L - (A + 2B)/C) = S, with equality on the diagonal",
            Holds,
            || {
                let b = xiv_bindings();
                let p = rat("16C(3/16 L - (A + 2B)/C)", &b).as_polynomial().unwrap();
                polynomial_difference(&p, &get("xiv.S"))
                    .or_else(|| value_at(&p, &uniform_point(int(1)), true))
            },
        ),
        entry(
            "xiv.phi_simplex",
            "15C - 64A - 224B vanishes at a=...=f=1/6 and is R on the simplex",
            Holds,
            || {
                let b = xiv_bindings();
                let p = rat("15C - 64A - 224B", &b).as_polynomial().unwrap();
                let homog = rat("15LC - 64A - 224B", &b).as_polynomial().unwrap();
                value_at(&p, &uniform_point(frac(1, 6)), true)
                    .or_else(|| polynomial_difference(&homog, &get("xiv.R")))
            },
        ),
        entry(
            "xiv.tau_simplex",
            "3C - 16A - 32B vanishes at a=...=f=1/6 and 3LC - 16A - 32B = S",
            Holds,
            || {
                let b = xiv_bindings();
                let p = rat("3C - 16A - 32B", &b).as_polynomial().unwrap();
                let homog = rat("3LC - 16A - 32B", &b).as_polynomial().unwrap();
                value_at(&p, &uniform_point(frac(1, 6)), true)
                    .or_else(|| polynomial_difference(&homog, &get("xiv.S")))
            },
        ),
        entry(
            "probe.xiv_tau_bound_as_printed",
            "C(1/32 L - (2B + A)/C) >= 0 as typeset",
            Fails,
            || {
                let b = xiv_bindings();
                let p = rat("C(1/32 L - (2B + A)/C)", &b).as_polynomial().unwrap();
                value_at(&p, &uniform_point(int(1)), false)
            },
        ),
        entry(
            "probe.xiv_phi_simplex_as_printed",
            "15C - 224A - 64B >= 0 at a=...=f=1/6 as typeset",
            Fails,
            || {
                let b = xiv_bindings();
                let p = rat("15C - 224A - 64B", &b).as_polynomial().unwrap();
                value_at(&p, &uniform_point(frac(1, 6)), false)
            },
        ),
        entry(
            "probe.xiv_phi_over_C_as_printed",
            "L/9 - (2A+7B)/(9C) = 17L/288 + R/C as typeset",
            Fails,
            || {
                let b = xiv_bindings();
                ratfn_difference(&rat("L/9 - (2A+7B)/(9C)", &b), &rat("17L/288 + R/C", &b))
            },
        ),
        entry(
            "probe.xiv_T3_sub_as_printed",
            "T3 shifted expansion as typeset (term 2bfm^2)",
            Fails,
            || check_expansion(&CASES[2], PRINTED_T3_EXPANSION),
        ),
        entry(
            "probe.xiv_T4_sub_as_printed",
            "T4 shifted expansion as typeset (term 2bfm^2)",
            Fails,
            || check_expansion(&CASES[3], PRINTED_T4_EXPANSION),
        ),
        entry(
            "probe.g3_IX_tau_as_printed",
            "tau = L/12 + b/6 agrees with the g3.IX theta and phi entries",
            Fails,
            crate::catalog::printed_g3_ix_tau_failure,
        ),
        entry(
            "g3_IX_tau_corrected",
            "tau = L/12 - de(b+c)/(6(de+(b+c)(d+e))) agrees with the g3.IX theta and phi entries",
            Holds,
            crate::catalog::corrected_g3_ix_tau_failure,
        ),
        entry(
            "viii.D_spanning_trees",
            "viii.D is the sum over spanning trees of the product of complementary lengths",
            Holds,
            || crate::catalog::spanning_tree_failure("g3.VIII", "viii.D"),
        ),
        entry(
            "xiii.D_spanning_trees",
            "xiii.D is the sum over spanning trees of the product of complementary lengths",
            Holds,
            || crate::catalog::spanning_tree_failure("g3.XIII", "xiii.D"),
        ),
        entry(
            "xiv.C_spanning_trees",
            "xiv.C is the sum over spanning trees of the product of complementary lengths",
            Holds,
            || crate::catalog::spanning_tree_failure("g3.XIV", "xiv.C"),
        ),
    ]);
    out
}

fn diagonal_zero(p: &Polynomial) -> Option<Failure> {
    let t = Polynomial::var(var('k'));
    let subs: Vec<(Var, Polynomial)> = "abcdef".chars().map(|c| (var(c), t.clone())).collect();
    let on_diagonal = p.substitute_all(&subs);
    polynomial_difference(&on_diagonal, &Polynomial::zero())
}

/// Names of all certificates, in registry order.
pub fn identity_names() -> Vec<String> {
    entries().into_iter().map(|e| e.name).collect()
}

fn run(e: &Entry) -> IdentityCertificate {
    IdentityCertificate {
        name: e.name.clone(),
        statement: e.statement.clone(),
        expectation: e.expectation,
        failure: (e.check)(),
    }
}

pub fn verify_identity(name: &str) -> Result<IdentityCertificate> {
    entries()
        .iter()
        .find(|e| e.name == name)
        .map(run)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Runs every certificate; output order matches [`identity_names`].
pub fn verify_all() -> Vec<IdentityCertificate> {
    entries().par_iter().map(run).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at_ones(name: &str) -> Rational {
        named(name).unwrap().evaluate_at(&uniform_point(int(1)))
    }

    #[test]
    fn monomial_counts_at_unit_lengths() {
        assert_eq!(at_ones("xiv.A"), int(12));
        assert_eq!(at_ones("xiv.B"), int(3));
        assert_eq!(at_ones("xiv.C"), int(16));
        assert_eq!(at_ones("xiv.D"), int(48));
        assert_eq!(at_ones("xiv.M"), int(48));
        assert_eq!(at_ones("xiv.R"), int(0));
        assert_eq!(named("xiv.B").unwrap().term_count(), 3);
    }

    #[test]
    fn ell_times_c_has_96_terms() {
        let p = &ell6() * &get("xiv.C");
        assert_eq!(p.sum_of_coefficients(), int(96));
        assert_eq!(p.term_count(), 48 + 12 + 3);
    }

    #[test]
    fn unknown_names() {
        assert!(named("xiv.Q").is_err());
        assert!(verify_identity("nope").is_err());
    }

    #[test]
    fn single_certificates() {
        assert!(verify_identity("xiv.case_I").unwrap().passed());
        assert!(verify_identity("xiv.D_equals_M").unwrap().passed());
        let probe = verify_identity("probe.xiv_phi_simplex_as_printed").unwrap();
        assert!(matches!(probe.failure, Some(Failure::Witness { .. })));
        assert!(probe.as_expected());
    }

    #[test]
    fn everything_as_expected() {
        for cert in verify_all() {
            assert!(cert.as_expected(), "{cert}");
        }
    }
}
