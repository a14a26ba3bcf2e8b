//! Topologies and closed forms of the 41 families.
//!
//! Edge ids are the length parameters themselves. Closed forms use `L` for
//! the total length; the two largest simple graphs name their recurring
//! polynomials with extra uppercase bindings.

pub(crate) struct FamilyDef {
    pub id: &'static str,
    pub vertices: &'static [(&'static str, u32)],
    /// `(parameter, endpoint, endpoint)`.
    pub edges: &'static [(char, &'static str, &'static str)],
    pub bindings: &'static [(char, &'static str)],
    pub forms: Forms,
}

pub(crate) struct Forms {
    pub ell: &'static str,
    /// Only listed where it is not simply `L - delta1`.
    pub delta0: Option<&'static str>,
    pub delta1: &'static str,
    pub tau: &'static str,
    pub theta: &'static str,
    pub phi: &'static str,
    pub lambda: &'static str,
    pub epsilon: &'static str,
}

const TREE: Forms = Forms {
    ell: "",
    delta0: Some("0"),
    delta1: "L",
    tau: "L/4",
    theta: "6L",
    phi: "4L/3",
    lambda: "2L/7",
    epsilon: "5L/3",
};

const fn tree(ell: &'static str) -> Forms {
    Forms { ell, ..TREE }
}

/// Rows whose only non-circle contribution is a bridge part `s` of
/// total length `s` (tau = L/12 + s/6, theta = 6s).
macro_rules! bridged {
    ($ell:expr, $d0:expr, $s:expr) => {
        Forms {
            ell: $ell,
            delta0: $d0,
            delta1: $s,
            tau: concat!("L/12 + (", $s, ")/6"),
            theta: concat!("6(", $s, ")"),
            phi: concat!("L/9 + 11(", $s, ")/9"),
            lambda: concat!("3L/28 + 5(", $s, ")/28"),
            epsilon: concat!("2L/9 + 13(", $s, ")/9"),
        }
    };
}

pub(crate) const FAMILIES: &[FamilyDef] = &[
    // ---- g = 0: trees ----
    FamilyDef {
        id: "g0.I",
        vertices: &[("P", 3)],
        edges: &[],
        bindings: &[],
        forms: Forms {
            ell: "0",
            delta0: Some("0"),
            delta1: "0",
            tau: "0",
            theta: "0",
            phi: "0",
            lambda: "0",
            epsilon: "0",
        },
    },
    FamilyDef {
        id: "g0.II",
        vertices: &[("P", 1), ("Q", 2)],
        edges: &[('a', "P", "Q")],
        bindings: &[],
        forms: tree("a"),
    },
    FamilyDef {
        id: "g0.III",
        vertices: &[("P", 1), ("M", 1), ("Q", 1)],
        edges: &[('a', "P", "M"), ('b', "M", "Q")],
        bindings: &[],
        forms: tree("a + b"),
    },
    FamilyDef {
        id: "g0.IV",
        vertices: &[("W", 0), ("P", 1), ("Q", 1), ("R", 1)],
        edges: &[('a', "W", "P"), ('b', "W", "Q"), ('c', "W", "R")],
        bindings: &[],
        forms: tree("a + b + c"),
    },
    // ---- g = 1 ----
    FamilyDef {
        id: "g1.I",
        vertices: &[("X", 2)],
        edges: &[('a', "X", "X")],
        bindings: &[],
        forms: Forms {
            ell: "a",
            delta0: Some("a"),
            delta1: "0",
            tau: "L/12",
            theta: "0",
            phi: "L/9",
            lambda: "3L/28",
            epsilon: "2L/9",
        },
    },
    FamilyDef {
        id: "g1.II",
        vertices: &[("P", 1), ("Q", 1)],
        edges: &[('a', "P", "Q"), ('b', "P", "Q")],
        bindings: &[],
        forms: Forms {
            ell: "a + b",
            delta0: Some("a + b"),
            delta1: "0",
            tau: "L/12",
            theta: "8ab/(a+b)",
            phi: "L/9 + 2ab/(3(a+b))",
            lambda: "3L/28 + ab/(7(a+b))",
            epsilon: "2L/9 + 4ab/(3(a+b))",
        },
    },
    FamilyDef {
        id: "g1.III",
        vertices: &[("X", 1), ("P", 1)],
        edges: &[('a', "X", "P"), ('b', "X", "X")],
        bindings: &[],
        forms: bridged!("a + b", Some("b"), "a"),
    },
    FamilyDef {
        id: "g1.IV",
        vertices: &[("X", 0), ("P", 2)],
        edges: &[('a', "X", "P"), ('b', "X", "X")],
        bindings: &[],
        forms: bridged!("a + b", Some("b"), "a"),
    },
    FamilyDef {
        id: "g1.V",
        vertices: &[("J", 0), ("P", 1), ("Q", 1)],
        edges: &[('a', "J", "Q"), ('b', "J", "P"), ('c', "J", "P")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c",
            delta0: Some("b + c"),
            delta1: "a",
            tau: "L/12 + a/6",
            theta: "6a + 8bc/(b+c)",
            phi: "L/9 + (6bc+11a(b+c))/(9(b+c))",
            lambda: "3L/28 + (4bc+5a(b+c))/(28(b+c))",
            epsilon: "2L/9 + (12bc+13a(b+c))/(9(b+c))",
        },
    },
    FamilyDef {
        id: "g1.VI",
        vertices: &[("J", 0), ("K", 0), ("P", 1), ("Q", 1)],
        edges: &[('a', "J", "P"), ('b', "K", "Q"), ('c', "J", "K"), ('d', "J", "K")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: Some("d + c"),
            delta1: "a + b",
            tau: "L/12 + (a+b)/6",
            theta: "6(a + b) + 8cd/(c+d)",
            phi: "L/9 + (6cd+11(a+b)(c+d))/(9(c+d))",
            lambda: "3L/28 + (4cd+5(a+b)(c+d))/(28(c+d))",
            epsilon: "2L/9 + (12cd+13(a+b)(c+d))/(9(c+d))",
        },
    },
    FamilyDef {
        id: "g1.VII",
        vertices: &[("X", 0), ("P", 1), ("Q", 1)],
        edges: &[('a', "X", "P"), ('b', "X", "Q"), ('c', "X", "X")],
        bindings: &[],
        forms: bridged!("a + b + c", Some("c"), "a + b"),
    },
    FamilyDef {
        id: "g1.VIII",
        vertices: &[("X", 0), ("Y", 1), ("P", 1)],
        edges: &[('a', "X", "Y"), ('b', "Y", "P"), ('c', "X", "X")],
        bindings: &[],
        forms: bridged!("a + b + c", Some("c"), "a + b"),
    },
    FamilyDef {
        id: "g1.IX",
        vertices: &[("X", 0), ("Y", 0), ("P", 1), ("Q", 1)],
        edges: &[('a', "X", "Y"), ('b', "Y", "P"), ('c', "Y", "Q"), ('d', "X", "X")],
        bindings: &[],
        forms: bridged!("a + b + c + d", Some("d"), "a + b + c"),
    },
    // ---- g = 2 ----
    FamilyDef {
        id: "g2.I",
        vertices: &[("X", 1)],
        edges: &[('a', "X", "X"), ('b', "X", "X")],
        bindings: &[],
        forms: Forms {
            ell: "a + b",
            delta0: None,
            delta1: "0",
            tau: "L/12",
            theta: "0",
            phi: "L/9",
            lambda: "3L/28",
            epsilon: "2L/9",
        },
    },
    FamilyDef {
        id: "g2.II",
        vertices: &[("X", 0), ("Y", 1)],
        edges: &[('a', "X", "X"), ('b', "X", "Y"), ('c', "X", "Y")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c",
            delta0: None,
            delta1: "0",
            tau: "L/12",
            theta: "8bc/(b+c)",
            phi: "L/9 + 2bc/(3(b+c))",
            lambda: "3L/28 + bc/(7(b+c))",
            epsilon: "2L/9 + 4bc/(3(b+c))",
        },
    },
    FamilyDef {
        id: "g2.III",
        vertices: &[("X", 1), ("Y", 0)],
        edges: &[('a', "X", "Y"), ('b', "X", "Y"), ('c', "X", "Y")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c",
            delta0: None,
            delta1: "0",
            tau: "L/12 - abc/(6(ab+ac+bc))",
            theta: "6abc/(ab+ac+bc)",
            phi: "L/9 - 2abc/(9(ab+ac+bc))",
            lambda: "3L/28 + abc/(28(ab+ac+bc))",
            epsilon: "2L/9 + 5abc/(9(ab+ac+bc))",
        },
    },
    FamilyDef {
        id: "g2.IV",
        vertices: &[("X", 0), ("Y", 0), ("M", 1)],
        edges: &[('a', "X", "Y"), ('b', "X", "Y"), ('c', "X", "M"), ('d', "M", "Y")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: None,
            delta1: "0",
            tau: "L/12 - ab(c+d)/(6(ab+(a+b)(c+d)))",
            theta: "(6ab(c+d)+8(a+b)cd)/(ab+(a+b)(c+d))",
            phi: "L/9 + (6cd(a+b)-2ab(c+d))/(9(ab+(a+b)(c+d)))",
            lambda: "3L/28 + (4cd(a+b)+ab(c+d))/(28(ab+(a+b)(c+d)))",
            epsilon: "2L/9 + (12cd(a+b)+5ab(c+d))/(9(ab+(a+b)(c+d)))",
        },
    },
    FamilyDef {
        id: "g2.V",
        vertices: &[("X", 0), ("Y", 1)],
        edges: &[('a', "X", "X"), ('b', "Y", "Y"), ('c', "X", "Y")],
        bindings: &[],
        forms: bridged!("a + b + c", None, "c"),
    },
    FamilyDef {
        id: "g2.VI",
        vertices: &[("X", 0), ("Y", 0), ("P", 1)],
        edges: &[('a', "X", "X"), ('b', "X", "Y"), ('c', "X", "Y"), ('d', "Y", "P")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: None,
            delta1: "d",
            tau: "L/12 + d/6",
            theta: "6d + 8bc/(b+c)",
            phi: "L/9 + (6bc+11d(b+c))/(9(b+c))",
            lambda: "3L/28 + (4bc+5d(b+c))/(28(b+c))",
            epsilon: "2L/9 + (12bc+13d(b+c))/(9(b+c))",
        },
    },
    FamilyDef {
        id: "g2.VII",
        vertices: &[("X", 0), ("Y", 0), ("P", 1)],
        edges: &[('a', "X", "Y"), ('b', "X", "Y"), ('c', "X", "Y"), ('d', "Y", "P")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: None,
            delta1: "d",
            tau: "L/12 + d/6 - abc/(6(ab+ac+bc))",
            theta: "6d + 6abc/(ab+ac+bc)",
            phi: "L/9 + 11d/9 - 2abc/(9(ab+ac+bc))",
            lambda: "3L/28 + 5d/28 + abc/(28(ab+ac+bc))",
            epsilon: "2L/9 + 13d/9 + 5abc/(9(ab+ac+bc))",
        },
    },
    FamilyDef {
        id: "g2.VIII",
        vertices: &[("X", 0), ("Y", 0), ("M", 0), ("P", 1)],
        edges: &[
            ('a', "X", "Y"),
            ('b', "X", "Y"),
            ('c', "X", "M"),
            ('d', "M", "Y"),
            ('e', "M", "P"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e",
            delta0: None,
            delta1: "e",
            tau: "L/12 + e/6 - ab(c+d)/(6(ab+(a+b)(c+d)))",
            theta: "6e + (6ab(c+d)+8(a+b)cd)/(ab+(a+b)(c+d))",
            phi: "(L+11e)/9 + (6cd(a+b)-2ab(c+d))/(9(ab+(a+b)(c+d)))",
            lambda: "(3L+5e)/28 + (4cd(a+b)+ab(c+d))/(28(ab+(a+b)(c+d)))",
            epsilon: "(2L+13e)/9 + (12cd(a+b)+5ab(c+d))/(9(ab+(a+b)(c+d)))",
        },
    },
    FamilyDef {
        id: "g2.IX",
        vertices: &[("X", 0), ("P", 1)],
        edges: &[('a', "X", "X"), ('b', "X", "P"), ('c', "X", "X")],
        bindings: &[],
        forms: bridged!("a + b + c", None, "b"),
    },
    FamilyDef {
        id: "g2.X",
        vertices: &[("X", 0), ("Y", 0), ("P", 1)],
        edges: &[('a', "X", "Y"), ('b', "X", "Y"), ('c', "Y", "P"), ('d', "X", "X")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: None,
            delta1: "c",
            tau: "L/12 + c/6",
            theta: "6c + 8ab/(a+b)",
            phi: "L/9 + (6ab+11c(a+b))/(9(a+b))",
            lambda: "3L/28 + (4ab+5c(a+b))/(28(a+b))",
            epsilon: "2L/9 + (12ab+13c(a+b))/(9(a+b))",
        },
    },
    FamilyDef {
        id: "g2.XI",
        vertices: &[("X", 0), ("P", 1), ("Y", 0)],
        edges: &[('a', "X", "X"), ('b', "Y", "Y"), ('c', "X", "P"), ('d', "P", "Y")],
        bindings: &[],
        forms: bridged!("a + b + c + d", None, "c + d"),
    },
    FamilyDef {
        id: "g2.XII",
        vertices: &[("X", 0), ("Y", 0), ("P", 1)],
        edges: &[('a', "X", "X"), ('b', "Y", "Y"), ('c', "X", "Y"), ('d', "Y", "P")],
        bindings: &[],
        forms: bridged!("a + b + c + d", None, "c + d"),
    },
    FamilyDef {
        id: "g2.XIII",
        vertices: &[("X", 0), ("Y", 0), ("M", 0), ("P", 1)],
        edges: &[
            ('a', "X", "Y"),
            ('b', "X", "Y"),
            ('c', "X", "M"),
            ('d', "Y", "P"),
            ('e', "M", "M"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e",
            delta0: None,
            delta1: "d + c",
            tau: "L/12 + (c+d)/6",
            theta: "6(c + d) + 8ab/(a+b)",
            phi: "L/9 + (6ab+11(a+b)(c+d))/(9(a+b))",
            lambda: "3L/28 + (4ab+5(a+b)(c+d))/(28(a+b))",
            epsilon: "2L/9 + (12ab+13(a+b)(c+d))/(9(a+b))",
        },
    },
    FamilyDef {
        id: "g2.XIV",
        vertices: &[("W", 0), ("X", 0), ("Y", 0), ("P", 1)],
        edges: &[
            ('a', "X", "X"),
            ('b', "Y", "Y"),
            ('c', "W", "X"),
            ('d', "W", "Y"),
            ('e', "W", "P"),
        ],
        bindings: &[],
        forms: bridged!("a + b + c + d + e", None, "c + d + e"),
    },
    // ---- g = 3: simple pm-graphs ----
    FamilyDef {
        id: "g3.I",
        vertices: &[("X", 0)],
        edges: &[('a', "X", "X"), ('b', "X", "X"), ('c', "X", "X")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c",
            delta0: None,
            delta1: "0",
            tau: "L/12",
            theta: "0",
            phi: "L/9",
            lambda: "3L/28",
            epsilon: "2L/9",
        },
    },
    FamilyDef {
        id: "g3.II",
        vertices: &[("X", 0), ("Y", 0)],
        edges: &[('a', "X", "Y"), ('b', "X", "Y"), ('c', "X", "Y"), ('d', "X", "Y")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: None,
            delta1: "0",
            tau: "L/12 - abcd/(3(bcd+a(cd+b(c+d))))",
            theta: "8abcd/(bcd+a(cd+b(c+d)))",
            phi: "L/9 - 7abcd/(9(bcd+a(cd+b(c+d))))",
            lambda: "3L/28",
            epsilon: "2L/9 + 4abcd/(9(bcd+a(cd+b(c+d))))",
        },
    },
    FamilyDef {
        id: "g3.III",
        vertices: &[("X", 0), ("Y", 0)],
        edges: &[('a', "X", "Y"), ('b', "X", "Y"), ('c', "X", "Y"), ('d', "X", "X")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: None,
            delta1: "0",
            tau: "L/12 - abc/(6(ab+ac+bc))",
            theta: "6abc/(ab+ac+bc)",
            phi: "L/9 - 2abc/(9(bc+a(b+c)))",
            lambda: "3L/28 + abc/(28(bc+a(b+c)))",
            epsilon: "2L/9 + 5abc/(9(bc+a(b+c)))",
        },
    },
    FamilyDef {
        id: "g3.IV",
        vertices: &[("X", 0), ("Y", 0)],
        edges: &[('a', "X", "X"), ('b', "Y", "Y"), ('c', "X", "Y"), ('d', "X", "Y")],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d",
            delta0: None,
            delta1: "0",
            tau: "L/12",
            theta: "8cd/(c+d)",
            phi: "L/9 + 2cd/(3(c+d))",
            lambda: "3L/28 + cd/(7(c+d))",
            epsilon: "2L/9 + 4cd/(3(c+d))",
        },
    },
    FamilyDef {
        id: "g3.V",
        vertices: &[("X", 0), ("Y", 0)],
        edges: &[('a', "X", "X"), ('b', "X", "X"), ('c', "Y", "Y"), ('d', "X", "Y")],
        bindings: &[],
        forms: bridged!("a + b + c + d", None, "d"),
    },
    FamilyDef {
        id: "g3.VI",
        vertices: &[("X", 0), ("Y", 0), ("Z", 0)],
        edges: &[
            ('a', "X", "X"),
            ('b', "Y", "Y"),
            ('c', "Z", "Z"),
            ('d', "X", "Y"),
            ('e', "Y", "Z"),
        ],
        bindings: &[],
        forms: bridged!("a + b + c + d + e", None, "d + e"),
    },
    FamilyDef {
        id: "g3.VII",
        vertices: &[("X", 0), ("Y", 0), ("Z", 0)],
        edges: &[
            ('a', "X", "X"),
            ('b', "Z", "Z"),
            ('c', "X", "Y"),
            ('d', "Y", "Z"),
            ('e', "Y", "Z"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e",
            delta0: None,
            delta1: "c",
            tau: "L/12 + c/6",
            theta: "6c + 8de/(d+e)",
            phi: "L/9 + 11c/9 + 2de/(3(d+e))",
            lambda: "3L/28 + 5c/28 + de/(7(d+e))",
            epsilon: "2L/9 + 13c/9 + 4de/(3(d+e))",
        },
    },
    FamilyDef {
        id: "g3.VIII",
        vertices: &[("X", 0), ("Y", 0), ("Z", 0)],
        edges: &[
            ('a', "X", "Y"),
            ('b', "X", "Z"),
            ('c', "X", "Z"),
            ('d', "Y", "Z"),
            ('e', "Y", "Z"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e",
            delta0: None,
            delta1: "0",
            tau: "L/12 - (abcd+abce+abde+acde+2bcde)/(6(abd+acd+bcd+abe+ace+bce+bde+cde))",
            theta: "(6abcd+6abce+6abde+6acde+8bcde)/(abd+acd+bcd+abe+ace+bce+bde+cde)",
            phi: "L/9 - (7bcde+2a(cde+b(de+c(d+e))))/(9(cde+a(b+c)(d+e)+b(de+c(d+e))))",
            lambda: "3L/28 + a((c+b)de+bc(d+e))/(28(cde+a(b+c)(d+e)+b(de+c(d+e))))",
            epsilon: "2L/9 + (4bcde+5a(cde+b(de+c(d+e))))/(9(cde+a(b+c)(d+e)+b(de+c(d+e))))",
        },
    },
    FamilyDef {
        id: "g3.IX",
        vertices: &[("X", 0), ("Y", 0), ("Z", 0)],
        edges: &[
            ('a', "Z", "Z"),
            ('b', "X", "Z"),
            ('c', "Y", "Z"),
            ('d', "X", "Y"),
            ('e', "X", "Y"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e",
            delta0: None,
            delta1: "0",
            tau: G3_IX_TAU,
            theta: "(8bcd+8bce+6bde+6cde)/(bd+cd+be+ce+de)",
            phi: "L/9 + (-2(b+c)de+6bc(d+e))/(9(de+(b+c)(d+e)))",
            lambda: "3L/28 + ((b+c)de+4bc(d+e))/(28(de+(b+c)(d+e)))",
            epsilon: "2L/9 + (5(b+c)de+12bc(d+e))/(9(de+(b+c)(d+e)))",
        },
    },
    FamilyDef {
        id: "g3.X",
        vertices: &[("X", 0), ("Y", 0), ("Z", 0)],
        edges: &[
            ('a', "X", "Y"),
            ('b', "X", "Y"),
            ('c', "X", "Y"),
            ('d', "Y", "Z"),
            ('e', "Z", "Z"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e",
            delta0: None,
            delta1: "d",
            tau: "L/12 + d/6 - abc/(6(ab+ac+bc))",
            theta: "6d + 6abc/(ab+ac+bc)",
            phi: "L/9 + 11d/9 - 2abc/(9(bc+a(b+c)))",
            lambda: "3L/28 + 5d/28 + abc/(28(bc+a(b+c)))",
            epsilon: "2L/9 + 13d/9 + 5abc/(9(bc+a(b+c)))",
        },
    },
    FamilyDef {
        id: "g3.XI",
        vertices: &[("W", 0), ("Y", 0), ("Z", 0), ("X", 0)],
        edges: &[
            ('a', "W", "W"),
            ('b', "X", "X"),
            ('c', "W", "Y"),
            ('d', "Z", "X"),
            ('e', "Y", "Z"),
            ('f', "Y", "Z"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e + f",
            delta0: None,
            delta1: "c + d",
            tau: "L/12 + (c+d)/6",
            theta: "6(c + d) + 8ef/(e+f)",
            phi: "L/9 + 11(c+d)/9 + 2ef/(3(e+f))",
            lambda: "3L/28 + 5(c+d)/28 + ef/(7(e+f))",
            epsilon: "2L/9 + 13(c+d)/9 + 4ef/(3(e+f))",
        },
    },
    FamilyDef {
        id: "g3.XII",
        vertices: &[("X", 0), ("Y", 0), ("M", 0), ("Z", 0)],
        edges: &[
            ('a', "X", "Y"),
            ('b', "X", "Y"),
            ('c', "X", "M"),
            ('d', "M", "Y"),
            ('e', "M", "Z"),
            ('f', "Z", "Z"),
        ],
        bindings: &[],
        forms: Forms {
            ell: "a + b + c + d + e + f",
            delta0: None,
            delta1: "e",
            tau: "L/12 + e/6 - ab(c+d)/(6(ab+(a+b)(c+d)))",
            theta: "6e + (6abc+6abd+8acd+8bcd)/(ab+(a+b)(c+d))",
            phi: "L/9 + 11e/9 + (6(a+b)cd-2ab(c+d))/(9(ab+(a+b)(c+d)))",
            lambda: "3L/28 + 5e/28 + (4(a+b)cd+ab(c+d))/(28(ab+(a+b)(c+d)))",
            epsilon: "2L/9 + 13e/9 + (12(a+b)cd+5ab(c+d))/(9(ab+(a+b)(c+d)))",
        },
    },
    FamilyDef {
        id: "g3.XIII",
        vertices: &[("X", 0), ("Y", 0), ("W", 0), ("Z", 0)],
        edges: &[
            ('a', "Z", "X"),
            ('b', "Y", "W"),
            ('c', "X", "Y"),
            ('d', "X", "Y"),
            ('e', "W", "Z"),
            ('f', "W", "Z"),
        ],
        bindings: &[
            ('A', "acde + bcde + acdf + bcdf + acef + bcef + adef + bdef"),
            ('B', "abce + abde + abcf + abdf"),
            ('C', "cdef"),
            ('D', "(a+b)ce + (a+b)de + cde + (a+b)cf + (a+b)df + cdf + cef + def"),
        ],
        forms: Forms {
            ell: "a + b + c + d + e + f",
            delta0: None,
            delta1: "0",
            tau: "L/12 - (A + 2C)/(6D)",
            theta: "(6A + 8B + 8C)/D",
            phi: "L/9 - (2A - 6B + 7C)/(9D)",
            lambda: "3L/28 + (A + 4B)/(28D)",
            epsilon: "2L/9 + (5A + 12B + 4C)/(9D)",
        },
    },
    FamilyDef {
        id: "g3.XIV",
        vertices: &[("1", 0), ("2", 0), ("3", 0), ("4", 0)],
        edges: &[
            ('a', "1", "2"),
            ('b', "1", "3"),
            ('c', "1", "4"),
            ('d', "2", "3"),
            ('e', "2", "4"),
            ('f', "3", "4"),
        ],
        bindings: &[
            (
                'A',
                "abcd + abce + abde + acde + abcf + abdf + bcdf + acef + bcef + adef + bdef + cdef",
            ),
            ('B', "bcde + acdf + abef"),
            (
                'C',
                "abd + acd + bcd + abe + ace + bce + bde + cde + abf + acf + bcf + adf + cdf + aef \
                 + bef + def",
            ),
        ],
        forms: Forms {
            ell: "a + b + c + d + e + f",
            delta0: None,
            delta1: "0",
            tau: "L/12 - (A + 2B)/(6C)",
            theta: "(6A + 8B)/C",
            phi: "L/9 - (2A + 7B)/(9C)",
            lambda: "3L/28 + A/(28C)",
            epsilon: "2L/9 + (5A + 4B)/(9C)",
        },
    },
];

/// tau for g3.IX, the value forced by its theta and phi entries.
pub(crate) const G3_IX_TAU: &str = "L/12 - de(b+c)/(6(de+(b+c)(d+e)))";

/// tau for g3.IX as typeset in the table.
pub(crate) const G3_IX_TAU_PRINTED: &str = "L/12 + b/6";
