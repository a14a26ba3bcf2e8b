//! Floating-point oracle for tau: integrate `(d/dx r(x, y))^2 / 4` over the
//! graph numerically, with `r` from an independent f64 Laplacian solve on
//! the graph subdivided at `x`.

use admissible::catalog::{self, parse_lengths};
use admissible::graph::PmGraph;
use admissible::invariants::tau;
use admissible::rational::to_f64;

/// Effective resistance between nodes `s` and `t` of a weighted multigraph.
fn resistance(n: usize, edges: &[(usize, usize, f64)], s: usize, t: usize) -> f64 {
    if s == t {
        return 0.0;
    }
    // Ground `t`, inject unit current at `s`, solve L' v = e_s.
    let idx = |i: usize| if i < t { i } else { i - 1 };
    let m = n - 1;
    let mut a = vec![vec![0.0; m + 1]; m];
    for &(u, v, len) in edges {
        if u == v {
            continue;
        }
        let c = 1.0 / len;
        for (p, q) in [(u, v), (v, u)] {
            if p != t {
                a[idx(p)][idx(p)] += c;
                if q != t {
                    a[idx(p)][idx(q)] -= c;
                }
            }
        }
    }
    a[idx(s)][m] = 1.0;
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        let pivot_row = a[col].clone();
        for (row, r) in a.iter_mut().enumerate() {
            if row != col {
                let f = r[col] / pivot_row[col];
                for (x, p) in r[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * p;
                }
            }
        }
    }
    a[idx(s)][m] / a[idx(s)][idx(s)]
}

/// `r(x, y)` for `x` at distance `t` from the first endpoint of edge `k`,
/// `y` the vertex with index 0.
fn r_on_edge(g: &PmGraph, k: usize, t: f64) -> f64 {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let len = to_f64(&e.length);
        if i == k {
            edges.push((e.u, n, t));
            edges.push((n, e.v, len - t));
        } else {
            edges.push((e.u, e.v, len));
        }
    }
    resistance(n + 1, &edges, n, 0)
}

pub fn tau_by_quadrature(g: &PmGraph) -> f64 {
    // 5-point Gauss-Legendre nodes and weights on [-1, 1].
    const NODES: [(f64, f64); 5] = [
        (0.0, 0.568_888_888_888_888_9),
        (-0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
        (0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
        (-0.906_179_845_938_664, 0.236_926_885_056_189),
        (0.906_179_845_938_664, 0.236_926_885_056_189),
    ];
    const PIECES: usize = 8;
    let mut total = 0.0;
    for (k, e) in g.edges().iter().enumerate() {
        let len = to_f64(&e.length);
        let width = len / PIECES as f64;
        let h = len * 1e-5;
        for piece in 0..PIECES {
            let mid = (piece as f64 + 0.5) * width;
            for (x, w) in NODES {
                let t = mid + x * width / 2.0;
                let slope = (r_on_edge(g, k, t + h) - r_on_edge(g, k, t - h)) / (2.0 * h);
                total += w * width / 2.0 * slope * slope;
            }
        }
    }
    total / 4.0
}

/// Small graphs (at most four edges) with uneven lengths.
pub const CASES: [(&str, &str); 8] = [
    ("g1.I", "a=7/3"),
    ("g0.IV", "a=1,b=5/2,c=1/3"),
    ("g1.V", "a=2,b=1/2,c=3"),
    ("g2.III", "a=1,b=2,c=3"),
    ("g2.IV", "a=3/2,b=1/5,c=2,d=7/4"),
    ("g3.II", "a=1,b=2,c=5/3,d=1/2"),
    ("g3.III", "a=2/3,b=3,c=1,d=5/4"),
    ("g1.VI", "a=1,b=2,c=3,d=4"),
];

/// `(family, exact tau, quadrature tau, relative error)` for every case.
pub fn compare_all() -> Vec<(&'static str, f64, f64, f64)> {
    CASES
        .iter()
        .map(|&(id, lengths)| {
            let g = catalog::build(id, &parse_lengths(lengths).unwrap()).unwrap();
            assert!(g.edge_count() <= 4, "{id}");
            let exact = to_f64(&tau(&g).unwrap());
            let numeric = tau_by_quadrature(&g);
            (id, exact, numeric, ((numeric - exact) / exact).abs())
        })
        .collect()
}
