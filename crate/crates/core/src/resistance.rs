//! Effective resistance between vertices, computed exactly from the discrete
//! Laplacian, and the bridge / type classification of edges.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Dsu, PmGraph};
use crate::rational::Rational;

/// Dense square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = RationalMatrix::zeros(n);
        for i in 0..n {
            *inv.get_mut(i, i) = Rational::one();
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = Rational::one() / a.get(col, col);
            for j in 0..n {
                *a.get_mut(col, j) *= &scale;
                *inv.get_mut(col, j) *= &scale;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let da = &factor * a.get(col, j);
                    *a.get_mut(r, j) -= da;
                    let di = &factor * inv.get(col, j);
                    *inv.get_mut(r, j) -= di;
                }
            }
        }
        Some(inv)
    }
}

/// Vertex-indexed Laplacian: off-diagonal `-(sum of 1/L)` over the non-loop
/// edges joining the pair, diagonal the negated row sum. Loops contribute 0.
pub fn laplacian(g: &PmGraph) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(g.vertex_count());
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        let conductance = Rational::one() / &e.length;
        *m.get_mut(e.u, e.v) -= &conductance;
        *m.get_mut(e.v, e.u) -= &conductance;
        *m.get_mut(e.u, e.u) += &conductance;
        *m.get_mut(e.v, e.v) += &conductance;
    }
    m
}

/// All-pairs effective resistance between the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResistanceMatrix {
    ids: Vec<String>,
    values: RationalMatrix,
}

impl ResistanceMatrix {
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.values.get(i, j)
    }

    pub fn between(&self, p: &str, q: &str) -> Option<&Rational> {
        let i = self.ids.iter().position(|id| id == p)?;
        let j = self.ids.iter().position(|id| id == q)?;
        Some(self.get(i, j))
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.values
    }
}

pub fn resistance_matrix(g: &PmGraph) -> Result<ResistanceMatrix> {
    resistance_matrix_grounded(g, 0)
}

/// Grounds vertex `ground`, inverts the reduced Laplacian and reads
/// `r(i, j) = G(i,i) + G(j,j) - 2 G(i,j)` with the ground row of `G` zero.
pub fn resistance_matrix_grounded(g: &PmGraph, ground: usize) -> Result<ResistanceMatrix> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidGraph(crate::graph::validate(g)));
    }
    assert!(ground < n, "ground vertex out of range");
    let full = laplacian(g);
    let keep: Vec<usize> = (0..n).filter(|&i| i != ground).collect();
    let mut reduced = RationalMatrix::zeros(n - 1);
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            *reduced.get_mut(a, b) = full.get(i, j).clone();
        }
    }
    let green = reduced
        .inverse()
        .ok_or_else(|| Error::InvalidGraph(crate::graph::validate(g)))?;
    let mut embedded = RationalMatrix::zeros(n);
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            *embedded.get_mut(i, j) = green.get(a, b).clone();
        }
    }
    let mut values = RationalMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                *values.get_mut(i, j) =
                    embedded.get(i, i) + embedded.get(j, j) - embedded.get(i, j) * Rational::from_integer(2.into());
            }
        }
    }
    Ok(ResistanceMatrix {
        ids: g.vertices().iter().map(|v| v.id.clone()).collect(),
        values,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// Removing an interior point leaves the graph connected.
    TypeZero,
    /// Interior points split the graph into sides of total genus
    /// `sides.0` (containing the first endpoint) and `sides.1`.
    Bridge { sides: (u32, u32), type_index: u32 },
}

impl EdgeKind {
    pub fn type_index(&self) -> u32 {
        match self {
            EdgeKind::TypeZero => 0,
            EdgeKind::Bridge { type_index, .. } => *type_index,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    /// One entry per edge, in graph edge order.
    pub kinds: Vec<(String, EdgeKind)>,
}

impl EdgeClassification {
    pub fn kind(&self, edge_id: &str) -> Option<EdgeKind> {
        self.kinds
            .iter()
            .find(|(id, _)| id == edge_id)
            .map(|(_, k)| *k)
    }

    pub fn bridges(&self) -> impl Iterator<Item = &str> {
        self.kinds
            .iter()
            .filter(|(_, k)| matches!(k, EdgeKind::Bridge { .. }))
            .map(|(id, _)| id.as_str())
    }
}

/// Classifies every edge. A non-loop edge is a bridge exactly when the
/// resistance between its endpoints equals its length.
pub fn classify_edges(g: &PmGraph, r: &ResistanceMatrix) -> Result<EdgeClassification> {
    let mut kinds = Vec::with_capacity(g.edge_count());
    for (k, e) in g.edges().iter().enumerate() {
        let kind = if !e.is_loop() && r.get(e.u, e.v) == &e.length {
            let sides = bridge_side_genera(g, k);
            if sides.0 == 0 || sides.1 == 0 {
                return Err(Error::DegenerateBridge { edge: e.id.clone() });
            }
            EdgeKind::Bridge {
                sides,
                type_index: sides.0.min(sides.1),
            }
        } else {
            EdgeKind::TypeZero
        };
        kinds.push((e.id.clone(), kind));
    }
    Ok(EdgeClassification { kinds })
}

/// Total genus of the two sides of bridge `k`; the cut points carry `q = 0`.
fn bridge_side_genera(g: &PmGraph, k: usize) -> (u32, u32) {
    let mut dsu = Dsu::new(g.vertex_count());
    for (j, e) in g.edges().iter().enumerate() {
        if j != k {
            dsu.union(e.u, e.v);
        }
    }
    let bridge = &g.edges()[k];
    let side_of = |dsu: &mut Dsu, root: usize| {
        let vertices: Vec<usize> = (0..g.vertex_count())
            .filter(|&i| dsu.find(i) == root)
            .collect();
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(j, e)| j != k && dsu.find(e.u) == root)
            .count();
        let betti = edges + 1 - vertices.len();
        let q: u32 = vertices.iter().map(|&i| g.vertices()[i].q).sum();
        betti as u32 + q
    };
    let ru = dsu.find(bridge.u);
    let rv = dsu.find(bridge.v);
    (side_of(&mut dsu, ru), side_of(&mut dsu, rv))
}

/// Bridges found by depth-first low-link search, as edge indices in
/// increasing order. Parallel edges are never bridges; loops never are.
pub fn combinatorial_bridges(g: &PmGraph) -> Vec<usize> {
    struct Search<'a> {
        g: &'a PmGraph,
        order: Vec<Option<usize>>,
        low: Vec<usize>,
        counter: usize,
        found: Vec<usize>,
    }

    impl Search<'_> {
        fn visit(&mut self, v: usize, via: Option<usize>) {
            self.order[v] = Some(self.counter);
            self.low[v] = self.counter;
            self.counter += 1;
            let incident: Vec<usize> = self.g.incident_edges(v).collect();
            for k in incident {
                if Some(k) == via || self.g.edges()[k].is_loop() {
                    continue;
                }
                let w = self.g.edges()[k].other(v);
                match self.order[w] {
                    Some(ow) => self.low[v] = self.low[v].min(ow),
                    None => {
                        self.visit(w, Some(k));
                        self.low[v] = self.low[v].min(self.low[w]);
                        if self.low[w] > self.order[v].unwrap() {
                            self.found.push(k);
                        }
                    }
                }
            }
        }
    }

    let n = g.vertex_count();
    let mut search = Search {
        g,
        order: vec![None; n],
        low: vec![0; n],
        counter: 0,
        found: Vec::new(),
    };
    for v in 0..n {
        if search.order[v].is_none() {
            search.visit(v, None);
        }
    }
    search.found.sort_unstable();
    search.found
}
