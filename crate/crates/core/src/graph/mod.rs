//! Polarized metrized graphs: the data model, validation, genus and the
//! model-changing operations (normalization and subdivision).
//!
//! A [`PmGraph`] is a connected multigraph with self-loops whose edges carry
//! positive rational lengths and whose vertices carry a nonnegative integer
//! weight `q`. A self-loop contributes 2 to the valence of its vertex.

mod format;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

pub use format::{parse_graph, to_text};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub q: u32,
}

/// An edge between two vertex indices. `u == v` is a self-loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub u: usize,
    pub v: usize,
    pub length: Rational,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `w`.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

/// Immutable polarized metrized graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRecord", into = "GraphRecord")]
pub struct PmGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl PmGraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn total_length(&self) -> Rational {
        self.edges.iter().fold(Rational::zero(), |acc, e| acc + &e.length)
    }

    pub fn q_sum(&self) -> u32 {
        self.vertices.iter().map(|v| v.q).sum()
    }

    /// Number of directions leaving vertex `i`; a self-loop counts twice.
    pub fn valence(&self, i: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == i) + usize::from(e.v == i))
            .sum()
    }

    /// Indices of the edges incident to `i` (a loop is listed once).
    pub fn incident_edges(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.u == i || e.v == i)
            .map(|(k, _)| k)
    }

    /// Multiplies every edge length by `factor` (which must be positive).
    pub fn scaled(&self, factor: &Rational) -> PmGraph {
        assert!(factor.is_positive(), "scale factor must be positive");
        let mut g = self.clone();
        for e in &mut g.edges {
            e.length = &e.length * factor;
        }
        g
    }

    /// Number of connected components, counting every vertex.
    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.vertices.len());
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        dsu.count()
    }

    fn from_parts(vertices: Vec<Vertex>, edges: Vec<Edge>) -> PmGraph {
        PmGraph { vertices, edges }
    }

    fn fresh_vertex_id(&self, stem: &str) -> String {
        fresh_id(stem, |id| self.vertices.iter().any(|v| v.id == id))
    }

    fn fresh_edge_id(&self, stem: &str) -> String {
        fresh_id(stem, |id| self.edges.iter().any(|e| e.id == id))
    }
}

fn fresh_id(stem: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(stem) {
        return stem.to_string();
    }
    (1..)
        .map(|k| format!("{stem}.{k}"))
        .find(|id| !taken(id))
        .expect("unbounded id space")
}

/// Collects vertices and edges by id, then checks the structural rules
/// (unique ids, known endpoints, positive lengths) in [`GraphBuilder::build`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<Vertex>,
    edges: Vec<(String, String, String, Rational)>,
}

impl GraphBuilder {
    pub fn vertex(mut self, id: impl Into<String>, q: u32) -> Self {
        self.vertices.push(Vertex { id: id.into(), q });
        self
    }

    pub fn edge(
        mut self,
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
        length: Rational,
    ) -> Self {
        self.edges.push((id.into(), u.into(), v.into(), length));
        self
    }

    pub fn build(self) -> Result<PmGraph> {
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::DuplicateId(v.id.clone()));
            }
        }
        let mut edge_ids = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (id, u, v, length) in self.edges {
            if index.contains_key(&id) || edge_ids.insert(id.clone(), ()).is_some() {
                return Err(Error::DuplicateId(id));
            }
            let lookup = |w: &str| {
                index.get(w).copied().ok_or_else(|| Error::UnknownEndpoint {
                    edge: id.clone(),
                    vertex: w.to_string(),
                })
            };
            let (u, v) = (lookup(&u)?, lookup(&v)?);
            if !length.is_positive() {
                return Err(Error::NonPositiveLength {
                    edge: id,
                    length: format_rational(&length),
                });
            }
            edges.push(Edge { id, u, v, length });
        }
        Ok(PmGraph::from_parts(self.vertices, edges))
    }
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    id: String,
    q: u32,
}

#[derive(Serialize, Deserialize)]
struct EdgeRecord {
    id: String,
    u: String,
    v: String,
    #[serde(with = "crate::rational::serde_str")]
    length: Rational,
}

#[derive(Serialize, Deserialize)]
struct GraphRecord {
    vertices: Vec<VertexRecord>,
    edges: Vec<EdgeRecord>,
}

impl TryFrom<GraphRecord> for PmGraph {
    type Error = Error;

    fn try_from(record: GraphRecord) -> Result<Self> {
        let mut b = PmGraph::builder();
        for v in record.vertices {
            b = b.vertex(v.id, v.q);
        }
        for e in record.edges {
            b = b.edge(e.id, e.u, e.v, e.length);
        }
        b.build()
    }
}

impl From<PmGraph> for GraphRecord {
    fn from(g: PmGraph) -> Self {
        let name = |i: usize| g.vertices[i].id.clone();
        GraphRecord {
            edges: g
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    u: name(e.u),
                    v: name(e.v),
                    length: e.length.clone(),
                })
                .collect(),
            vertices: g
                .vertices
                .iter()
                .map(|v| VertexRecord {
                    id: v.id.clone(),
                    q: v.q,
                })
                .collect(),
        }
    }
}

/// A vertex divisor, keyed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor(pub BTreeMap<String, i64>);

impl Divisor {
    pub fn get(&self, id: &str) -> i64 {
        self.0.get(id).copied().unwrap_or(0)
    }

    pub fn is_effective(&self) -> bool {
        self.0.values().all(|&c| c >= 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusData {
    /// First Betti number `e - v + 1`.
    pub g: u32,
    /// Total genus `g + sum q`.
    pub gbar: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyVertexSet,
    Disconnected { components: usize },
    NegativeCanonical { vertex: String, coefficient: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyVertexSet => write!(f, "vertex set is empty"),
            Violation::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
            Violation::NegativeCanonical { vertex, coefficient } => write!(
                f,
                "canonical divisor negative at vertex `{vertex}` (coefficient {coefficient})"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks the pm-graph axioms: nonempty, connected, effective canonical divisor.
pub fn validate(g: &PmGraph) -> ValidationReport {
    let mut violations = Vec::new();
    if g.vertices.is_empty() {
        violations.push(Violation::EmptyVertexSet);
    } else {
        let components = g.component_count();
        if components != 1 {
            violations.push(Violation::Disconnected { components });
        }
    }
    for (i, v) in g.vertices.iter().enumerate() {
        let coefficient = canonical_coefficient(g, i);
        if coefficient < 0 {
            violations.push(Violation::NegativeCanonical {
                vertex: v.id.clone(),
                coefficient,
            });
        }
    }
    ValidationReport { violations }
}

pub fn genus(g: &PmGraph) -> GenusData {
    let betti = g.edge_count() as i64 - g.vertex_count() as i64 + 1;
    let betti = u32::try_from(betti.max(0)).expect("betti number fits in u32");
    GenusData {
        g: betti,
        gbar: betti + g.q_sum(),
    }
}

/// `v(p) - 2 + 2 q(p)` at vertex index `i`.
pub fn canonical_coefficient(g: &PmGraph, i: usize) -> i64 {
    g.valence(i) as i64 - 2 + 2 * i64::from(g.vertices[i].q)
}

pub(crate) fn canonical_coefficients(g: &PmGraph) -> Vec<i64> {
    (0..g.vertex_count())
        .map(|i| canonical_coefficient(g, i))
        .collect()
}

pub fn canonical_divisor(g: &PmGraph) -> Divisor {
    Divisor(
        g.vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.clone(), canonical_coefficient(g, i)))
            .collect(),
    )
}

/// Removes eliminable vertices (valence 2, `q = 0`) until none is left,
/// merging the two edge segments through each into one edge.
///
/// A vertex is never removed if it is the last one. The merged edge keeps
/// the id of the first of the two segments in edge order.
pub fn normalize(g: &PmGraph) -> PmGraph {
    let mut current = g.clone();
    while let Some(s) = eliminable_vertex(&current) {
        current = eliminate(&current, s);
    }
    current
}

fn eliminable_vertex(g: &PmGraph) -> Option<usize> {
    if g.vertex_count() < 2 {
        return None;
    }
    (0..g.vertex_count()).find(|&i| {
        g.vertices[i].q == 0
            && g.valence(i) == 2
            && g.incident_edges(i).all(|k| !g.edges[k].is_loop())
    })
}

fn eliminate(g: &PmGraph, s: usize) -> PmGraph {
    let incident: Vec<usize> = g.incident_edges(s).collect();
    let (first, second) = (incident[0], incident[1]);
    let e1 = &g.edges[first];
    let e2 = &g.edges[second];
    let merged = Edge {
        id: e1.id.clone(),
        u: e1.other(s),
        v: e2.other(s),
        length: &e1.length + &e2.length,
    };
    let reindex = |w: usize| if w > s { w - 1 } else { w };
    let edges = g
        .edges
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != second)
        .map(|(k, e)| {
            let e = if k == first { &merged } else { e };
            Edge {
                id: e.id.clone(),
                u: reindex(e.u),
                v: reindex(e.v),
                length: e.length.clone(),
            }
        })
        .collect();
    let mut vertices = g.vertices.clone();
    vertices.remove(s);
    PmGraph::from_parts(vertices, edges)
}

/// Splits edge `edge_id` at `fraction` of its length (measured from its
/// first endpoint) through a fresh `q = 0` vertex.
pub fn subdivide(g: &PmGraph, edge_id: &str, fraction: &Rational) -> Result<PmGraph> {
    if !fraction.is_positive() || fraction >= &Rational::one() {
        return Err(Error::FractionOutOfRange(format_rational(fraction)));
    }
    let k = g
        .edge_index(edge_id)
        .ok_or_else(|| Error::UnknownEdge(edge_id.to_string()))?;
    let e = &g.edges[k];
    let mut vertices = g.vertices.clone();
    let mid = vertices.len();
    vertices.push(Vertex {
        id: g.fresh_vertex_id(&format!("{edge_id}~")),
        q: 0,
    });
    let head = Edge {
        id: e.id.clone(),
        u: e.u,
        v: mid,
        length: &e.length * fraction,
    };
    let tail = Edge {
        id: g.fresh_edge_id(&format!("{edge_id}'")),
        u: mid,
        v: e.v,
        length: &e.length * (Rational::one() - fraction),
    };
    let mut edges = g.edges.clone();
    edges[k] = head;
    edges.insert(k + 1, tail);
    Ok(PmGraph::from_parts(vertices, edges))
}

/// One-point union: identifies vertex `at1` of `g1` with vertex `at2` of `g2`.
///
/// The identified vertex keeps the id from `g1` and the sum of both weights;
/// ids of `g2` are prefixed with `prefix` to keep them distinct.
pub fn wedge(g1: &PmGraph, at1: &str, g2: &PmGraph, at2: &str, prefix: &str) -> Result<PmGraph> {
    let i1 = g1
        .vertex_index(at1)
        .ok_or_else(|| Error::UnknownName(at1.to_string()))?;
    let i2 = g2
        .vertex_index(at2)
        .ok_or_else(|| Error::UnknownName(at2.to_string()))?;
    let mut b = PmGraph::builder();
    for (i, v) in g1.vertices.iter().enumerate() {
        let q = if i == i1 { v.q + g2.vertices[i2].q } else { v.q };
        b = b.vertex(v.id.clone(), q);
    }
    let name2 = |i: usize| {
        if i == i2 {
            g1.vertices[i1].id.clone()
        } else {
            format!("{prefix}{}", g2.vertices[i].id)
        }
    };
    for (i, v) in g2.vertices.iter().enumerate() {
        if i != i2 {
            b = b.vertex(name2(i), v.q);
        }
    }
    for e in &g1.edges {
        b = b.edge(
            e.id.clone(),
            g1.vertices[e.u].id.clone(),
            g1.vertices[e.v].id.clone(),
            e.length.clone(),
        );
    }
    for e in &g2.edges {
        b = b.edge(format!("{prefix}{}", e.id), name2(e.u), name2(e.v), e.length.clone());
    }
    b.build()
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn k4() -> PmGraph {
        let mut b = PmGraph::builder();
        for v in ["1", "2", "3", "4"] {
            b = b.vertex(v, 0);
        }
        for (id, u, v) in [
            ("a", "1", "2"),
            ("b", "1", "3"),
            ("c", "1", "4"),
            ("d", "2", "3"),
            ("e", "2", "4"),
            ("f", "3", "4"),
        ] {
            b = b.edge(id, u, v, int(1));
        }
        b.build().unwrap()
    }

    #[test]
    fn builder_rejects_structural_errors() {
        let dup = PmGraph::builder().vertex("x", 0).vertex("x", 1).build();
        assert!(matches!(dup, Err(Error::DuplicateId(_))));
        let unknown = PmGraph::builder()
            .vertex("x", 0)
            .edge("e", "x", "y", int(1))
            .build();
        assert!(matches!(unknown, Err(Error::UnknownEndpoint { .. })));
        let zero = PmGraph::builder()
            .vertex("x", 2)
            .edge("e", "x", "x", int(0))
            .build();
        assert!(matches!(zero, Err(Error::NonPositiveLength { .. })));
    }

    #[test]
    fn leaf_without_weight_is_rejected() {
        let g = PmGraph::builder()
            .vertex("p", 0)
            .vertex("q", 3)
            .edge("e", "p", "q", int(1))
            .build()
            .unwrap();
        let report = validate(&g);
        assert!(!report.is_valid());
        assert_eq!(
            report.violations,
            vec![Violation::NegativeCanonical {
                vertex: "p".into(),
                coefficient: -1
            }]
        );
        assert!(report.to_string().contains("canonical divisor negative at vertex"));
    }

    #[test]
    fn isolated_point_is_valid() {
        let g = PmGraph::builder().vertex("p", 3).build().unwrap();
        assert!(validate(&g).is_valid());
        assert_eq!(canonical_divisor(&g).get("p"), 4);
        assert_eq!(genus(&g), GenusData { g: 0, gbar: 3 });
    }

    #[test]
    fn disjoint_loops_fail_connectivity() {
        let g = PmGraph::builder()
            .vertex("x", 1)
            .vertex("y", 1)
            .edge("l1", "x", "x", int(1))
            .edge("l2", "y", "y", int(1))
            .build()
            .unwrap();
        assert_eq!(
            validate(&g).violations,
            vec![Violation::Disconnected { components: 2 }]
        );
    }

    #[test]
    fn empty_graph_fails() {
        let g = PmGraph::builder().build().unwrap();
        assert_eq!(validate(&g).violations, vec![Violation::EmptyVertexSet]);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&k4()), GenusData { g: 3, gbar: 3 });
        let path = PmGraph::builder()
            .vertex("p", 1)
            .vertex("m", 1)
            .vertex("q", 1)
            .edge("a", "p", "m", int(1))
            .edge("b", "m", "q", int(1))
            .build()
            .unwrap();
        assert_eq!(genus(&path), GenusData { g: 0, gbar: 3 });
        let circle = PmGraph::builder()
            .vertex("x", 2)
            .edge("l", "x", "x", int(5))
            .build()
            .unwrap();
        assert_eq!(genus(&circle), GenusData { g: 1, gbar: 3 });
    }

    #[test]
    fn canonical_coefficients_follow_valence() {
        let g = PmGraph::builder()
            .vertex("j", 0)
            .vertex("l1", 2)
            .vertex("l2", 1)
            .vertex("l3", 1)
            .edge("a", "j", "l1", int(1))
            .edge("b", "j", "l2", int(1))
            .edge("c", "j", "l3", int(1))
            .build()
            .unwrap();
        let k = canonical_divisor(&g);
        assert_eq!(k.get("j"), 1);
        assert_eq!(k.get("l1"), 3);
        let circle = PmGraph::builder()
            .vertex("x", 2)
            .edge("l", "x", "x", int(5))
            .build()
            .unwrap();
        assert_eq!(canonical_divisor(&circle).get("x"), 4);
    }

    #[test]
    fn normalize_merges_degree_two_vertices() {
        let g = PmGraph::builder()
            .vertex("x", 0)
            .vertex("y", 0)
            .vertex("z", 0)
            .vertex("s", 0)
            .edge("a", "x", "s", frac(1, 2))
            .edge("a2", "s", "y", frac(3, 2))
            .edge("b", "y", "z", int(1))
            .edge("c", "z", "x", int(1))
            .build()
            .unwrap();
        let n = normalize(&g);
        // the triangle itself is a circle of q = 0 vertices, so it collapses
        // down to a single loop.
        assert_eq!(n.vertex_count(), 1);
        assert_eq!(n.edge_count(), 1);
        assert_eq!(n.edges()[0].length, int(4));
    }

    #[test]
    fn normalize_on_triangle_with_weighted_corners() {
        let g = PmGraph::builder()
            .vertex("x", 1)
            .vertex("y", 1)
            .vertex("z", 1)
            .vertex("s", 0)
            .edge("a", "x", "s", frac(1, 3))
            .edge("a2", "s", "y", frac(2, 3))
            .edge("b", "y", "z", int(2))
            .edge("c", "z", "x", int(3))
            .build()
            .unwrap();
        let n = normalize(&g);
        assert_eq!(n.vertex_count(), 3);
        let a = n.edge("a").unwrap();
        assert_eq!(a.length, int(1));
        assert_eq!((n.vertices()[a.u].id.as_str(), n.vertices()[a.v].id.as_str()), ("x", "y"));
        assert_eq!(normalize(&n), n);
    }

    #[test]
    fn normalize_keeps_non_eliminable_vertices() {
        let circle = PmGraph::builder()
            .vertex("x", 2)
            .edge("l", "x", "x", int(5))
            .build()
            .unwrap();
        assert_eq!(normalize(&circle), circle);
        let lone = PmGraph::builder()
            .vertex("x", 0)
            .edge("l", "x", "x", int(5))
            .build()
            .unwrap();
        assert_eq!(normalize(&lone), lone);
    }

    #[test]
    fn subdivide_loop_gives_parallel_pair() {
        let g = PmGraph::builder()
            .vertex("x", 2)
            .edge("l", "x", "x", int(4))
            .build()
            .unwrap();
        let s = subdivide(&g, "l", &frac(1, 2)).unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.edge_count(), 2);
        assert!(s.edges().iter().all(|e| e.length == int(2) && !e.is_loop()));
        assert_eq!(normalize(&s), g);
    }

    #[test]
    fn subdivide_rejects_bad_input() {
        let g = k4();
        assert!(matches!(
            subdivide(&g, "a", &int(1)),
            Err(Error::FractionOutOfRange(_))
        ));
        assert!(matches!(
            subdivide(&g, "a", &int(0)),
            Err(Error::FractionOutOfRange(_))
        ));
        assert!(matches!(
            subdivide(&g, "zz", &frac(1, 2)),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn subdivide_then_normalize_round_trips() {
        let g = k4();
        let s = subdivide(&g, "d", &frac(2, 7)).unwrap();
        assert_eq!(genus(&s), genus(&g));
        assert_eq!(normalize(&s), g);
    }

    #[test]
    fn wedge_adds_weights_and_edges() {
        let loop_graph = PmGraph::builder()
            .vertex("x", 1)
            .edge("l", "x", "x", int(3))
            .build()
            .unwrap();
        let w = wedge(&loop_graph, "x", &loop_graph, "x", "r_").unwrap();
        assert_eq!(w.vertex_count(), 1);
        assert_eq!(w.edge_count(), 2);
        assert_eq!(w.vertices()[0].q, 2);
    }

    #[test]
    fn json_mirrors_fields() {
        let g = PmGraph::builder()
            .vertex("p", 1)
            .vertex("q", 2)
            .edge("e1", "p", "q", frac(1, 2))
            .build()
            .unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"vertices":[{"id":"p","q":1},{"id":"q","q":2}],"edges":[{"id":"e1","u":"p","v":"q","length":"1/2"}]}"#
        );
        let back: PmGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }
}
