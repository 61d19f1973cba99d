//! Graphs, symmetric matrices and ordered configurations with `val μ <= 2`,
//! and the radical-cube-zero algebra `A_G` of a graph.
//!
//! Graph vertices are `1..=n`; edges are unordered pairs stored as `(i, j)`
//! with `i <= j`, a loop being `(i, i)`. Equivalence of graphs forgets edge
//! names only, so two graphs are equal iff their sorted edge lists agree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, BasisElement};
use crate::config::{
    BrauerConfiguration, ConfigError, ConfigVertex, Configuration, Polygon, ValidateOptions,
};
use crate::exec::Execution;
use crate::linalg::{Scalar, SparseVec};
use crate::oracle::{PathOracle, PathPresentation};
use crate::quiver::Quiver;
use crate::structure::{check_symmetric, radical_series, FiniteDimAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} has no incident edge")]
    IsolatedVertex(usize),
    #[error("edge endpoint {0} outside 1..={1}")]
    BadEndpoint(usize, usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("row {0} is zero")]
    ZeroRow(usize),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("configuration vertex {0} lies in more than two polygons")]
    TooManyPolygons(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Normalizes endpoint order and checks for isolated vertices.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = vec![false; n + 1];
        let mut norm = Vec::with_capacity(edges.len());
        for (i, j) in edges {
            for x in [i, j] {
                if x == 0 || x > n {
                    return Err(GraphError::BadEndpoint(x, n));
                }
                seen[x] = true;
            }
            norm.push((i.min(j), i.max(j)));
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(GraphError::IsolatedVertex(v));
        }
        Ok(Graph { n, edges: norm })
    }

    pub fn is_loop(&self, k: usize) -> bool {
        self.edges[k].0 == self.edges[k].1
    }

    /// Edge indices incident to vertex `i`, loops once.
    pub fn incident(&self, i: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&k| self.edges[k].0 == i || self.edges[k].1 == i)
            .collect()
    }

    /// Sorted edge multiset; equal keys mean equivalent graphs.
    pub fn canonical(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn equivalent(&self, other: &Graph) -> bool {
        self.n == other.n && self.canonical() == other.canonical()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
        write!(f, "n={} [{}]", self.n, es.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymMatrix {
    pub rows: Vec<Vec<u32>>,
}

impl SymMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<SymMatrix, GraphError> {
        let n = rows.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(GraphError::NotSquare);
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(GraphError::NotSymmetric(i + 1, j + 1));
                }
            }
            if rows[i].iter().all(|&x| x == 0) {
                return Err(GraphError::ZeroRow(i + 1));
            }
        }
        Ok(SymMatrix { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }
}

pub fn matrix_from_graph(g: &Graph) -> SymMatrix {
    let mut rows = vec![vec![0u32; g.n]; g.n];
    for &(i, j) in &g.edges {
        rows[i - 1][j - 1] += 1;
        if i != j {
            rows[j - 1][i - 1] += 1;
        }
    }
    SymMatrix { rows }
}

pub fn graph_from_matrix(m: &SymMatrix) -> Graph {
    let n = m.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            edges.extend(std::iter::repeat_n((i + 1, j + 1), m.rows[i][j] as usize));
        }
    }
    Graph { n, edges }
}

/// Matrix read off a quiver with `rad^3 = 0`: arrow counts off the diagonal,
/// loop counts on it. Each non-loop edge of the graph is an arrow pair.
pub fn matrix_from_quiver(q: &Quiver) -> SymMatrix {
    let adj = q.adjacency();
    let rows = adj
        .iter()
        .map(|r| r.iter().map(|&x| x as u32).collect())
        .collect();
    SymMatrix { rows }
}

pub fn edge_vertex_name(k: usize) -> String {
    format!("e{}", k + 1)
}

fn leaf_marker_name(k: usize, i: usize) -> String {
    format!("(e{},{})", k + 1, i)
}

/// The ordered configuration `Γ(G)`: polygon `V_i` holds the edges at `i`;
/// a vertex with a single incident edge also gets a truncated marker.
pub fn config_from_graph(g: &Graph) -> Result<Configuration, GraphError> {
    let g = Graph::new(g.n, g.edges.clone())?;
    let mut vertices: Vec<ConfigVertex> = (0..g.edges.len())
        .map(|k| ConfigVertex {
            name: edge_vertex_name(k),
            multiplicity: if g.is_loop(k) { 2 } else { 1 },
        })
        .collect();
    let mut polygons = Vec::with_capacity(g.n);
    for i in 1..=g.n {
        let inc = g.incident(i);
        let mut members: Vec<String> = inc.iter().map(|&k| edge_vertex_name(k)).collect();
        if inc.len() == 1 {
            let marker = leaf_marker_name(inc[0], i);
            vertices.push(ConfigVertex {
                name: marker.clone(),
                multiplicity: 1,
            });
            members.push(marker);
        }
        polygons.push(Polygon {
            label: format!("V{i}"),
            members,
        });
    }
    let raw = BrauerConfiguration {
        vertices,
        polygons,
        orientation: BTreeMap::new(),
    };
    Ok(raw
        .validate(ValidateOptions::default())
        .expect("configuration of a graph satisfies C1-C3"))
}

/// The graph `G(Γ)` of an ordered configuration with `val μ <= 2`.
pub fn graph_from_config(cfg: &Configuration) -> Result<Graph, GraphError> {
    cfg.check_ordered_class()?;
    let mut edges = Vec::new();
    for v in 0..cfg.vertex_count() {
        let ps: Vec<usize> = (0..cfg.polygon_count())
            .filter(|&p| cfg.occurrences_in(v, p) > 0)
            .collect();
        match (ps.as_slice(), cfg.multiplicity(v)) {
            ([p, q], _) => edges.push((p + 1, q + 1)),
            ([p], 2) => edges.push((p + 1, p + 1)),
            ([_], _) => {}
            _ => return Err(GraphError::TooManyPolygons(cfg.vertex_name(v).to_string())),
        }
    }
    Graph::new(cfg.polygon_count(), edges)
}

/// `true` iff `val(α) μ(α) = 2` at every nontruncated vertex, which is when
/// `rad^3 = 0` and `rad^2 != 0`.
pub fn is_rad_cubed_zero(cfg: &Configuration) -> bool {
    let cycle = cfg.cycle_vertices();
    !cycle.is_empty() && cycle.iter().all(|&v| cfg.weight(v) == 2) && !cfg.has_degenerate()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CanonicalBasis {
    Idempotent(usize),
    Arrow(usize),
    /// Class of the distinguished paths at a vertex.
    Socle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalArrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub edge: usize,
    /// The arrow completing the distinguished path (itself for a loop).
    pub partner: usize,
}

/// `A_G = KQ_G / I_G` with basis idempotents, arrows and one socle element
/// per vertex. Vertices are 0-based here.
#[derive(Clone, Debug)]
pub struct CanonicalAlgebra {
    pub graph: Graph,
    pub arrows: Vec<CanonicalArrow>,
    basis: Vec<CanonicalBasis>,
    index: BTreeMap<CanonicalBasis, usize>,
}

impl CanonicalAlgebra {
    pub fn new(g: &Graph) -> Result<CanonicalAlgebra, GraphError> {
        let g = Graph::new(g.n, g.edges.clone())?;
        let mut arrows = Vec::new();
        for (k, &(i, j)) in g.edges.iter().enumerate() {
            let id = arrows.len();
            if i == j {
                arrows.push(CanonicalArrow {
                    name: format!("b{}", k + 1),
                    source: i - 1,
                    target: i - 1,
                    edge: k,
                    partner: id,
                });
            } else {
                arrows.push(CanonicalArrow {
                    name: format!("a{}", k + 1),
                    source: i - 1,
                    target: j - 1,
                    edge: k,
                    partner: id + 1,
                });
                arrows.push(CanonicalArrow {
                    name: format!("a{}'", k + 1),
                    source: j - 1,
                    target: i - 1,
                    edge: k,
                    partner: id,
                });
            }
        }
        let mut basis: Vec<CanonicalBasis> = (0..g.n).map(CanonicalBasis::Idempotent).collect();
        basis.extend((0..arrows.len()).map(CanonicalBasis::Arrow));
        basis.extend((0..g.n).map(CanonicalBasis::Socle));
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        Ok(CanonicalAlgebra {
            graph: g,
            arrows,
            basis,
            index,
        })
    }

    pub fn basis(&self) -> &[CanonicalBasis] {
        &self.basis
    }

    pub fn index_of(&self, b: &CanonicalBasis) -> usize {
        self.index[b]
    }

    fn ends(&self, b: &CanonicalBasis) -> (usize, usize) {
        match *b {
            CanonicalBasis::Idempotent(v) | CanonicalBasis::Socle(v) => (v, v),
            CanonicalBasis::Arrow(a) => (self.arrows[a].source, self.arrows[a].target),
        }
    }

    pub fn product(&self, x: &CanonicalBasis, y: &CanonicalBasis) -> Option<CanonicalBasis> {
        use CanonicalBasis::*;
        if self.ends(x).1 != self.ends(y).0 {
            return None;
        }
        match (*x, *y) {
            (Idempotent(_), _) => Some(*y),
            (_, Idempotent(_)) => Some(*x),
            (Arrow(a), Arrow(b)) if self.arrows[a].partner == b => {
                Some(Socle(self.arrows[a].source))
            }
            _ => None,
        }
    }

    fn distinguished(&self, a: usize) -> Vec<usize> {
        vec![a, self.arrows[a].partner]
    }

    /// Ideal generators: (1) differences of distinguished paths at a vertex,
    /// (2) `a a' a` for distinguished `a a'`, (3) non-distinguished
    /// length-2 paths. Signed arrow words.
    pub fn ideal_generators(&self) -> Vec<Vec<(Vec<usize>, i64)>> {
        let mut out = Vec::new();
        for v in 0..self.graph.n {
            let at: Vec<usize> = (0..self.arrows.len())
                .filter(|&a| self.arrows[a].source == v)
                .collect();
            for (i, &a) in at.iter().enumerate() {
                for &b in &at[i + 1..] {
                    out.push(vec![
                        (self.distinguished(a), 1),
                        (self.distinguished(b), -1),
                    ]);
                }
            }
        }
        for a in 0..self.arrows.len() {
            let mut p = self.distinguished(a);
            p.push(a);
            out.push(vec![(p, 1)]);
        }
        for a in 0..self.arrows.len() {
            for b in 0..self.arrows.len() {
                if self.arrows[a].target == self.arrows[b].source && self.arrows[a].partner != b {
                    out.push(vec![(vec![a, b], 1)]);
                }
            }
        }
        out
    }

    pub fn presentation(&self) -> PathPresentation {
        PathPresentation {
            vertex_count: self.graph.n,
            arrows: self.arrows.iter().map(|a| (a.source, a.target)).collect(),
            relations: self.ideal_generators(),
            bound: 3,
        }
    }

    pub fn name(&self, b: &CanonicalBasis) -> String {
        match *b {
            CanonicalBasis::Idempotent(v) => format!("e{}", v + 1),
            CanonicalBasis::Arrow(a) => self.arrows[a].name.clone(),
            CanonicalBasis::Socle(v) => format!("soc{}", v + 1),
        }
    }
}

impl FiniteDimAlgebra for CanonicalAlgebra {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn basis_product(&self, i: usize, j: usize) -> SparseVec {
        match self.product(&self.basis[i], &self.basis[j]) {
            Some(b) => SparseVec::unit(self.index[&b]),
            None => SparseVec::zero(),
        }
    }

    fn form(&self, i: usize) -> Scalar {
        match self.basis[i] {
            CanonicalBasis::Socle(_) => Scalar::one(),
            _ => Scalar::zero(),
        }
    }

    fn unit(&self) -> SparseVec {
        SparseVec::from_terms((0..self.graph.n).map(|v| (v, Scalar::one())))
    }

    fn arrow_basis(&self) -> Vec<usize> {
        (0..self.arrows.len())
            .map(|a| self.index[&CanonicalBasis::Arrow(a)])
            .collect()
    }

    fn radical_basis(&self) -> Vec<usize> {
        (self.graph.n..self.basis.len()).collect()
    }

    fn basis_label(&self, i: usize) -> String {
        self.name(&self.basis[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub isomorphic: bool,
    /// `(configuration arrow id, canonical arrow name)`.
    pub arrow_map: Vec<(String, String)>,
    pub mismatch: Option<String>,
}

impl IsoReport {
    fn fail(arrow_map: Vec<(String, String)>, why: String) -> Self {
        IsoReport {
            isomorphic: false,
            arrow_map,
            mismatch: Some(why),
        }
    }
}

/// Compares `Λ_{Γ(G)}` with `A_G` under the map `v_i ↦ i` on vertices,
/// the arrow pair of a valence-2 vertex onto the arrow pair of an edge
/// between the same polygons, and the arrow of a `μ = 2` vertex onto a loop.
/// Every structure constant is then compared.
pub fn verify_iso(lambda: &Algebra, canon: &CanonicalAlgebra) -> IsoReport {
    let q = lambda.quiver();
    let cfg = lambda.config();
    let mut arrow_map: Vec<(String, String)> = Vec::new();
    if q.vertex_count() != canon.graph.n {
        return IsoReport::fail(arrow_map, "vertex counts differ".into());
    }
    let mut image = vec![usize::MAX; q.arrow_count()];
    let mut used = vec![false; canon.arrows.len()];
    for c in q.vertex_cycles() {
        let pick = |used: &[bool], s: usize, t: usize, loop_: bool| {
            (0..canon.arrows.len()).find(|&b| {
                let x = &canon.arrows[b];
                !used[b] && x.source == s && x.target == t && (x.partner == b) == loop_
            })
        };
        match (c.arrows.as_slice(), c.multiplicity) {
            ([a], 2) => {
                let x = q.arrow(*a);
                match pick(&used, x.source, x.target, true) {
                    Some(b) => {
                        used[b] = true;
                        image[*a] = b;
                    }
                    None => {
                        return IsoReport::fail(arrow_map, format!("no loop for {}", x.id));
                    }
                }
            }
            ([a, a2], 1) => {
                let x = q.arrow(*a);
                let Some(b) = pick(&used, x.source, x.target, false) else {
                    return IsoReport::fail(arrow_map, format!("no edge arrow for {}", x.id));
                };
                let partner = canon.arrows[b].partner;
                used[b] = true;
                used[partner] = true;
                image[*a] = b;
                image[*a2] = partner;
            }
            _ => {
                return IsoReport::fail(
                    arrow_map,
                    format!("vertex {} has val*mu != 2", cfg.vertex_name(c.vertex)),
                );
            }
        }
    }
    arrow_map = (0..q.arrow_count())
        .map(|a| (q.arrow(a).id.clone(), canon.arrows[image[a]].name.clone()))
        .collect();
    if used.iter().any(|u| !u) {
        return IsoReport::fail(arrow_map, "arrow map is not surjective".into());
    }

    let map_basis = |b: &BasisElement| -> Option<CanonicalBasis> {
        match *b {
            BasisElement::Idempotent(v) => Some(CanonicalBasis::Idempotent(v)),
            BasisElement::Socle(v) => Some(CanonicalBasis::Socle(v)),
            BasisElement::Prefix { arrow, len: 1 } => Some(CanonicalBasis::Arrow(image[arrow])),
            BasisElement::Prefix { .. } => None,
        }
    };
    let basis = lambda.basis();
    if basis.len() != canon.basis.len() {
        return IsoReport::fail(
            arrow_map,
            format!(
                "dimensions differ: {} vs {}",
                basis.len(),
                canon.basis.len()
            ),
        );
    }
    let mut images = Vec::with_capacity(basis.len());
    for b in basis {
        match map_basis(b) {
            Some(x) => images.push(x),
            None => {
                return IsoReport::fail(
                    arrow_map,
                    format!("{} has length > 1", lambda.basis_name(b)),
                );
            }
        }
    }
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let left = lambda.basis_product(x, y).and_then(|p| map_basis(&p));
            let right = canon.product(&images[i], &images[j]);
            if left != right {
                return IsoReport::fail(
                    arrow_map,
                    format!(
                        "{} * {}: {:?} vs {:?}",
                        lambda.basis_name(x),
                        lambda.basis_name(y),
                        left,
                        right
                    ),
                );
            }
        }
    }
    IsoReport {
        isomorphic: true,
        arrow_map,
        mismatch: None,
    }
}

/// All graphs on `1..=n` with `1..=max_edges` edges and no isolated vertex,
/// ordered by edge count, then edge list.
pub fn enumerate_graphs(n: usize, max_edges: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for m in 1..=max_edges {
        let mut choice = vec![0usize; m];
        // multisets as non-decreasing index sequences
        loop {
            let edges: Vec<(usize, usize)> = choice.iter().map(|&c| pairs[c]).collect();
            if let Ok(g) = Graph::new(n, edges) {
                out.push(g);
            }
            let Some(k) = (0..m).rev().find(|&k| choice[k] + 1 < pairs.len()) else {
                break;
            };
            let next = choice[k] + 1;
            for c in &mut choice[k..] {
                *c = next;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphCheck {
    pub graph: Graph,
    pub dim_config: usize,
    pub dim_canonical: usize,
    pub dim_canonical_oracle: usize,
    pub iso: IsoReport,
    pub canonical_symmetric: bool,
    pub canonical_series: Vec<usize>,
    pub config_series: Vec<usize>,
    pub rad_cubed_zero: bool,
    pub matrix_round_trip: bool,
    pub graph_matrix_round_trip: bool,
    pub graph_config_round_trip: bool,
    pub config_graph_round_trip: bool,
}

impl GraphCheck {
    pub fn passed(&self) -> bool {
        let rad3 = |s: &[usize]| s.len() == 4 && s[2] > 0 && s[3] == 0;
        self.iso.isomorphic
            && self.dim_config == self.dim_canonical
            && self.dim_canonical == self.dim_canonical_oracle
            && self.canonical_symmetric
            && rad3(&self.canonical_series)
            && rad3(&self.config_series)
            && self.rad_cubed_zero
            && self.matrix_round_trip
            && self.graph_matrix_round_trip
            && self.graph_config_round_trip
            && self.config_graph_round_trip
    }
}

pub fn check_graph(g: &Graph) -> Result<GraphCheck, GraphError> {
    let cfg = config_from_graph(g)?;
    let lambda = Algebra::new(&cfg);
    let canon = CanonicalAlgebra::new(g)?;
    let oracle = PathOracle::new(canon.presentation(), Execution::Sequential)
        .expect("canonical presentations are tiny");
    let m = matrix_from_graph(g);
    let back = graph_from_config(&cfg)?;
    let again = config_from_graph(&back)?;
    Ok(GraphCheck {
        graph: g.clone(),
        dim_config: lambda.basis().len(),
        dim_canonical: canon.dim(),
        dim_canonical_oracle: oracle.report().dimension,
        iso: verify_iso(&lambda, &canon),
        canonical_symmetric: check_symmetric(&canon, Execution::Sequential).passed(),
        canonical_series: radical_series(&canon),
        config_series: radical_series(&lambda),
        rad_cubed_zero: is_rad_cubed_zero(&cfg),
        matrix_round_trip: matrix_from_graph(&graph_from_matrix(&m)) == m,
        graph_matrix_round_trip: graph_from_matrix(&m).equivalent(g),
        graph_config_round_trip: back.equivalent(g),
        config_graph_round_trip: cfg.equivalent_ordered(&again)?.is_some(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rad3Report {
    pub max_n: usize,
    pub max_edges: usize,
    pub graphs_checked: usize,
    pub failures: usize,
    pub checks: Vec<GraphCheck>,
}

/// Runs [`check_graph`] on every graph with `1..=max_n` vertices and at most
/// `max_edges` edges.
pub fn verify_all(max_n: usize, max_edges: usize, exec: Execution) -> Rad3Report {
    let graphs: Vec<Graph> = (1..=max_n)
        .flat_map(|n| enumerate_graphs(n, max_edges))
        .collect();
    let checks: Vec<GraphCheck> = exec.map(&graphs, |g| {
        check_graph(g).expect("enumerated graphs have no isolated vertices")
    });
    Rad3Report {
        max_n,
        max_edges,
        graphs_checked: checks.len(),
        failures: checks.iter().filter(|c| !c.passed()).count(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn four_cycles_and_matrices() {
        let c1 = g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let c2 = g(4, &[(1, 3), (3, 2), (2, 4), (4, 1)]);
        let m1 = matrix_from_graph(&c1);
        let m2 = matrix_from_graph(&c2);
        assert_eq!(
            m1.rows,
            [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
        );
        assert_eq!(
            m2.rows,
            [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]]
        );
        assert!(graph_from_matrix(&m1).equivalent(&c1));
        let (k1, k2) = (
            config_from_graph(&c1).unwrap(),
            config_from_graph(&c2).unwrap(),
        );
        assert_eq!(k1.equivalent_ordered(&k2).unwrap(), None);
        assert!(check_graph(&c1).unwrap().passed());
    }

    #[test]
    fn loop_graph_is_cubic() {
        let l = g(1, &[(1, 1)]);
        let cfg = config_from_graph(&l).unwrap();
        assert_eq!(cfg.polygons()[0].members, ["e1", "(e1,1)"]);
        assert_eq!(Algebra::new(&cfg).basis().len(), 3);
        assert_eq!(matrix_from_graph(&l).rows, [[1]]);
        assert!(check_graph(&l).unwrap().passed());
    }

    #[test]
    fn single_edge_has_dimension_six() {
        let e = g(2, &[(1, 2)]);
        let c = check_graph(&e).unwrap();
        assert_eq!(c.dim_config, 6);
        assert_eq!(c.dim_canonical, 6);
        assert!(c.passed());
    }

    #[test]
    fn two_loops_give_the_two_loop_algebra() {
        let two = g(1, &[(1, 1), (1, 1)]);
        let c = CanonicalAlgebra::new(&two).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(matrix_from_graph(&two).rows, [[2]]);
        let cfg = config_from_graph(&two).unwrap();
        assert!(cfg
            .equivalent_ordered(&fixtures::two_loops())
            .unwrap()
            .is_some());
    }

    #[test]
    fn section4_configuration_graph() {
        let cfg = fixtures::section4_configuration();
        let graph = graph_from_config(&cfg).unwrap();
        let expected = g(
            6,
            &[
                (1, 3),
                (1, 4),
                (1, 2),
                (2, 4),
                (2, 3),
                (4, 4),
                (4, 5),
                (5, 5),
                (4, 6),
            ],
        );
        assert!(graph.equivalent(&expected), "{graph}");
    }

    #[test]
    fn section4_graph_markers() {
        let graph = fixtures::section4_graph();
        let cfg = config_from_graph(&graph).unwrap();
        let truncated: Vec<&str> = (0..cfg.vertex_count())
            .filter(|&v| cfg.truncated(v))
            .map(|v| cfg.vertex_name(v))
            .collect();
        assert_eq!(truncated.len(), 2);
        assert!(truncated.iter().all(|t| t.starts_with('(')));
        assert!(cfg.is_reduced());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(1, 2).len(), 2);
        assert_eq!(enumerate_graphs(2, 1).len(), 1);
        // 1-2 twice, 1-2 with a loop at either end, and a loop at each vertex
        assert_eq!(enumerate_graphs(2, 2).len(), 5);
        let gs = enumerate_graphs(3, 3);
        let mut sorted = gs.clone();
        sorted.sort_by(|a, b| (a.edges.len(), &a.edges).cmp(&(b.edges.len(), &b.edges)));
        assert_eq!(gs, sorted);
    }

    #[test]
    fn graph_errors() {
        assert_eq!(
            Graph::new(2, vec![(1, 1)]),
            Err(GraphError::IsolatedVertex(2))
        );
        assert_eq!(
            Graph::new(2, vec![(1, 3)]),
            Err(GraphError::BadEndpoint(3, 2))
        );
        assert!(matches!(
            SymMatrix::new(vec![vec![0, 1], vec![0, 1]]),
            Err(GraphError::NotSymmetric(1, 2))
        ));
        assert!(matches!(
            SymMatrix::new(vec![vec![0]]),
            Err(GraphError::ZeroRow(1))
        ));
    }

    #[test]
    fn self_folded_loop_is_outside_ordered_class() {
        let cfg = fixtures::self_folded_loop();
        assert!(graph_from_config(&cfg).is_err());
        assert!(is_rad_cubed_zero(&cfg));
        let q = Quiver::build(&cfg);
        assert_eq!(matrix_from_quiver(&q).rows, [[2]]);
    }
}
