//! The Brauer configuration algebra `KQ/I` over the rationals.
//!
//! The basis consists of one idempotent per polygon, every proper prefix of
//! `C^μ` for every special cycle `C`, and one socle element per polygon.
//! Products of basis elements are computed by the prefix rule: a path is
//! nonzero iff it is an initial segment of `C^μ` for the rotation `C` that
//! starts with its first arrow, and the full power `C^μ` is identified with
//! the socle element of its base polygon.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::config::Configuration;
use crate::linalg::{format_scalar, Scalar, SparseVec};
use crate::names::natural_cmp;
use crate::quiver::Quiver;
use crate::structure::FiniteDimAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BasisElement {
    Idempotent(usize),
    /// Initial segment of length `len` of `C^μ`, `C` the rotation starting
    /// with `arrow`; `1 <= len < |C| μ`.
    Prefix {
        arrow: usize,
        len: usize,
    },
    Socle(usize),
}

/// `(C, μ)`: the rotation starting with `rotation`, raised to `exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclePower {
    pub rotation: usize,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// Type one: `C^μ(α) - C'^μ(β)` for two special cycles at one vertex.
    CycleDifference { left: CyclePower, right: CyclePower },
    /// Type two: `C^μ a` with `a` the first arrow of `C`.
    CyclePowerArrow { cycle: CyclePower, arrow: usize },
    /// Type three: the length-2 path `first second`.
    ForbiddenPair { first: usize, second: usize },
}

impl Relation {
    pub fn kind(&self) -> u8 {
        match self {
            Relation::CycleDifference { .. } => 1,
            Relation::CyclePowerArrow { .. } => 2,
            Relation::ForbiddenPair { .. } => 3,
        }
    }

    /// The relation as a signed combination of arrow paths.
    pub fn terms(&self, q: &Quiver) -> Vec<(Vec<usize>, i64)> {
        let power = |p: &CyclePower| -> Vec<usize> {
            let n = q.cycle_len(p.rotation) * p.exponent as usize;
            (0..n).map(|k| q.cycle_arrow(p.rotation, k)).collect()
        };
        match self {
            Relation::CycleDifference { left, right } => vec![(power(left), 1), (power(right), -1)],
            Relation::CyclePowerArrow { cycle, arrow } => {
                let mut p = power(cycle);
                p.push(*arrow);
                vec![(p, 1)]
            }
            Relation::ForbiddenPair { first, second } => vec![(vec![*first, *second], 1)],
        }
    }

    /// Human-readable form using arrow aliases, e.g. `a1a2a3 - b1b2`.
    pub fn display(&self, q: &Quiver) -> String {
        let word =
            |p: &[usize]| -> String { p.iter().map(|&a| q.arrow(a).alias.as_str()).collect() };
        let ts = self.terms(q);
        match ts.as_slice() {
            [(p, _)] => word(p),
            [(p, _), (r, _)] => format!("{} - {}", word(p), word(r)),
            _ => unreachable!(),
        }
    }
}

/// Generates the defining relations of the three types.
///
/// Type one relations are emitted for every unordered pair of distinct
/// special cycles at each quiver vertex; the list is redundant on purpose.
pub fn relations(q: &Quiver) -> Vec<Relation> {
    let mut out = Vec::new();
    let power = |a: usize| CyclePower {
        rotation: a,
        exponent: q.cycle_multiplicity(a),
    };
    for v in 0..q.vertex_count() {
        let at = q.outgoing(v);
        for (i, &a) in at.iter().enumerate() {
            for &b in &at[i + 1..] {
                out.push(Relation::CycleDifference {
                    left: power(a),
                    right: power(b),
                });
            }
        }
    }
    for a in 0..q.arrow_count() {
        out.push(Relation::CyclePowerArrow {
            cycle: power(a),
            arrow: a,
        });
    }
    for a in 0..q.arrow_count() {
        let t = q.arrow(a).target;
        for &b in q.outgoing(t) {
            let n = q.cycle_len(a);
            let in_cycle = n >= 2 && q.next_in_cycle(a) == b;
            let loop_exception = n == 1 && a == b && q.cycle_multiplicity(a) > 1;
            if !in_cycle && !loop_exception {
                out.push(Relation::ForbiddenPair {
                    first: a,
                    second: b,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arrows {0} and {1} do not compose")]
    NotComposable(String, String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("unknown polygon {0:?}")]
    UnknownPolygon(String),
    #[error("configuration is disconnected ({0} components); apply per component")]
    Disconnected(usize),
}

/// Finitely supported rational combination of basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisElement, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisElement) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: BasisElement, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(b, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &BasisElement) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, b: BasisElement, c: &Scalar) {
        let e = self.terms.entry(b).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, &(c * k));
        }
        out
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c);
        }
        out
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &rhs.scaled(&-Scalar::one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleContribution {
    pub vertex: String,
    pub length: usize,
    pub multiplicity: u32,
    /// `|C| (μ |C| - 1)`
    pub contribution: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub formula: usize,
    pub basis_count: usize,
    pub quiver_vertices: usize,
    pub cycles: Vec<CycleContribution>,
}

/// A configuration algebra with its canonical basis.
#[derive(Clone, Debug)]
pub struct Algebra {
    config: Configuration,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
    /// First arrow of the rotation whose power represents each socle element.
    socle_rotation: Vec<usize>,
    bound: usize,
}

impl Algebra {
    /// Builds the algebra of the reduced form of `cfg`.
    pub fn new(cfg: &Configuration) -> Algebra {
        Self::without_reduction(&cfg.reduce())
    }

    /// Builds directly on `cfg`, keeping truncated vertices in larger
    /// polygons. Used to compare against [`Algebra::new`].
    pub fn without_reduction(cfg: &Configuration) -> Algebra {
        let config = cfg.clone();
        let quiver = Quiver::build(&config);
        let relations = relations(&quiver);
        let mut basis: Vec<BasisElement> = (0..quiver.vertex_count())
            .map(BasisElement::Idempotent)
            .collect();
        let mut bound = 0;
        for a in 0..quiver.arrow_count() {
            let top = quiver.cycle_len(a) * quiver.cycle_multiplicity(a) as usize;
            bound = bound.max(top + 1);
            basis.extend((1..top).map(|len| BasisElement::Prefix { arrow: a, len }));
        }
        let socle_rotation: Vec<usize> = (0..quiver.vertex_count())
            .map(|v| {
                *quiver
                    .outgoing(v)
                    .iter()
                    .min_by(|&&a, &&b| {
                        let (x, y) = (quiver.arrow(a), quiver.arrow(b));
                        natural_cmp(config.vertex_name(x.vertex), config.vertex_name(y.vertex))
                            .then(x.position.cmp(&y.position))
                    })
                    .expect("every polygon carries a special cycle")
            })
            .collect();
        basis.extend((0..quiver.vertex_count()).map(BasisElement::Socle));
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        Algebra {
            config,
            quiver,
            relations,
            basis,
            index,
            socle_rotation,
            bound,
        }
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn basis_index(&self, b: &BasisElement) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// `N = max ℓ(C^μ) + 1`; every path of length `N` vanishes.
    pub fn nilpotency_bound(&self) -> usize {
        self.bound
    }

    fn top_len(&self, a: usize) -> usize {
        self.quiver.cycle_len(a) * self.quiver.cycle_multiplicity(a) as usize
    }

    pub fn source(&self, b: &BasisElement) -> usize {
        match *b {
            BasisElement::Idempotent(v) | BasisElement::Socle(v) => v,
            BasisElement::Prefix { arrow, .. } => self.quiver.arrow(arrow).source,
        }
    }

    pub fn target(&self, b: &BasisElement) -> usize {
        match *b {
            BasisElement::Idempotent(v) | BasisElement::Socle(v) => v,
            BasisElement::Prefix { arrow, len } => {
                self.quiver
                    .arrow(self.quiver.cycle_arrow(arrow, len - 1))
                    .target
            }
        }
    }

    /// Path length of the representative path (`0` for idempotents).
    pub fn degree(&self, b: &BasisElement) -> usize {
        match *b {
            BasisElement::Idempotent(_) => 0,
            BasisElement::Prefix { len, .. } => len,
            BasisElement::Socle(v) => self.top_len(self.socle_rotation[v]),
        }
    }

    /// Representative arrow path of a basis element.
    pub fn representative(&self, b: &BasisElement) -> (usize, Vec<usize>) {
        match *b {
            BasisElement::Idempotent(v) => (v, vec![]),
            BasisElement::Prefix { arrow, len } => (
                self.quiver.arrow(arrow).source,
                (0..len)
                    .map(|k| self.quiver.cycle_arrow(arrow, k))
                    .collect(),
            ),
            BasisElement::Socle(v) => {
                let a = self.socle_rotation[v];
                (
                    v,
                    (0..self.top_len(a))
                        .map(|k| self.quiver.cycle_arrow(a, k))
                        .collect(),
                )
            }
        }
    }

    pub fn basis_name(&self, b: &BasisElement) -> String {
        match *b {
            BasisElement::Idempotent(v) => format!("e({})", self.quiver.label(v)),
            BasisElement::Socle(v) => format!("soc({})", self.quiver.label(v)),
            BasisElement::Prefix { .. } => {
                let (_, p) = self.representative(b);
                p.iter()
                    .map(|&a| self.quiver.arrow(a).alias.as_str())
                    .collect::<Vec<_>>()
                    .join(".")
            }
        }
    }

    pub fn idempotent(&self, polygon: &str) -> Result<AlgebraElement, AlgebraError> {
        let v = (0..self.quiver.vertex_count())
            .find(|&v| self.quiver.label(v) == polygon)
            .ok_or_else(|| AlgebraError::UnknownPolygon(polygon.to_string()))?;
        Ok(AlgebraElement::basis(BasisElement::Idempotent(v)))
    }

    /// Class of a nonempty path of arrows.
    pub fn normal_form_path(&self, path: &[usize]) -> Result<AlgebraElement, AlgebraError> {
        for w in path.windows(2) {
            if self.quiver.arrow(w[0]).target != self.quiver.arrow(w[1]).source {
                return Err(AlgebraError::NotComposable(
                    self.quiver.arrow(w[0]).id.clone(),
                    self.quiver.arrow(w[1]).id.clone(),
                ));
            }
        }
        let Some(&first) = path.first() else {
            return Ok(AlgebraElement::zero());
        };
        let on_cycle = path
            .iter()
            .enumerate()
            .all(|(k, &a)| self.quiver.cycle_arrow(first, k) == a);
        let top = self.top_len(first);
        Ok(match path.len() {
            _ if !on_cycle => AlgebraElement::zero(),
            l if l < top => AlgebraElement::basis(BasisElement::Prefix {
                arrow: first,
                len: l,
            }),
            l if l == top => {
                AlgebraElement::basis(BasisElement::Socle(self.quiver.arrow(first).source))
            }
            _ => AlgebraElement::zero(),
        })
    }

    /// Parses arrow names (ids or aliases) and returns the path's class.
    pub fn normal_form_names(&self, names: &[&str]) -> Result<AlgebraElement, AlgebraError> {
        let path = names
            .iter()
            .map(|n| {
                self.quiver
                    .find_arrow(n)
                    .ok_or_else(|| AlgebraError::UnknownArrow(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.normal_form_path(&path)
    }

    /// Product of two basis elements; every structure constant is 0 or 1.
    pub fn basis_product(&self, x: &BasisElement, y: &BasisElement) -> Option<BasisElement> {
        use BasisElement::*;
        if self.target(x) != self.source(y) {
            return None;
        }
        match (*x, *y) {
            (Idempotent(_), _) => Some(*y),
            (_, Idempotent(_)) => Some(*x),
            (Socle(_), _) | (_, Socle(_)) => None,
            (Prefix { arrow: a, len: l }, Prefix { arrow: b, len: m }) => {
                if self.quiver.cycle_arrow(a, l) != b {
                    return None;
                }
                let total = l + m;
                let top = self.top_len(a);
                match total.cmp(&top) {
                    std::cmp::Ordering::Less => Some(Prefix {
                        arrow: a,
                        len: total,
                    }),
                    std::cmp::Ordering::Equal => Some(Socle(self.quiver.arrow(a).source)),
                    std::cmp::Ordering::Greater => None,
                }
            }
        }
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (b, c) in x.terms() {
            for (d, e) in y.terms() {
                if let Some(p) = self.basis_product(b, d) {
                    out.add_term(p, &(c * e));
                }
            }
        }
        out
    }

    pub fn one(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for v in 0..self.quiver.vertex_count() {
            out.add_term(BasisElement::Idempotent(v), &Scalar::one());
        }
        out
    }

    /// `φ(x)`: sum of socle coefficients.
    pub fn trace(&self, x: &AlgebraElement) -> Scalar {
        x.terms()
            .filter(|(b, _)| matches!(b, BasisElement::Socle(_)))
            .fold(Scalar::zero(), |acc, (_, c)| acc + c)
    }

    /// `φ(x y)`.
    pub fn symmetric_form(&self, x: &AlgebraElement, y: &AlgebraElement) -> Scalar {
        self.trace(&self.multiply(x, y))
    }

    pub fn to_vector(&self, x: &AlgebraElement) -> SparseVec {
        SparseVec::from_terms(x.terms().map(|(b, c)| (self.index[b], c.clone())))
    }

    pub fn from_vector(&self, v: &SparseVec) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, c) in v.entries() {
            out.add_term(self.basis[*i], c);
        }
        out
    }

    pub fn format_element(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .map(|(b, c)| {
                if c.is_one() {
                    self.basis_name(b)
                } else {
                    format!("{}*{}", format_scalar(c), self.basis_name(b))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Closed-form dimension next to the basis count.
    pub fn dimension(&self) -> DimensionReport {
        let cycles: Vec<CycleContribution> = self
            .quiver
            .canonical_cycles()
            .iter()
            .map(|c| {
                let mu = self.config.multiplicity(c.vertex);
                let len = c.len();
                CycleContribution {
                    vertex: self.config.vertex_name(c.vertex).to_string(),
                    length: len,
                    multiplicity: mu,
                    contribution: len * (mu as usize * len - 1),
                }
            })
            .collect();
        DimensionReport {
            formula: 2 * self.quiver.vertex_count()
                + cycles.iter().map(|c| c.contribution).sum::<usize>(),
            basis_count: self.basis.len(),
            quiver_vertices: self.quiver.vertex_count(),
            cycles,
        }
    }

    /// Entry `(i, j)`: basis elements whose representative path runs from
    /// `v_i` to `v_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.quiver.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for b in &self.basis {
            m[self.source(b)][self.target(b)] += 1;
        }
        m
    }

    /// Connected configuration, cross-checked against quiver connectivity.
    pub fn is_indecomposable(&self) -> bool {
        let by_config = self.config.component_partition().len();
        let by_quiver = self.quiver.undirected_components().len();
        debug_assert_eq!(by_config, by_quiver);
        by_config == 1 && by_quiver == 1
    }

    /// Whether every arrow `a` has exactly one arrow `b` with `ab != 0` and
    /// exactly one `c` with `ca != 0`, i.e. the first- and second-arrow maps
    /// on nonzero length-2 paths are bijections. `None` when some component
    /// has `rad^2 = 0`, where the statement does not apply.
    pub fn length_two_bijections(&self) -> Option<bool> {
        if self.config.has_degenerate() {
            return None;
        }
        let m = self.quiver.arrow_count();
        let mut firsts = vec![0usize; m];
        let mut seconds = vec![0usize; m];
        for a in 0..m {
            let x = BasisElement::Prefix { arrow: a, len: 1 };
            for &b in self.quiver.outgoing(self.quiver.arrow(a).target) {
                let y = BasisElement::Prefix { arrow: b, len: 1 };
                if self.basis_product(&x, &y).is_some() {
                    firsts[a] += 1;
                    seconds[b] += 1;
                }
            }
        }
        Some(firsts.iter().chain(&seconds).all(|&k| k == 1))
    }

    /// Whether every type-one relation has terms of equal length.
    pub fn type_one_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| match r {
            Relation::CycleDifference { .. } => {
                let t = r.terms(&self.quiver);
                t[0].0.len() == t[1].0.len()
            }
            _ => true,
        })
    }
}

impl FiniteDimAlgebra for Algebra {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn basis_product(&self, i: usize, j: usize) -> SparseVec {
        match Algebra::basis_product(self, &self.basis[i], &self.basis[j]) {
            Some(b) => SparseVec::unit(self.index[&b]),
            None => SparseVec::zero(),
        }
    }

    fn form(&self, i: usize) -> Scalar {
        match self.basis[i] {
            BasisElement::Socle(_) => Scalar::one(),
            _ => Scalar::zero(),
        }
    }

    fn unit(&self) -> SparseVec {
        self.to_vector(&self.one())
    }

    fn arrow_basis(&self) -> Vec<usize> {
        (0..self.quiver.arrow_count())
            .map(|a| {
                let len1 = if self.top_len(a) == 1 {
                    BasisElement::Socle(self.quiver.arrow(a).source)
                } else {
                    BasisElement::Prefix { arrow: a, len: 1 }
                };
                self.index[&len1]
            })
            .collect()
    }

    fn radical_basis(&self) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| !matches!(self.basis[i], BasisElement::Idempotent(_)))
            .collect()
    }

    fn basis_label(&self, i: usize) -> String {
        self.basis_name(&self.basis[i])
    }
}

/// Constant value of `val * μ` over the cycle vertices of a connected
/// configuration, if there is one. `Some(N)` exactly when the algebra is
/// graded by path length.
pub fn length_grading(cfg: &Configuration) -> Result<Option<usize>, AlgebraError> {
    let comps = cfg.component_partition().len();
    if comps != 1 {
        return Err(AlgebraError::Disconnected(comps));
    }
    let mut weights = cfg.cycle_vertices().into_iter().map(|v| cfg.weight(v));
    let first = weights.next();
    Ok(match first {
        Some(w) if weights.all(|x| x == w) => Some(w),
        _ => None,
    })
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "algebra with {} quiver vertices, {} arrows, dimension {}",
            self.quiver.vertex_count(),
            self.quiver.arrow_count(),
            self.basis.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::int;
    use crate::structure::{check_symmetric, radical_series};
    use crate::Execution;

    fn alg1() -> Algebra {
        Algebra::new(&fixtures::example1())
    }

    fn nf(alg: &Algebra, names: &[&str]) -> String {
        alg.format_element(&alg.normal_form_names(names).unwrap())
    }

    #[test]
    fn example1_relations_contain_listed_ones() {
        let a = alg1();
        let shown: Vec<String> = a
            .relations()
            .iter()
            .map(|r| r.display(a.quiver()))
            .collect();
        for expected in [
            "a1a2a3 - b1b2",
            "d3d4d1d2 - ee",
            "eee",
            "c1c2c1c2c1c2c1",
            "a1a2a3a1",
        ] {
            assert!(shown.iter().any(|s| s == expected), "missing {expected}");
        }
        // a_i b_j for every composable pair
        let q = a.quiver();
        for ai in ["a1", "a2", "a3"] {
            for bj in ["b1", "b2"] {
                let (x, y) = (q.find_arrow(ai).unwrap(), q.find_arrow(bj).unwrap());
                if q.arrow(x).target == q.arrow(y).source {
                    assert!(shown.contains(&format!("{ai}{bj}")), "{ai}{bj}");
                }
            }
        }
        assert!(!shown.contains(&"ee".to_string()));
    }

    #[test]
    fn example2_type_three_samples() {
        let a = Algebra::new(&fixtures::example2());
        let shown: Vec<String> = a
            .relations()
            .iter()
            .map(|r| r.display(a.quiver()))
            .collect();
        // aliases start at V1#1; the loops at v1 are a1 and a2, the loop at v2 is a4
        for expected in ["a2a1", "a1a1", "a4a4", "a1a3", "b2b1 - c2c1"] {
            assert!(shown.iter().any(|s| s == expected), "missing {expected}");
        }
    }

    #[test]
    fn normal_forms() {
        let a = alg1();
        assert_eq!(nf(&a, &["c1", "c2", "c1", "c2", "c1", "c2"]), "soc(V1)");
        assert_eq!(nf(&a, &["a1", "a2", "a3"]), "soc(V1)");
        assert_eq!(nf(&a, &["a1", "a2"]), "a1.a2");
        assert_eq!(nf(&a, &["e", "e"]), "soc(V3)");
        assert_eq!(nf(&a, &["e", "e", "e"]), "0");
        assert_eq!(nf(&a, &["a1", "a2", "a3", "a1"]), "0");
        assert!(matches!(
            a.normal_form_names(&["a1", "b1"]),
            Err(AlgebraError::NotComposable(..))
        ));
    }

    #[test]
    fn products() {
        let a = alg1();
        let q = a.quiver();
        let arrow = |n: &str| {
            AlgebraElement::basis(BasisElement::Prefix {
                arrow: q.find_arrow(n).unwrap(),
                len: 1,
            })
        };
        let p = a.multiply(&arrow("a1"), &arrow("a2"));
        assert_eq!(a.format_element(&p), "a1.a2");
        let s = AlgebraElement::basis(BasisElement::Socle(0));
        assert!(a.multiply(&s, &s).is_zero());
        // a1 * b1: b1 starts at V1, a1 ends at V5, so not even composable
        assert!(a.multiply(&arrow("a3"), &arrow("b1")).is_zero());
        let a2a3 = a.normal_form_names(&["a2", "a3"]).unwrap();
        assert_eq!(a.symmetric_form(&arrow("a1"), &a2a3), int(1));
        let e1 = a.idempotent("V1").unwrap();
        assert_eq!(a.symmetric_form(&e1, &arrow("a1")), int(0));
    }

    #[test]
    fn dimensions_and_bound() {
        let a = alg1();
        let d = a.dimension();
        assert_eq!(d.formula, 41);
        assert_eq!(d.basis_count, 41);
        assert_eq!(a.nilpotency_bound(), 7);
        let b = Algebra::new(&fixtures::example2());
        assert_eq!(b.dimension().formula, 40);
        assert_eq!(b.dimension().basis_count, 40);
        let k3 = Algebra::new(&fixtures::truncated_polynomial_cube());
        assert_eq!(k3.dimension().basis_count, 3);
        assert_eq!(k3.cartan_matrix(), vec![vec![3]]);
        let folded = Algebra::new(&fixtures::self_folded_loop());
        assert_eq!(folded.dimension().basis_count, 4);
    }

    #[test]
    fn symmetric_and_series() {
        for cfg in [
            fixtures::example1(),
            fixtures::example2(),
            fixtures::truncated_polynomial_cube(),
        ] {
            let a = Algebra::new(&cfg);
            assert!(check_symmetric(&a, Execution::Sequential).passed());
        }
        let s = radical_series(&alg1());
        assert_eq!(s.len(), 8);
        assert!(s[6] > 0);
        assert_eq!(s[7], 0);
        assert_eq!(
            radical_series(&Algebra::new(&fixtures::self_folded_loop())),
            [4, 3, 1, 0]
        );
    }

    #[test]
    fn grading() {
        assert_eq!(
            length_grading(&fixtures::example1().reduce()).unwrap(),
            None
        );
        assert_eq!(
            length_grading(&fixtures::self_folded_loop()).unwrap(),
            Some(2)
        );
        assert!(!alg1().type_one_homogeneous());
    }

    #[test]
    fn degenerate_two_gon_is_dual_numbers() {
        let a = Algebra::new(&fixtures::dual_numbers());
        assert_eq!(a.dimension().basis_count, 2);
        assert_eq!(radical_series(&a), [2, 1, 0]);
        assert_eq!(a.length_two_bijections(), None);
        assert!(check_symmetric(&a, Execution::Sequential).passed());
    }

    #[test]
    fn decomposability() {
        assert!(alg1().is_indecomposable());
        let u = Algebra::new(&fixtures::disjoint_union_example());
        assert!(!u.is_indecomposable());
        assert_eq!(u.quiver().undirected_components().len(), 2);
        let c = u.cartan_matrix();
        let comps = u.config().component_partition();
        for x in &comps[0] {
            for y in &comps[1] {
                assert_eq!(c[*x][*y], 0);
                assert_eq!(c[*y][*x], 0);
            }
        }
    }
}
