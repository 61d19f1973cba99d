//! Checks that only need structure constants on a basis.
//!
//! Both the configuration algebras and the canonical radical-cube-zero
//! algebras of graphs implement [`FiniteDimAlgebra`]; symmetry, radical
//! series, associativity and unit laws are computed here once for both.

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::exec::Execution;
use crate::linalg::{dense_rank, Echelon, Scalar, SparseVec};

pub trait FiniteDimAlgebra: Sync {
    fn dim(&self) -> usize;

    /// Product of basis elements `i * j` in basis coordinates.
    fn basis_product(&self, i: usize, j: usize) -> SparseVec;

    /// The symmetrizing linear form on a basis element.
    fn form(&self, i: usize) -> Scalar;

    fn unit(&self) -> SparseVec;

    /// Basis indices of the arrows; they generate the radical.
    fn arrow_basis(&self) -> Vec<usize>;

    /// Basis indices spanning the radical.
    fn radical_basis(&self) -> Vec<usize>;

    fn basis_label(&self, i: usize) -> String;

    fn multiply(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, a) in x.entries() {
            for (j, b) in y.entries() {
                let k = a * b;
                for (c, z) in self.basis_product(*i, *j).entries() {
                    terms.push((*c, z * &k));
                }
            }
        }
        SparseVec::from_terms(terms)
    }

    fn apply_form(&self, x: &SparseVec) -> Scalar {
        x.entries()
            .iter()
            .fold(Scalar::zero(), |acc, (i, a)| acc + a * self.form(*i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub gram_rank: usize,
    pub dim: usize,
    /// First basis pair with `φ(b_i b_j) != φ(b_j b_i)`.
    pub asymmetric_pair: Option<(String, String)>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.symmetric && self.gram_rank == self.dim
    }
}

/// `φ(b_i b_j) = φ(b_j b_i)` on every basis pair, and the Gram matrix of
/// `(x, y) ↦ φ(xy)` has full rank.
pub fn check_symmetric<A: FiniteDimAlgebra + ?Sized>(alg: &A, exec: Execution) -> SymmetryReport {
    let n = alg.dim();
    let rows: Vec<Vec<Scalar>> = exec.map_range(0..n, |i| {
        (0..n)
            .map(|j| alg.apply_form(&alg.basis_product(i, j)))
            .collect()
    });
    let mut asymmetric_pair = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if rows[i][j] != rows[j][i] {
                asymmetric_pair = Some((alg.basis_label(i), alg.basis_label(j)));
                break 'outer;
            }
        }
    }
    SymmetryReport {
        symmetric: asymmetric_pair.is_none(),
        gram_rank: dense_rank(&rows),
        dim: n,
        asymmetric_pair,
    }
}

/// Dimensions of `rad^0 = A, rad^1, …` down to and including the first zero.
pub fn radical_series<A: FiniteDimAlgebra + ?Sized>(alg: &A) -> Vec<usize> {
    let mut dims = vec![alg.dim()];
    let mut layer: Vec<SparseVec> = alg
        .radical_basis()
        .into_iter()
        .map(SparseVec::unit)
        .collect();
    let arrows: Vec<SparseVec> = alg.arrow_basis().into_iter().map(SparseVec::unit).collect();
    loop {
        let basis = independent(&layer);
        dims.push(basis.len());
        if basis.is_empty() || dims.len() > alg.dim() + 2 {
            return dims;
        }
        layer = basis
            .iter()
            .flat_map(|x| arrows.iter().map(move |a| alg.multiply(x, a)))
            .filter(|v| !v.is_zero())
            .collect();
    }
}

fn independent(vs: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    vs.iter().filter(|v| e.insert(v)).cloned().collect()
}

/// Loewy length: number of nonzero radical layers counting `rad^0`.
pub fn loewy_length(series: &[usize]) -> usize {
    series.iter().position(|&d| d == 0).unwrap_or(series.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociativityReport {
    pub triples_checked: usize,
    pub failure: Option<(String, String, String)>,
}

/// `(xy)z = x(yz)` on every basis triple.
pub fn check_associativity_exhaustive<A: FiniteDimAlgebra + ?Sized>(
    alg: &A,
    exec: Execution,
) -> AssociativityReport {
    let n = alg.dim();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .collect();
    associativity_on(alg, &triples, exec)
}

/// `(xy)z = x(yz)` on `count` basis triples drawn from `rng`.
pub fn check_associativity_sampled<A: FiniteDimAlgebra + ?Sized, R: Rng>(
    alg: &A,
    count: usize,
    rng: &mut R,
    exec: Execution,
) -> AssociativityReport {
    let n = alg.dim();
    let triples: Vec<(usize, usize, usize)> = (0..count)
        .map(|_| {
            (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            )
        })
        .collect();
    associativity_on(alg, &triples, exec)
}

fn associativity_on<A: FiniteDimAlgebra + ?Sized>(
    alg: &A,
    triples: &[(usize, usize, usize)],
    exec: Execution,
) -> AssociativityReport {
    let ok = exec.map(triples, |&(i, j, k)| {
        let (x, y, z) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
        alg.multiply(&alg.multiply(&x, &y), &z) == alg.multiply(&x, &alg.multiply(&y, &z))
    });
    let failure = ok.iter().position(|b| !b).map(|p| {
        let (i, j, k) = triples[p];
        (alg.basis_label(i), alg.basis_label(j), alg.basis_label(k))
    });
    AssociativityReport {
        triples_checked: triples.len(),
        failure,
    }
}

/// `1 * b = b * 1 = b` for every basis element.
pub fn check_unit<A: FiniteDimAlgebra + ?Sized>(alg: &A) -> bool {
    let one = alg.unit();
    (0..alg.dim()).all(|i| {
        let b = SparseVec::unit(i);
        alg.multiply(&one, &b) == b && alg.multiply(&b, &one) == b
    })
}
