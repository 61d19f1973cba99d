//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are sorted lists of `(coordinate, coefficient)` pairs with no
//! zero coefficients. [`Echelon`] maintains a reduced basis of a growing
//! subspace, pivoting on the largest coordinate of each row.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse vector with strictly increasing coordinates and nonzero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(coord: usize) -> Self {
        Self {
            entries: vec![(coord, Scalar::one())],
        }
    }

    /// Builds a vector from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, x) in terms {
            *acc.entry(c).or_insert_with(Scalar::zero) += x;
        }
        Self {
            entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, coord: usize) -> Scalar {
        match self.entries.binary_search_by_key(&coord, |(c, _)| *c) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.last().map(|(c, x)| (*c, x))
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            entries: self.entries.iter().map(|(c, x)| (*c, x * k)).collect(),
        }
    }

    /// `self + k * other`, merging the sorted coordinate lists.
    pub fn add_scaled(&self, k: &Scalar, other: &SparseVec) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, &b[j].1 * k));
                j += 1;
            } else {
                let x = &a[i].1 + &b[j].1 * k;
                if !x.is_zero() {
                    out.push((a[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
        Self { entries: out }
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.add_scaled(&-Scalar::one(), other)
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &a[i].1 * &b[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

/// Incrementally maintained row-echelon basis of a subspace.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the current basis until its leading coordinate is
    /// not a pivot. The result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut tail: Vec<(usize, Scalar)> = Vec::new();
        // Peel off non-pivot leading entries so reduction continues below them.
        while let Some((c, x)) = v.leading() {
            match self.pivots.get(&c) {
                Some(p) => {
                    let k = -x.clone();
                    v = v.add_scaled(&k, p);
                }
                None => {
                    let x = x.clone();
                    v.entries.pop();
                    tail.push((c, x));
                }
            }
        }
        tail.reverse();
        SparseVec { entries: tail }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set; returns true if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        while let Some((c, x)) = v.leading() {
            match self.pivots.get(&c) {
                Some(p) => {
                    let k = -x.clone();
                    v = v.add_scaled(&k, p);
                }
                None => {
                    let inv = x.recip();
                    let v = v.scaled(&inv);
                    self.pivots.insert(c, v);
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of a set of vectors.
pub fn rank_of<'a, I: IntoIterator<Item = &'a SparseVec>>(rows: I) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense matrix given row by row.
pub fn dense_rank(rows: &[Vec<Scalar>]) -> usize {
    rank_of(
        rows.iter()
            .map(|r| SparseVec::from_terms(r.iter().cloned().enumerate()))
            .collect::<Vec<_>>()
            .iter(),
    )
}

pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom().abs())
    }
}
