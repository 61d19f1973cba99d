//! Indecomposable projectives `P_V = e_v Λ` and their uniserial chains.
//!
//! Every special cycle `C` at `v` with first arrow `a` gives a chain
//! `U_{nμ} ⊂ … ⊂ U_1 ⊂ P_V`, where `U_j` is generated by the prefix of
//! `C^μ` of length `j`. Modules are described by composition data; the
//! submodule checks below work with spans of basis vectors.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, BasisElement};
use crate::linalg::{rank_of, Echelon, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("unknown polygon {0:?}")]
    UnknownPolygon(String),
    #[error("rad^2 of the projective at {0} vanishes")]
    RadicalSquareZero(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniserialChain {
    /// First arrow of the generating rotation.
    pub rotation: usize,
    pub vertex: String,
    /// Generators of `U_1, …, U_{nμ}`; the last one is the socle element.
    pub generators: Vec<BasisElement>,
    /// Generators written as arrow words, the last one as the full power.
    pub generator_paths: Vec<String>,
    /// Quiver vertex of `U_j / U_{j+1}` for `j = 1 … nμ`.
    pub layers: Vec<usize>,
}

impl UniserialChain {
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Basis of `U_j` (1-based).
    pub fn submodule_basis(&self, j: usize) -> &[BasisElement] {
        &self.generators[j - 1..]
    }
}

pub fn uniserial_chain(alg: &Algebra, rotation: usize) -> UniserialChain {
    let q = alg.quiver();
    let top = q.cycle_len(rotation) * q.cycle_multiplicity(rotation) as usize;
    let source = q.arrow(rotation).source;
    let mut generators = Vec::with_capacity(top);
    let mut generator_paths = Vec::with_capacity(top);
    let mut layers = Vec::with_capacity(top);
    for j in 1..=top {
        let last = q.cycle_arrow(rotation, j - 1);
        layers.push(q.arrow(last).target);
        generators.push(if j < top {
            BasisElement::Prefix {
                arrow: rotation,
                len: j,
            }
        } else {
            BasisElement::Socle(source)
        });
        generator_paths.push(
            (0..j)
                .map(|k| q.arrow(q.cycle_arrow(rotation, k)).alias.as_str())
                .collect::<Vec<_>>()
                .join("."),
        );
    }
    UniserialChain {
        rotation,
        vertex: alg
            .config()
            .vertex_name(q.arrow(rotation).vertex)
            .to_string(),
        generators,
        generator_paths,
        layers,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectiveStructure {
    pub polygon: String,
    pub vertex: usize,
    /// Number of uniserial summands of the heart.
    pub r: usize,
    /// `r` predicted from the polygon: nontruncated occurrences, or 1 for a
    /// 2-gon with a truncated vertex.
    pub r_expected: usize,
    pub chains: Vec<UniserialChain>,
    /// Layer sequences of the heart summands (chains without the socle).
    pub heart: Vec<Vec<usize>>,
    /// `dim P` computed from the chains.
    pub dim_from_chains: usize,
    /// Basis elements with source `v`.
    pub dim_from_basis: usize,
    pub uniserial: bool,
    /// The polygon is a 2-gon with a truncated vertex.
    pub uniserial_expected: bool,
    /// Distinct chains meet exactly in the socle.
    pub chains_meet_in_socle: bool,
    /// `rad P` is the sum of the `U_1`s and has dimension
    /// `Σ dim U_1 - (r - 1)`.
    pub radical_is_sum: bool,
}

impl ProjectiveStructure {
    pub fn consistent(&self) -> bool {
        self.r == self.r_expected
            && self.dim_from_chains == self.dim_from_basis
            && self.uniserial == self.uniserial_expected
            && self.chains_meet_in_socle
            && self.radical_is_sum
    }
}

/// Right submodule `x Λ` as a list of spanning vectors.
fn generated(alg: &Algebra, x: &BasisElement) -> Vec<SparseVec> {
    let x = AlgebraElement::basis(*x);
    alg.basis()
        .iter()
        .map(|b| alg.to_vector(&alg.multiply(&x, &AlgebraElement::basis(*b))))
        .filter(|v| !v.is_zero())
        .collect()
}

pub fn projective_structure(
    alg: &Algebra,
    polygon: &str,
) -> Result<ProjectiveStructure, ModuleError> {
    let cfg = alg.config();
    let v = cfg
        .polygon_id(polygon)
        .map_err(|_| ModuleError::UnknownPolygon(polygon.to_string()))?;
    let q = alg.quiver();
    let chains: Vec<UniserialChain> = q
        .outgoing(v)
        .iter()
        .map(|&a| uniserial_chain(alg, a))
        .collect();
    let r = chains.len();

    let members = cfg.members(v);
    let has_truncated = members.iter().any(|&m| cfg.truncated(m));
    let uniserial_expected = members.len() == 2 && has_truncated;
    let r_expected = if uniserial_expected {
        1
    } else {
        members.iter().filter(|&&m| !cfg.truncated(m)).count()
    };

    let dim_from_chains = if r == 1 {
        chains[0].len() + 1
    } else {
        2 + chains.iter().map(|c| c.len() - 1).sum::<usize>()
    };
    let dim_from_basis = alg.basis().iter().filter(|b| alg.source(b) == v).count();

    let socle = alg.to_vector(&AlgebraElement::basis(BasisElement::Socle(v)));
    let spans: Vec<Vec<SparseVec>> = chains
        .iter()
        .map(|c| generated(alg, &c.generators[0]))
        .collect();
    let dims: Vec<usize> = spans.iter().map(rank_of).collect();
    let mut chains_meet_in_socle = true;
    for i in 0..r {
        for j in i + 1..r {
            let sum = rank_of(spans[i].iter().chain(&spans[j]));
            let meet = dims[i] + dims[j] - sum;
            let mut e = Echelon::new();
            spans[i].iter().for_each(|x| {
                e.insert(x);
            });
            let mut f = Echelon::new();
            spans[j].iter().for_each(|x| {
                f.insert(x);
            });
            if meet != 1 || !e.contains(&socle) || !f.contains(&socle) {
                chains_meet_in_socle = false;
            }
        }
    }
    let radical: Vec<SparseVec> = alg
        .basis()
        .iter()
        .filter(|b| alg.source(b) == v && !matches!(b, BasisElement::Idempotent(_)))
        .map(|b| alg.to_vector(&AlgebraElement::basis(*b)))
        .collect();
    let sum_rank = rank_of(spans.iter().flatten());
    let all_rank = rank_of(spans.iter().flatten().chain(&radical));
    let radical_is_sum = sum_rank == radical.len()
        && all_rank == radical.len()
        && sum_rank + r.saturating_sub(1) == dims.iter().sum::<usize>();

    let heart = chains
        .iter()
        .map(|c| c.layers[..c.len() - 1].to_vec())
        .collect();
    Ok(ProjectiveStructure {
        polygon: polygon.to_string(),
        vertex: v,
        r,
        r_expected,
        chains,
        heart,
        dim_from_chains,
        dim_from_basis,
        uniserial: r == 1,
        uniserial_expected,
        chains_meet_in_socle,
        radical_is_sum,
    })
}

pub fn all_projectives(alg: &Algebra) -> Vec<ProjectiveStructure> {
    (0..alg.quiver().vertex_count())
        .map(|v| {
            projective_structure(alg, alg.quiver().label(v)).expect("label comes from the quiver")
        })
        .collect()
}

/// Number of heart summands; requires `rad^2(P_V) != 0`.
pub fn heart_summand_count(alg: &Algebra, polygon: &str) -> Result<usize, ModuleError> {
    let p = projective_structure(alg, polygon)?;
    if p.chains.iter().all(|c| c.len() < 2) {
        return Err(ModuleError::RadicalSquareZero(polygon.to_string()));
    }
    Ok(p.r)
}
