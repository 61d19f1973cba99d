//! Brute-force dimension and normal-form oracle.
//!
//! Works in `KQ / J^{N+1}`: every path of length at most `N` is a coordinate,
//! and the ideal is spanned by all `u ρ w` for relations `ρ` and paths `u`,
//! `w`, with terms longer than `N` dropped. The quotient dimension is the
//! number of paths minus the exact rank of that span. The oracle also checks
//! that every path of length `N` lies in the span, so nothing is lost by the
//! truncation.
//!
//! Nothing here looks at the prefix basis; it only needs the quiver and the
//! relation list.

use std::collections::HashMap;
use std::env;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{relations, Algebra, BasisElement};
use crate::config::Configuration;
use crate::exec::Execution;
use crate::linalg::{int, Echelon, Scalar, SparseVec};
use crate::quiver::Quiver;

pub const PATH_LIMIT_VAR: &str = "BCA_ORACLE_PATH_LIMIT";
const DEFAULT_PATH_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "path enumeration exceeds the limit of {limit} paths (set {PATH_LIMIT_VAR} to raise it)"
    )]
    ResourceLimit { limit: usize },
}

/// Reads the path ceiling from the environment, falling back to 10^6.
pub fn path_limit() -> usize {
    env::var(PATH_LIMIT_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_PATH_LIMIT)
}

/// A quiver with relations, stripped down to what the oracle needs.
#[derive(Clone, Debug)]
pub struct PathPresentation {
    pub vertex_count: usize,
    /// `(source, target)` per arrow.
    pub arrows: Vec<(usize, usize)>,
    /// Each relation as signed arrow paths (all nonempty, same endpoints).
    pub relations: Vec<Vec<(Vec<usize>, i64)>>,
    /// Truncation degree `N`.
    pub bound: usize,
}

impl PathPresentation {
    /// Presentation of a configuration's quiver and its three relation types.
    pub fn of_quiver(q: &Quiver) -> Self {
        let bound = (0..q.arrow_count())
            .map(|a| q.cycle_len(a) * q.cycle_multiplicity(a) as usize + 1)
            .max()
            .unwrap_or(1);
        PathPresentation {
            vertex_count: q.vertex_count(),
            arrows: q.arrows().iter().map(|a| (a.source, a.target)).collect(),
            relations: relations(q).iter().map(|r| r.terms(q)).collect(),
            bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub dimension: usize,
    pub bound: usize,
    pub path_count: usize,
    pub ideal_rank: usize,
    /// Every path of length `N` lies in the ideal span.
    pub top_degree_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormReport {
    pub paths_checked: usize,
    pub mismatches: Vec<String>,
}

/// Truncated path space together with the reduced span of the ideal.
pub struct PathOracle {
    pres: PathPresentation,
    /// `(start vertex, arrows)`; grouped by length, length 0 first.
    paths: Vec<(usize, Vec<usize>)>,
    index: HashMap<(usize, Vec<usize>), usize>,
    ideal: Echelon,
}

impl PathOracle {
    pub fn new(pres: PathPresentation, exec: Execution) -> Result<Self, OracleError> {
        Self::with_limit(pres, exec, path_limit())
    }

    pub fn with_limit(
        pres: PathPresentation,
        exec: Execution,
        limit: usize,
    ) -> Result<Self, OracleError> {
        let mut outgoing = vec![Vec::new(); pres.vertex_count];
        for (a, &(s, _)) in pres.arrows.iter().enumerate() {
            outgoing[s].push(a);
        }
        let mut paths: Vec<(usize, Vec<usize>)> =
            (0..pres.vertex_count).map(|v| (v, Vec::new())).collect();
        let mut frontier: Vec<usize> = (0..paths.len()).collect();
        for _ in 0..pres.bound {
            let mut next = Vec::new();
            for &i in &frontier {
                let (s, p) = paths[i].clone();
                let end = p.last().map_or(s, |&a| pres.arrows[a].1);
                for &a in &outgoing[end] {
                    let mut q = p.clone();
                    q.push(a);
                    next.push(paths.len());
                    paths.push((s, q));
                    if paths.len() > limit {
                        return Err(OracleError::ResourceLimit { limit });
                    }
                }
            }
            frontier = next;
        }
        let index: HashMap<(usize, Vec<usize>), usize> = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();

        let mut ending_at = vec![Vec::new(); pres.vertex_count];
        let mut starting_at = vec![Vec::new(); pres.vertex_count];
        for (i, (s, p)) in paths.iter().enumerate() {
            let end = p.last().map_or(*s, |&a| pres.arrows[a].1);
            ending_at[end].push(i);
            starting_at[*s].push(i);
        }

        // u ρ w for every relation and every pair of flanking paths
        let generators: Vec<Vec<SparseVec>> = exec.map(&pres.relations, |rel| {
            let (first, _) = &rel[0];
            let src = pres.arrows[first[0]].0;
            let tgt = pres.arrows[*first.last().unwrap()].1;
            let shortest = rel.iter().map(|(p, _)| p.len()).min().unwrap_or(0);
            let mut out = Vec::new();
            for &u in &ending_at[src] {
                let lu = paths[u].1.len();
                if lu + shortest > pres.bound {
                    continue;
                }
                for &w in &starting_at[tgt] {
                    let lw = paths[w].1.len();
                    if lu + shortest + lw > pres.bound {
                        continue;
                    }
                    let terms = rel.iter().filter_map(|(p, c)| {
                        if lu + p.len() + lw > pres.bound {
                            return None;
                        }
                        let mut word = paths[u].1.clone();
                        word.extend_from_slice(p);
                        word.extend_from_slice(&paths[w].1);
                        let start = paths[u].0;
                        Some((index[&(start, word)], int(*c)))
                    });
                    let v = SparseVec::from_terms(terms);
                    if !v.is_zero() {
                        out.push(v);
                    }
                }
            }
            out
        });
        let mut ideal = Echelon::new();
        // monomials first; they make the binomial reductions short
        let (mono, multi): (Vec<&SparseVec>, Vec<&SparseVec>) =
            generators.iter().flatten().partition(|v| v.len() == 1);
        for v in mono.into_iter().chain(multi) {
            ideal.insert(v);
        }
        Ok(PathOracle {
            pres,
            paths,
            index,
            ideal,
        })
    }

    pub fn report(&self) -> OracleReport {
        let top_degree_vanishes = self
            .paths
            .iter()
            .enumerate()
            .filter(|(_, (_, p))| p.len() == self.pres.bound)
            .all(|(i, _)| self.ideal.contains(&SparseVec::unit(i)));
        OracleReport {
            dimension: self.paths.len() - self.ideal.rank(),
            bound: self.pres.bound,
            path_count: self.paths.len(),
            ideal_rank: self.ideal.rank(),
            top_degree_vanishes,
        }
    }

    pub fn path_index(&self, start: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(start, arrows.to_vec())).copied()
    }

    /// Whether `Σ c_i p_i` lies in the ideal (paths given by index).
    pub fn in_ideal(&self, v: &SparseVec) -> bool {
        self.ideal.contains(v)
    }

    /// Compares `normal_form_path` with the oracle's class for every path of
    /// length `1 ..< N`. The oracle must have been built from `alg.quiver()`.
    pub fn check_normal_forms(&self, alg: &Algebra, exec: Execution) -> NormalFormReport {
        let candidates: Vec<usize> = (0..self.paths.len())
            .filter(|&i| {
                let l = self.paths[i].1.len();
                l >= 1 && l < self.pres.bound
            })
            .collect();
        let results = exec.map(&candidates, |&i| {
            let (_, p) = &self.paths[i];
            let nf = match alg.normal_form_path(p) {
                Ok(x) => x,
                Err(e) => return Some(format!("{p:?}: {e}")),
            };
            let mut terms: Vec<(usize, Scalar)> = vec![(i, Scalar::one())];
            for (b, c) in nf.terms() {
                let (s, rep) = alg.representative(b);
                match self.path_index(s, &rep) {
                    Some(j) => terms.push((j, -c.clone())),
                    None => return Some(format!("{p:?}: representative outside path space")),
                }
            }
            let diff = SparseVec::from_terms(terms);
            (!self.ideal.contains(&diff)).then(|| {
                let name: Vec<&str> = p
                    .iter()
                    .map(|&a| alg.quiver().arrow(a).alias.as_str())
                    .collect();
                format!("{} -> {}", name.join("."), alg.format_element(&nf))
            })
        });
        NormalFormReport {
            paths_checked: candidates.len(),
            mismatches: results.into_iter().flatten().collect(),
        }
    }

    /// Whether the representatives of the algebra's basis are independent
    /// modulo the ideal.
    pub fn basis_independent(&self, alg: &Algebra) -> bool {
        let mut e = self.ideal.clone();
        alg.basis().iter().all(|b: &BasisElement| {
            let (s, rep) = alg.representative(b);
            self.path_index(s, &rep)
                .is_some_and(|j| e.insert(&SparseVec::unit(j)))
        })
    }
}

/// Dimension of the configuration algebra computed from relations alone.
pub fn brute_force_dimension(cfg: &Configuration) -> Result<OracleReport, OracleError> {
    let q = Quiver::build(cfg);
    Ok(PathOracle::new(PathPresentation::of_quiver(&q), Execution::default())?.report())
}
