//! Exact computations with Brauer configurations and their algebras.
//!
//! A [`config::Configuration`] is a validated Brauer configuration: vertices with
//! multiplicities, labeled polygons (multisets of vertices) and a cyclic
//! orientation at every nontruncated vertex. From it we build the quiver, the
//! defining relations, a canonical basis and exact structure constants of the
//! associated algebra, together with the projective-module structure and the
//! correspondence between graphs, symmetric matrices and radical-cube-zero
//! configurations.
//!
//! Every closed-form count exposed here has a brute-force counterpart
//! ([`oracle`]) that recomputes it by linear algebra over the rationals.

#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod config;
pub mod exec;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod modules;
pub mod names;
pub mod oracle;
pub mod quiver;
pub mod rad3;
pub mod random;
pub mod structure;

pub use algebra::{Algebra, AlgebraElement, BasisElement, Relation};
pub use config::{BrauerConfiguration, Configuration, ValidateOptions};
pub use exec::Execution;
pub use quiver::{Arrow, Quiver, SpecialCycle};
pub use structure::FiniteDimAlgebra;
