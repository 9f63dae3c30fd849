//! Exact tools for one-dimensional discrete statistical models whose
//! maximum likelihood estimator is a rational function of the data.
//!
//! A reduced model in the simplex `Δn` is a list of `n + 1` distinct exponent
//! pairs `(ν, μ) ≠ (0, 0)` with positive scalings `c` such that
//! `Σ c·t^ν·(1−t)^μ ≡ 1`. It is *fundamental* when the scalings are the only
//! ones making that identity hold for the given support.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: rationals, sparse bivariate polynomials, the expansion
//!   system of a support and a fraction-free exact solver.
//! - [`model`]: model types, the named constructors, composition,
//!   unsplitting, one-parameter families and ML estimation.
//! - [`diagram`]: Newton diagrams of the cofactor `g` in `f − 1 = (x+y−1)·g`,
//!   sinks and sources, structural checks and ASCII renderings.
//! - [`enumerate`]: the pruned exhaustive search for fundamental models and
//!   the count tables it reproduces.
//!
//! Everything is computed over exact rationals; no floating point is used.

pub mod algebra;
pub mod diagram;
pub mod enumerate;
mod error;
pub mod model;
mod support;

pub use algebra::{BivarPoly, LinSystem, Rational, SolveResult};
pub use diagram::{Label, NewtonDiagram, SinkReport, StructureReport};
pub use enumerate::{Catalog, PruneRules, SearchMode, SearchSpec};
pub use error::{Error, Result};
pub use model::{FamilyModel, FundamentalityReport, MultiModel, ReducedModel};
pub use support::{ExponentPair, Support};
