//! Exact arithmetic substrate: rationals, bivariate polynomials and linear
//! systems solved by fraction-free elimination.

mod feasibility;
mod linsys;
mod poly;
mod rational;

pub use feasibility::{strictly_positive_point, Feasibility};
pub use linsys::{expansion_matrix, solve_exact, LinSystem, SolveResult};
pub use poly::{BivarPoly, LineDivision};
pub use rational::{binomial, parse_rational, rat, Rational};
