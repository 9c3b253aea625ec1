//! Exact arithmetic: rationals, polynomials and rational functions in the
//! equivariant parameter, truncated power series, residues and linear solves.

mod linsolve;
mod poly;
mod ratfunc;
mod rational;
mod residue;
mod series;

pub use linsolve::{solve_exact, LinearSystem, Solution};
pub use poly::PolyH;
pub use ratfunc::RatFuncH;
pub use rational::{int, parse_rational, rat, rational_string, Rational, Ring};
pub use residue::{residue_at_order, residue_simple, FactoredRational};
pub use series::TruncSeries;
