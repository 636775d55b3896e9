//! Exact coefficient arithmetic.
//!
//! The coefficient tower is `Rational ⊂ MultiPoly ⊂ RationalFunction`, wrapped
//! by [`ExactScalar`] which promotes on demand and demotes after every
//! operation so that results are always held in the smallest layer that can
//! represent them.

mod poly;
mod ratfunc;
mod rational;
mod scalar;

pub use poly::{Monomial, MultiPoly, Var};
pub use ratfunc::RationalFunction;
pub use rational::{binomial, factorial, parse_rational, rat, Rational};
pub use scalar::{scalar_arith, ArithOp, ExactScalar};
