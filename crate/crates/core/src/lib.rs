//! Exact-arithmetic engine for generalized Eulerian triangles.
//!
//! The crate is organised bottom-up:
//! - [`algebra`]: rationals, sparse multivariate polynomials in `r, y, a, b`,
//!   rational functions and the [`ExactScalar`] coefficient tower
//! - [`series`]: truncated power series in `x` or `t`
//! - [`triangle`]: lower-triangular matrices and production matrices
//! - [`transforms`]: Sumudu transform and the reciprocal pipelines
//! - [`riordan`]: ordinary/exponential Riordan arrays, A/Z sequences,
//!   orthogonal polynomial recurrences
//! - [`cfrac`]: Jacobi and Stieltjes continued fractions, the T transform
//! - [`gallery`]: named generating functions, triangle families and fixtures

pub mod algebra;
pub mod cfrac;
pub mod error;
pub mod gallery;
pub mod riordan;
pub mod series;
pub mod transforms;
pub mod triangle;

pub use algebra::{ExactScalar, Monomial, MultiPoly, Rational, RationalFunction, Var};
pub use error::{Error, Result};
pub use series::{PowerSeries, SeriesVar};
pub use triangle::{ProductionMatrix, Triangle};
