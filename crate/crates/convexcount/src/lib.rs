//! Exact-arithmetic workbench for counting convex polyominoes.
//!
//! A convex polyomino is an edge-connected set of unit cells whose rows and
//! columns are all contiguous intervals. This crate counts them by minimal
//! bounding rectangle and by perimeter through three independent routes
//! (closed formula, quadruple binomial sum, brute-force enumeration) and
//! verifies, as truncated power series over exact rationals, the
//! generating-function identities that connect the routes, including the
//! generating function of Jacobi polynomials.
//!
//! Modules:
//! - [`exactnum`]: big integers/rationals, extended binomials, Pochhammer
//!   symbols, and the Chu-Vandermonde checker.
//! - [`lattice`]: polyomino geometry, brute-force enumeration, the four-path
//!   boundary decomposition, and non-intersecting path-pair counting.
//! - [`counting`]: the closed-form counts, the quadruple sum, and the
//!   S0..S5 decomposition with raw and closed evaluators.
//! - [`series`]: truncated bivariate power series over exact rationals and
//!   the identity verifiers.
//! - [`cli`]: the `convexcount` command-line front end.

pub mod cli;
pub mod counting;
pub mod exactnum;
pub mod lattice;
pub mod series;

use exactnum::BigRational;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("feasibility bound exceeded: {0}")]
    Feasibility(String),
    #[error("pochhammer pole: ({c})_{k} = 0")]
    Pole { c: BigRational, k: u32 },
    #[error("not a valid polyomino: {0}")]
    InvalidPolyomino(String),
    #[error("lemma hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("path does not match the expected endpoints: {0}")]
    EndpointMismatch(String),
    #[error("paths share the lattice point ({0}, {1})")]
    PathsIntersect(i64, i64),
    #[error("exponent ({i},{j}) exceeds truncation degree {degree}")]
    ExponentOutOfRange { i: usize, j: usize, degree: usize },
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("sqrt requires constant term 1, found {0}")]
    SqrtConstantTerm(BigRational),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("invalid ascii polyomino: {0}")]
    AsciiParse(String),
}
