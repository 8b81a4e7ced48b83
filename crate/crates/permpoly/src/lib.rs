//! Exact-arithmetic toolkit for permanental polynomials of graph Laplacians
//! and signless Laplacians.
//!
//! The crate computes psi(M; x) = per(xI - M) three independent ways
//! ([`engines`]), evaluates the closed forms known for coconut trees,
//! spiders, perfect binary trees, and cycle coronas ([`closedforms`]),
//! recovers vertex/edge/degree data back out of the polynomials and solves
//! the resulting degree systems ([`invariants`]), and searches small-graph
//! censuses for co-permanental mates ([`mates`]). Published coefficient
//! claims are checked against the engines and the verdicts collected into a
//! stable errata report ([`claims`]).
//!
//! Everything is exact: polynomial coefficients are arbitrary-precision
//! integers and no floating point appears anywhere.
//!
//! ```
//! use permpoly::engines::{psi, Method};
//! use permpoly::{families, MatrixKind};
//!
//! let tree = families::perfect_binary_tree(2).unwrap();
//! let p = psi(&tree, MatrixKind::Laplacian, Method::Auto).unwrap();
//! assert_eq!(
//!     p.to_string(),
//!     "x^7 - 12x^6 + 65x^5 - 200x^4 + 371x^3 - 408x^2 + 243x - 60"
//! );
//! // a tree's signless polynomial coincides with the Laplacian one
//! assert_eq!(p, psi(&tree, MatrixKind::Signless, Method::Auto).unwrap());
//! ```

pub mod canon;
pub mod claims;
pub mod closedforms;
pub mod engines;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod mates;
pub mod poly;

pub use graph::{matrix_of, Graph, IntMatrix, MatrixKind};
pub use poly::IntPoly;
