//! Non-commuting graphs of finite-dimensional Lie algebras over finite fields.
//!
//! A Lie algebra `L` over `F_q` is given by structure constants. Its
//! non-commuting graph has the non-central elements of `L` as vertices, with
//! an edge between `x` and `y` whenever `[x, y] != 0`. This crate builds those
//! graphs, computes their invariants, and runs a harness that checks a list
//! of structural statements about them by exhaustive computation.
//!
//! Module map:
//!
//! - [`gf`]: exact arithmetic in `F_q`.
//! - [`liealg`]: algebras, brackets, subspaces, center, centralizers.
//! - [`ncg`]: construction of the non-commuting graph.
//! - [`graphlab`]: graph invariants, planarity, isomorphism.
//! - [`verifier`]: algebra catalog, enumeration, statement checks.

pub mod error;
pub mod gf;
pub mod graphlab;
pub mod liealg;
pub mod limits;
pub mod ncg;
pub mod verifier;

pub use error::{Error, Result};
pub use gf::{Field, FieldElem};
pub use graphlab::{Dist, Graph, PropertyReport};
pub use liealg::{AlgebraSpec, BracketSpec, Element, LieAlgebra, Subspace};
pub use limits::Limits;
pub use ncg::NcGraph;
