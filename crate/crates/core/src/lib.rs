//! Exact-arithmetic toolkit for Kostant cascades and the centers of
//! enveloping algebras of nilradicals of classical Borel subalgebras.
//!
//! The crate builds the classical root systems in their matrix realizations,
//! derives structure constants from the matrices, computes cascades of
//! strongly orthogonal roots for finitely-described orders on basis weights,
//! constructs the canonical central generators (determinants, Pfaffians and
//! their odd-index companions), and verifies the commutator calculus,
//! centrality, evaluation laws and Weyl-algebra structure of centrally
//! generated quotients — all over ℚ(√2), with no floating point anywhere.

pub mod cascade;
pub mod error;
pub mod forms;
pub mod generators;
pub mod linalg;
pub mod oracle;
mod par;
pub mod report;
pub mod rootsys;
pub mod scalar;
pub mod uea;
pub mod verify;

pub use error::{Error, Result};
pub use par::parallel_compiled;
pub use rootsys::{LieType, Root, RootSystem};
pub use scalar::Scalar;
