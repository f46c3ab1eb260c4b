//! Exact quantum Schubert calculus for Grassmannians.
//!
//! The crate computes in the one-parameter family of graded rings on the
//! Schubert basis `{q^d sigma_lambda : lambda inside an m x k box}`:
//!
//! - [`partition`]: Young-diagram combinatorics (strips, rims, orders, duals,
//!   the permutation dictionary);
//! - [`qring`]: quantum Pieri and Giambelli multiplication, structure
//!   constants, positivity data;
//! - [`schur`]: Jacobi-Trudi determinants over exact rationals and an
//!   independent ideal-normal-form oracle that cross-validates `qring`;
//! - [`seidel`]: the cyclic Seidel shift, orbits, and the weight-sum law;
//! - [`deform`]: candidate deformed bases, their structure constants,
//!   negativity witnesses, and machine-checkable uniqueness certificates;
//! - [`exhibits`]: the Lagrangian `LG(2,4)` two-parameter family and the
//!   `GL(6)/B` shift-orbit table, where the Grassmannian laws fail.
//!
//! All arithmetic is exact rational; floating point is never used.

pub mod deform;
pub mod error;
pub mod exhibits;
pub mod partition;
pub mod qring;
pub mod rational;
pub mod schur;
pub mod seidel;

pub use error::{Error, Result};
pub use partition::{deg_lex_compare, BoxBound, Partition, Permutation, RimMode};
pub use qring::{QClass, RingParams, StructureConstantTable};
pub use rational::Rational;
