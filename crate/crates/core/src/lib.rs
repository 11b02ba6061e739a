//! Exact computations with the twisted Heisenberg-Virasoro algebra: the
//! bracket, several families of modules, tensor products of polynomial modules
//! with highest-weight inductions, and procedures that check structural
//! properties of these modules on concrete instances.
//!
//! Everything is computed over the Gaussian rationals, so every check is an
//! exact identity.

pub mod algebra;
pub mod analysis;
pub mod arith;
pub mod modules;
pub mod report;
pub mod tensor;

pub use algebra::{bracket, Generator, LieElement};
pub use arith::{Rational, Scalar, SparseVec};
