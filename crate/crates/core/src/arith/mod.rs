//! Exact arithmetic: the scalar field `Q(i)`, sparse vectors, dense linear
//! algebra and the small amount of polynomial machinery the rest of the crate
//! needs.

mod matrix;
mod poly;
mod scalar;
mod sparse;

pub use matrix::{linear_solve, linear_solve_sparse, Matrix, SpanBasis};
pub use poly::{binomial, rational_roots, RationalPoly, RootSplit};
pub use scalar::Scalar;
pub use sparse::SparseVec;

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("non-rational roots remain after removing rational roots")]
    NonRationalRootsRemain,
    #[error("expected a monic polynomial of degree at least one")]
    InvalidPolynomial,
}
