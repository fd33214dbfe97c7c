//! Exact linear algebra over the rationals and prime fields.

mod matrix;
mod poly;
mod scalar;
mod span;

pub use matrix::{kernel_basis, rref, solve, Matrix, Rref};
pub use poly::{char_poly, rational_roots};
pub use scalar::{is_prime, FieldSpec, Scalar};
pub use span::Span;
