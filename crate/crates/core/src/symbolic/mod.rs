//! Exact scalars, polynomials, linear algebra and exterior calculus on `R^d`.

pub mod forms;
pub mod linalg;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod random;
pub mod scalar;

pub use forms::{CalculusError, DifferentialForm, VectorField};
pub use linalg::{in_span, inverse, linear_kernel, rank, rref, solve, span_rank};
pub use matrix::{Matrix, PolyMatrix};
pub use parse::{parse_polynomial, ParseError};
pub use poly::{Monomial, Poly, Polynomial};
pub use scalar::{Field, GaussianRational, Rational, Ring};
