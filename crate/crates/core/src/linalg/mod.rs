//! Exact dense linear algebra over Q and Q(i).

mod eigen;
mod jordan;
mod matrix;
mod scalar;
mod solve;

pub use eigen::{characteristic_polynomial, rational_eigenvalues};
pub use jordan::jordan_structure;
pub use matrix::ExactMatrix;
pub use scalar::{descending, format_rational, parse_rational, rational, Field, Scalar};
pub use solve::{sylvester_solve, LinearSolve};
