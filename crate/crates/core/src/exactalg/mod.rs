//! Exact polynomial, rational-function and matrix algebra.

pub mod charpoly;
pub mod jacobi;
pub mod matrix;
pub mod poly;
pub mod rational_fn;
pub mod roots;

pub use charpoly::{adjugate_polynomial, charpoly_exact, charpoly_int, resolvent_quadratic_form};
pub use jacobi::{eigenvalues_sym, multiset_distance};
pub use matrix::ExactMatrix;
pub use poly::{poly_compose_projective, Coeff, IntPolynomial, Polynomial, RatPolynomial};
pub use rational_fn::RationalFn;
pub use roots::real_roots;
