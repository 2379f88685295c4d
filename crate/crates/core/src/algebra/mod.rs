//! Operator words, exact coefficients, and normal-ordered polynomials.

pub mod coefficient;
pub mod poly;
pub mod word;

pub use coefficient::{Coefficient, QPoly};
pub use poly::{coherent_expectation, poly_add, Key, NormalPolynomial};
pub use word::{parse_word, Letter, Word};
