//! Exact normal ordering of single-mode boson words and the combinatorics
//! that comes with it.
//!
//! Words in `a` and `a†` are normal-ordered either by rewriting with the
//! commutation relation (optionally q-deformed) or through rook numbers of
//! the word's Ferrers board. On top of that sit Stirling and Bell numbers,
//! their generalizations, and exponential generating functions for a class
//! of weighted graphs together with a brute-force enumerator for them.

pub mod algebra;
pub mod egf;
pub mod error;
pub mod graphs;
pub mod numbers;
pub mod rewrite;
pub mod rook;
pub mod verify;

pub use algebra::{
    coherent_expectation, parse_word, poly_add, Coefficient, Letter, NormalPolynomial, QPoly, Word,
};
pub use error::{Error, Result};
pub use rewrite::{multiply_normal, normal_order_power, normal_order_rewrite};
pub use rook::{
    board_from_word, normal_order_rook, rook_numbers, rook_numbers_bruteforce, FerrersBoard,
    RookVector,
};
