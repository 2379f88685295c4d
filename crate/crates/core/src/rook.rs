//! Normal ordering through rook numbers of Ferrers boards.
//!
//! A word determines a board whose rows are indexed by its annihilation
//! letters; the row of the i-th `a` has one cell per `a†` standing to its
//! right. A placement of k non-attacking rooks is a choice of k disjoint
//! (a, a†) contraction pairs, so
//!
//! ```text
//! N(w) = Σ_k r_k(B) (a†)^(p−k) a^(m−k)
//! ```
//!
//! with `p`, `m` the numbers of creation and annihilation letters.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::algebra::{Coefficient, Letter, NormalPolynomial, Word};
use crate::error::{Error, Result};

/// Largest board the exhaustive placement count accepts.
pub const BRUTEFORCE_MAX_CELLS: usize = 25;

/// Row lengths of a Ferrers board, weakly decreasing, no zero rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    parts: Vec<usize>,
}

impl FerrersBoard {
    /// Builds a board from row lengths in any order; zero rows are dropped.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        FerrersBoard { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn cells(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column heights (the conjugate partition), weakly decreasing.
    pub fn column_heights(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect()
    }

    /// One `#` per cell, longest row first.
    pub fn diagram(&self) -> String {
        self.parts
            .iter()
            .map(|&p| "#".repeat(p))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `r[k]` is the number of ways to place k non-attacking rooks. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RookVector {
    r: Vec<BigUint>,
}

impl RookVector {
    fn new(mut r: Vec<BigUint>) -> Self {
        while r.len() > 1 && r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        RookVector { r }
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.r
    }

    /// `r_k`, zero beyond the stored range.
    pub fn get(&self, k: usize) -> BigUint {
        self.r.get(k).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }
}

impl fmt::Display for RookVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.r.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", r.join(","))
    }
}

/// λ_i = number of creation letters to the right of the i-th annihilation letter.
pub fn board_from_word(w: &Word) -> FerrersBoard {
    let mut creations_right = 0usize;
    let mut parts = Vec::new();
    for &letter in w.letters().iter().rev() {
        match letter {
            Letter::Creation => creations_right += 1,
            Letter::Annihilation => parts.push(creations_right),
        }
    }
    FerrersBoard::from_parts(parts)
}

/// Rook numbers by adding columns in non-decreasing height order. With
/// bottom-aligned columns, each of the k−1 rooks already placed blocks
/// exactly one cell of the new column.
pub fn rook_numbers(board: &FerrersBoard) -> RookVector {
    let mut heights = board.column_heights();
    heights.sort_unstable();
    let mut r = vec![BigUint::one()];
    for h in heights {
        r.push(BigUint::zero());
        for k in (1..r.len()).rev() {
            if h + 1 > k {
                let add = &r[k - 1] * BigUint::from(h + 1 - k);
                r[k] += add;
            }
        }
    }
    RookVector::new(r)
}

/// Rook numbers by exhaustive enumeration of placements. Boards above
/// [`BRUTEFORCE_MAX_CELLS`] cells are rejected.
pub fn rook_numbers_bruteforce(board: &FerrersBoard) -> Result<RookVector> {
    if board.cells() > BRUTEFORCE_MAX_CELLS {
        return Err(Error::ScaleCap {
            what: "board cells",
            got: board.cells(),
            cap: BRUTEFORCE_MAX_CELLS,
        });
    }
    let width = board.parts.first().copied().unwrap_or(0);
    let mut counts = vec![0u64; board.rows().min(width) + 1];
    let mut used = vec![false; width];
    place(&board.parts, 0, 0, &mut used, &mut counts);
    Ok(RookVector::new(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

fn place(parts: &[usize], row: usize, placed: usize, used: &mut [bool], counts: &mut [u64]) {
    if row == parts.len() {
        counts[placed] += 1;
        return;
    }
    place(parts, row + 1, placed, used, counts);
    for col in 0..parts[row] {
        if !used[col] {
            used[col] = true;
            place(parts, row + 1, placed + 1, used, counts);
            used[col] = false;
        }
    }
}

/// Normal form from rook numbers of the word's board.
pub fn normal_order_rook(w: &Word) -> NormalPolynomial {
    let (p, m) = (w.creations(), w.annihilations());
    let rooks = rook_numbers(&board_from_word(w));
    NormalPolynomial::from_terms(
        (0..=p.min(m)).map(|k| ((p - k, m - k), Coefficient::Int(BigInt::from(rooks.get(k))))),
    )
}

/// Every integer partition of `n`, as boards, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<FerrersBoard> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<FerrersBoard>) {
        if rest == 0 {
            out.push(FerrersBoard { parts: cur.clone() });
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
