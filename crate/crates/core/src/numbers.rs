//! Stirling and Bell numbers, their (r, s) generalizations and q-analogues,
//! read off from normal forms of powers of boson monomials.
//!
//! `S(n, k)` is the coefficient of `(a†)^k a^k` in `N((a† a)^n)`, and
//! `S_{r,s}(n, k)` the coefficient of `(a†)^{n(r−s)+k} a^k` in
//! `N([(a†)^r a^s]^n)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Coefficient, NormalPolynomial, QPoly, Word};
use crate::error::{Error, Result};
use crate::rewrite::{normal_order_power, normal_order_rewrite};

fn number_operator() -> Word {
    Word::normal_monomial(1, 1)
}

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidArgument(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn int_coeff(p: &NormalPolynomial, dag: usize, ann: usize) -> BigInt {
    p.get(dag, ann)
        .and_then(Coefficient::as_int)
        .cloned()
        .unwrap_or_default()
}

/// Row `[S(n,1), …, S(n,n)]` from the normal form of `(a† a)^n`.
pub fn stirling_row(n: usize) -> Result<Vec<BigInt>> {
    require_positive("n", n)?;
    let nf = normal_order_power(&number_operator(), n, false)?;
    Ok((1..=n).map(|k| int_coeff(&nf, k, k)).collect())
}

/// `S(n, k)`; zero for `k < 1` or `k > n`.
pub fn stirling(n: usize, k: i64) -> Result<BigInt> {
    let row = stirling_row(n)?;
    Ok(usize::try_from(k)
        .ok()
        .filter(|&k| (1..=n).contains(&k))
        .map(|k| row[k - 1].clone())
        .unwrap_or_default())
}

/// `S(n, k)` from the triangle recurrence `S(n,k) = S(n−1,k−1) + k S(n−1,k)`.
/// Shares no code with the normal-ordering route.
pub fn stirling_recurrence(n: usize, k: i64) -> BigInt {
    let Ok(k) = usize::try_from(k) else {
        return BigInt::zero();
    };
    if k > n {
        return BigInt::zero();
    }
    // row[j] = S(i, j) for the current i, starting from S(0,0) = 1
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for _ in 0..n {
        for j in (1..=k).rev() {
            let next = &row[j - 1] + &row[j] * BigInt::from(j);
            row[j] = next;
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

/// `B(n) = Σ_k S(n, k)`.
pub fn bell(n: usize) -> Result<BigInt> {
    Ok(stirling_row(n)?.into_iter().sum())
}

fn check_rs(r: usize, s: usize, n: usize) -> Result<()> {
    require_positive("r", r)?;
    require_positive("s", s)?;
    require_positive("n", n)?;
    if r < s {
        return Err(Error::InvalidArgument(format!(
            "generalized Stirling numbers need r >= s (got r = {r}, s = {s})"
        )));
    }
    Ok(())
}

/// `[(k, S_{r,s}(n,k)) for k in s..=ns]` from the normal form of `[(a†)^r a^s]^n`.
pub fn stirling_rs_row(r: usize, s: usize, n: usize) -> Result<Vec<(usize, BigInt)>> {
    check_rs(r, s, n)?;
    let nf = normal_order_power(&Word::normal_monomial(r, s), n, false)?;
    let shift = n * (r - s);
    // the factored (a†)^{n(r−s)} must divide every term exactly
    if let Some(((dag, ann), _)) = nf.iter().find(|((dag, ann), _)| dag - ann != shift) {
        return Err(Error::InvalidArgument(format!(
            "term d^{dag} a^{ann} breaks the expected excess {shift}"
        )));
    }
    if let Some(((_, ann), _)) = nf.iter().find(|((_, ann), _)| !(s..=n * s).contains(ann)) {
        return Err(Error::InvalidArgument(format!(
            "annihilation degree {ann} outside {s}..={}",
            n * s
        )));
    }
    Ok((s..=n * s)
        .map(|k| (k, int_coeff(&nf, shift + k, k)))
        .collect())
}

/// `S_{r,s}(n, k)`; zero outside `s ≤ k ≤ ns`.
pub fn stirling_rs(r: usize, s: usize, n: usize, k: i64) -> Result<BigInt> {
    let row = stirling_rs_row(r, s, n)?;
    Ok(row
        .into_iter()
        .find(|&(j, _)| i64::try_from(j).ok() == Some(k))
        .map(|(_, v)| v)
        .unwrap_or_default())
}

/// `B_{r,s}(n) = Σ_{k=s}^{ns} S_{r,s}(n, k)`.
pub fn bell_rs(r: usize, s: usize, n: usize) -> Result<BigInt> {
    Ok(stirling_rs_row(r, s, n)?.into_iter().map(|(_, v)| v).sum())
}

/// Row `[S_q(n,1), …, S_q(n,n)]` from the q-mode normal form of `(a† a)^n`.
pub fn stirling_q_row(n: usize) -> Result<Vec<QPoly>> {
    require_positive("n", n)?;
    let nf = normal_order_power(&number_operator(), n, true)?;
    Ok((1..=n)
        .map(|k| nf.get(k, k).map(Coefficient::to_qpoly).unwrap_or_default())
        .collect())
}

/// `S_q(n, k)`; the zero polynomial outside `1 ≤ k ≤ n`.
pub fn stirling_q(n: usize, k: i64) -> Result<QPoly> {
    let row = stirling_q_row(n)?;
    Ok(usize::try_from(k)
        .ok()
        .filter(|&k| (1..=n).contains(&k))
        .map(|k| row[k - 1].clone())
        .unwrap_or_default())
}

/// The q-mode normal form of `w` with both operators replaced by 1.
pub fn q_word_polynomial(w: &Word) -> QPoly {
    normal_order_rewrite(w, true)
        .iter()
        .fold(QPoly::default(), |acc, (_, c)| &acc + &c.to_qpoly())
}

/// Weakly rising then weakly falling.
pub fn is_unimodal(coeffs: &[BigInt]) -> bool {
    let mut i = 1;
    while i < coeffs.len() && coeffs[i - 1] <= coeffs[i] {
        i += 1;
    }
    while i < coeffs.len() && coeffs[i - 1] >= coeffs[i] {
        i += 1;
    }
    i >= coeffs.len()
}
