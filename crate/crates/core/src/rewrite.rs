//! Normal ordering by direct use of the commutation relation
//! `a a† = a† a + 1`, or `a a† = q a† a + 1` in q-mode.
//!
//! This is the reference path: every other way of computing a normal form
//! is checked against it.

use std::collections::HashMap;

use num_traits::One;

use crate::algebra::{Coefficient, Letter, NormalPolynomial, Word};
use crate::error::{Error, Result};

/// Memoizing rewriter. The cache is keyed by word and owned by the value,
/// so separate instances never share state.
#[derive(Debug)]
pub struct Rewriter {
    q_mode: bool,
    swap_factor: Coefficient,
    memo: HashMap<Vec<Letter>, NormalPolynomial>,
}

impl Rewriter {
    pub fn new(q_mode: bool) -> Self {
        Rewriter {
            q_mode,
            swap_factor: if q_mode {
                Coefficient::q()
            } else {
                Coefficient::one()
            },
            memo: HashMap::new(),
        }
    }

    pub fn q_mode(&self) -> bool {
        self.q_mode
    }

    pub fn normal_form(&mut self, w: &Word) -> NormalPolynomial {
        self.normal_form_letters(w.letters())
    }

    fn normal_form_letters(&mut self, letters: &[Letter]) -> NormalPolynomial {
        // leftmost `a a†` pair; absent means the word is already normal
        let Some(i) = letters
            .windows(2)
            .position(|w| w[0] == Letter::Annihilation && w[1] == Letter::Creation)
        else {
            let dag = letters.iter().filter(|&&l| l == Letter::Creation).count();
            return NormalPolynomial::monomial(dag, letters.len() - dag, Coefficient::one());
        };
        if let Some(hit) = self.memo.get(letters) {
            return hit.clone();
        }

        let mut swapped = letters.to_vec();
        swapped.swap(i, i + 1);
        let mut contracted = Vec::with_capacity(letters.len() - 2);
        contracted.extend_from_slice(&letters[..i]);
        contracted.extend_from_slice(&letters[i + 2..]);

        let factor = self.swap_factor.clone();
        let swapped_nf = self.normal_form_letters(&swapped);
        let contracted_nf = self.normal_form_letters(&contracted);
        let result = swapped_nf.scale(&factor).add(&contracted_nf);
        self.memo.insert(letters.to_vec(), result.clone());
        result
    }

    /// Normal form of the operator product `p · q`.
    pub fn multiply(
        &mut self,
        p: &NormalPolynomial,
        q: &NormalPolynomial,
    ) -> Result<NormalPolynomial> {
        if !self.q_mode && (p.has_q_coefficients() || q.has_q_coefficients()) {
            return Err(Error::MixedModes);
        }
        let mut out = NormalPolynomial::zero();
        for (&(i, j), c) in p.iter() {
            for (&(k, l), d) in q.iter() {
                // (a†)^i [a^j (a†)^k] a^l
                let middle: Word = std::iter::repeat_n(Letter::Annihilation, j)
                    .chain(std::iter::repeat_n(Letter::Creation, k))
                    .collect();
                let cd = c * d;
                let term = self.normal_form(&middle).shifted(i, l).scale(&cd);
                out = out.add(&term);
            }
        }
        Ok(out)
    }

    pub fn power(&mut self, base: &Word, n: usize) -> Result<NormalPolynomial> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "power exponent must be at least 1".into(),
            ));
        }
        let base_nf = self.normal_form(base);
        let mut acc = base_nf.clone();
        for _ in 1..n {
            acc = self.multiply(&acc, &base_nf)?;
        }
        Ok(acc)
    }
}

/// Normal form of `w` by repeated application of the commutation relation.
pub fn normal_order_rewrite(w: &Word, q_mode: bool) -> NormalPolynomial {
    Rewriter::new(q_mode).normal_form(w)
}

/// Normal form of the product `p · q`. In canonical mode, q-dependent
/// coefficients are rejected.
pub fn multiply_normal(
    p: &NormalPolynomial,
    q: &NormalPolynomial,
    q_mode: bool,
) -> Result<NormalPolynomial> {
    Rewriter::new(q_mode).multiply(p, q)
}

/// Normal form of `base` repeated `n ≥ 1` times, by iterated normal multiplication.
pub fn normal_order_power(base: &Word, n: usize, q_mode: bool) -> Result<NormalPolynomial> {
    Rewriter::new(q_mode).power(base, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_word, QPoly};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn poly(terms: &[((usize, usize), i64)]) -> NormalPolynomial {
        NormalPolynomial::from_terms(terms.iter().map(|&(k, c)| (k, Coefficient::from(c))))
    }

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn paper_words() {
        assert_eq!(
            normal_order_rewrite(&w("d^2 a d a d^4 a"), false),
            poly(&[((7, 3), 1), ((6, 2), 9), ((5, 1), 16)])
        );
        assert_eq!(
            normal_order_rewrite(&w("a d a^2 d^2"), false),
            poly(&[((3, 3), 1), ((2, 2), 7), ((1, 1), 10), ((0, 0), 2)])
        );
    }

    #[test]
    fn fixed_points() {
        assert_eq!(
            normal_order_rewrite(&w("d^3 a^2"), false),
            poly(&[((3, 2), 1)])
        );
        assert_eq!(
            normal_order_rewrite(&Word::empty(), true),
            NormalPolynomial::one()
        );
    }

    #[test]
    fn q_defining_relation() {
        let nf = normal_order_rewrite(&w("a d"), true);
        assert_eq!(nf.get(1, 1), Some(&Coefficient::q()));
        assert_eq!(nf.get(0, 0), Some(&Coefficient::one()));
        assert_eq!(nf.len(), 2);
    }

    #[test]
    fn q_two_swaps() {
        // a a d = q a d a + a = q (q d a + 1) a + a = q^2 d a^2 + (q + 1) a
        let nf = normal_order_rewrite(&w("a a d"), true);
        let q2 = QPoly::new(vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)]);
        let q1 = QPoly::new(vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(nf.get(1, 2), Some(&Coefficient::QPoly(q2)));
        assert_eq!(nf.get(0, 1), Some(&Coefficient::QPoly(q1)));
    }

    #[test]
    fn multiply_examples() {
        let n = poly(&[((1, 1), 1)]);
        // (a† a)^2 = a†^2 a^2 + a† a, same as rewriting "dada"
        let sq = multiply_normal(&n, &n, false).unwrap();
        assert_eq!(sq, poly(&[((2, 2), 1), ((1, 1), 1)]));
        assert_eq!(sq, normal_order_rewrite(&w("d a d a"), false));
        assert_eq!(
            multiply_normal(&sq, &NormalPolynomial::one(), false).unwrap(),
            sq
        );
        assert_eq!(
            multiply_normal(&NormalPolynomial::one(), &sq, false).unwrap(),
            sq
        );
    }

    #[test]
    fn multiply_rejects_q_in_canonical_mode() {
        let p = NormalPolynomial::monomial(1, 1, Coefficient::q());
        assert_eq!(
            multiply_normal(&p, &NormalPolynomial::one(), false),
            Err(Error::MixedModes)
        );
        assert!(multiply_normal(&p, &NormalPolynomial::one(), true).is_ok());
    }

    #[test]
    fn powers() {
        assert_eq!(
            normal_order_power(&w("d a"), 3, false).unwrap(),
            poly(&[((3, 3), 1), ((2, 2), 3), ((1, 1), 1)])
        );
        assert_eq!(
            normal_order_power(&w("d a"), 1, false).unwrap(),
            poly(&[((1, 1), 1)])
        );
        assert!(normal_order_power(&w("d a"), 0, false).is_err());
        // (d^2 a)^2 by brute-force rewrite of the 6-letter word
        assert_eq!(
            normal_order_power(&w("d^2 a"), 2, false).unwrap(),
            normal_order_rewrite(&w("d d a d d a"), false)
        );
        assert_eq!(
            normal_order_rewrite(&w("d d a d d a"), false),
            poly(&[((4, 2), 1), ((3, 1), 2)])
        );
    }

    #[test]
    fn power_matches_repeated_word_in_q_mode() {
        for n in 1..=5 {
            assert_eq!(
                normal_order_power(&w("d a"), n, true).unwrap(),
                normal_order_rewrite(&w("d a").repeat(n), true)
            );
        }
    }

    #[test]
    fn homomorphism_exhaustive() {
        let words: Vec<Word> = Word::all_up_to(8).collect();
        let mut rw = Rewriter::new(false);
        for u in words.iter().filter(|u| u.len() <= 4) {
            for v in words.iter().filter(|v| u.len() + v.len() <= 8) {
                let lhs = rw.normal_form(&u.concat(v));
                let nu = rw.normal_form(u);
                let nv = rw.normal_form(v);
                assert_eq!(lhs, rw.multiply(&nu, &nv).unwrap(), "u={u} v={v}");
            }
        }
    }

    #[test]
    fn degree_law_and_positivity_exhaustive() {
        let mut rw = Rewriter::new(false);
        for word in Word::all_up_to(10) {
            let (p, m) = (word.creations(), word.annihilations());
            let nf = rw.normal_form(&word);
            assert!(!nf.is_zero());
            for (&(i, j), c) in nf.iter() {
                assert_eq!(i as isize - j as isize, p as isize - m as isize);
                // key (p − k, m − k) with 0 ≤ k ≤ min(p, m)
                assert!(j <= m && m - j <= p.min(m));
                assert!(c.as_int().is_some_and(|v| v > &BigInt::from(0)), "{word}");
            }
        }
    }

    #[test]
    fn q_at_one_matches_canonical_exhaustive() {
        let mut canon = Rewriter::new(false);
        let mut qr = Rewriter::new(true);
        for word in Word::all_up_to(8) {
            assert_eq!(
                qr.normal_form(&word).at_q_one(),
                canon.normal_form(&word),
                "{word}"
            );
        }
    }

    fn arb_small_poly() -> impl Strategy<Value = NormalPolynomial> {
        proptest::collection::vec(((0usize..3, 0usize..3), 1i64..4), 1..4)
            .prop_map(|v| NormalPolynomial::from_terms(v.into_iter().map(|(k, c)| (k, c.into()))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiply_associative(p in arb_small_poly(), q in arb_small_poly(), r in arb_small_poly()) {
            let mut rw = Rewriter::new(false);
            let pq = rw.multiply(&p, &q).unwrap();
            let qr = rw.multiply(&q, &r).unwrap();
            let left = rw.multiply(&pq, &r).unwrap();
            let right = rw.multiply(&p, &qr).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn normal_monomial_is_idempotent(dag in 0usize..6, ann in 0usize..6) {
            prop_assert_eq!(
                normal_order_rewrite(&Word::normal_monomial(dag, ann), false),
                poly(&[((dag, ann), 1)])
            );
        }
    }
}
