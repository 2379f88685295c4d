//! Exhaustive cross-checks between the independent computation routes.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{QPoly, Word};
use crate::egf::{egf_coefficient, graph_egf, WeightSpec};
use crate::graphs::enumerate_weighted;
use crate::numbers::is_unimodal;
use crate::rewrite::Rewriter;
use crate::rook::{normal_order_rook, partitions_of, rook_numbers, rook_numbers_bruteforce};

/// Failures kept per suite before further ones are only counted.
const MAX_REPORTED: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn from_results(name: &'static str, results: Vec<Option<String>>) -> Self {
        let checked = results.len();
        let failures: Vec<String> = results.into_iter().flatten().collect();
        SuiteReport {
            name,
            checked,
            failed: failures.len(),
            failures: failures.into_iter().take(MAX_REPORTED).collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failed)?;
        }
        f.write_str(")")?;
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

/// Rook-number normal form against rewriting, every word up to `max_len`.
pub fn rook_vs_rewrite(max_len: usize) -> SuiteReport {
    let words: Vec<Word> = Word::all_up_to(max_len).collect();
    let results = words
        .par_iter()
        .map_init(
            || Rewriter::new(false),
            |rw, w| {
                let expected = rw.normal_form(w);
                let got = normal_order_rook(w);
                (got != expected).then(|| format!("\"{w}\": rook {got} vs rewrite {expected}"))
            },
        )
        .collect();
    SuiteReport::from_results("rook vs rewrite", results)
}

/// q-mode normal form at q = 1 against the canonical one, every word up to `max_len`.
pub fn q_one_reduction(max_len: usize) -> SuiteReport {
    let words: Vec<Word> = Word::all_up_to(max_len).collect();
    let results = words
        .par_iter()
        .map_init(
            || (Rewriter::new(false), Rewriter::new(true)),
            |(canon, qr), w| {
                let expected = canon.normal_form(w);
                let got = qr.normal_form(w).at_q_one();
                (got != expected).then(|| format!("\"{w}\": q=1 gives {got}, canonical {expected}"))
            },
        )
        .collect();
    SuiteReport::from_results("q=1 reduction", results)
}

/// Column recurrence against exhaustive placement, every partition with at most `max_cells` cells.
pub fn rook_bruteforce(max_cells: usize) -> SuiteReport {
    let boards: Vec<_> = (0..=max_cells).flat_map(partitions_of).collect();
    let results = boards
        .par_iter()
        .map(|b| {
            let fast = rook_numbers(b);
            match rook_numbers_bruteforce(b) {
                Ok(slow) if slow == fast => None,
                Ok(slow) => Some(format!("{b}: recurrence {fast}, enumeration {slow}")),
                Err(e) => Some(format!("{b}: {e}")),
            }
        })
        .collect();
    SuiteReport::from_results("rook recurrence vs enumeration", results)
}

/// The preset weight pairs `(V, L)`: unit weights, the Bell case, and the `B_{2,1}` case.
pub fn preset_weight_pairs() -> Vec<(WeightSpec, WeightSpec)> {
    vec![
        (WeightSpec::Ones, WeightSpec::Ones),
        (WeightSpec::Ones, WeightSpec::DeltaAt(1)),
        (WeightSpec::Factorial, WeightSpec::DeltaAt(1)),
        (WeightSpec::Factorial, WeightSpec::Ones),
        (WeightSpec::DeltaAt(2), WeightSpec::DeltaAt(1)),
    ]
}

/// `count` pairs of explicit integer weight lists of length `len`, entries in `0..=3`.
pub fn random_weight_pairs(count: usize, len: usize, seed: u64) -> Vec<(WeightSpec, WeightSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = |rng: &mut ChaCha8Rng| {
        WeightSpec::Explicit(
            (0..len)
                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(0..=3))))
                .collect(),
        )
    };
    (0..count)
        .map(|_| (spec(&mut rng), spec(&mut rng)))
        .collect()
}

/// Graph EGF coefficients against the enumerator for `n = 0..=max_n`.
pub fn egf_vs_enumerator(max_n: usize, pairs: &[(WeightSpec, WeightSpec)]) -> SuiteReport {
    let results = pairs
        .par_iter()
        .flat_map_iter(|(v, l)| {
            let series = graph_egf(v, l, max_n);
            (0..=max_n).map(move |n| {
                let from_egf = egf_coefficient(&series, n);
                let counted = enumerate_weighted(n, v, l);
                match (from_egf, counted) {
                    (Ok(a), Ok(b)) if a == b => None,
                    (Ok(a), Ok(b)) => Some(format!("V={v} L={l} n={n}: egf {a}, enumerated {b}")),
                    (Err(e), _) | (_, Err(e)) => Some(format!("V={v} L={l} n={n}: {e}")),
                }
            })
        })
        .collect();
    SuiteReport::from_results("graph egf vs enumerator", results)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnimodalityReport {
    pub checked: usize,
    pub counterexamples: Vec<(Word, QPoly)>,
}

impl UnimodalityReport {
    pub fn all_unimodal(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Unimodality of the q-polynomial (both operators set to 1) of every word up to `max_len`.
pub fn unimodality_scan(max_len: usize) -> UnimodalityReport {
    let words: Vec<Word> = Word::all_up_to(max_len).collect();
    let polys: Vec<(Word, QPoly)> = words
        .into_par_iter()
        .map_init(
            || Rewriter::new(true),
            |rw, w| {
                let p = rw
                    .normal_form(&w)
                    .iter()
                    .fold(QPoly::default(), |acc, (_, c)| &acc + &c.to_qpoly());
                (w, p)
            },
        )
        .collect();
    let checked = polys.len();
    let counterexamples = polys
        .into_iter()
        .filter(|(_, p)| !is_unimodal(p.coeffs()))
        .collect();
    UnimodalityReport {
        checked,
        counterexamples,
    }
}
