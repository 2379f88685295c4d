//! Brute-force counting of graphs built from n labelled lines, each running
//! from a black dot (origin) to a white dot (vertex).
//!
//! A graph is fixed by which lines share an origin and which share a vertex,
//! i.e. by an ordered pair of set partitions of the lines. Its weight is the
//! product of `L_m` over black dots emitting m lines and `V_s` over white
//! dots receiving s lines.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::egf::WeightSpec;
use crate::error::{Error, Result};

pub const SET_PARTITION_MAX_N: usize = 12;
pub const ENUMERATE_MAX_N: usize = 10;

/// Set partitions of `{0, …, n−1}` as restricted growth strings:
/// `labels[i]` is the block of element i, and each label is at most one
/// more than every label before it.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    labels: Vec<usize>,
    // maxima[i] = max(labels[..=i])
    maxima: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    fn new(n: usize) -> Self {
        SetPartitions {
            labels: vec![0; n],
            maxima: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    /// Blocks in order of their smallest element.
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let n = self.labels.len();
        let blocks = n.checked_sub(1).map_or(0, |last| self.maxima[last] + 1);
        let mut out = vec![Vec::new(); blocks];
        for (i, &b) in self.labels.iter().enumerate() {
            out[b].push(i);
        }

        // advance: rightmost position that can still grow
        self.done = true;
        for i in (1..n).rev() {
            if self.labels[i] <= self.maxima[i - 1] {
                self.labels[i] += 1;
                self.maxima[i] = self.maxima[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.maxima[j] = self.maxima[i];
                }
                self.done = false;
                break;
            }
        }
        Some(out)
    }
}

/// Every set partition of an n-element set, each exactly once.
pub fn set_partitions(n: usize) -> Result<SetPartitions> {
    if n > SET_PARTITION_MAX_N {
        return Err(Error::ScaleCap {
            what: "set size",
            got: n,
            cap: SET_PARTITION_MAX_N,
        });
    }
    Ok(SetPartitions::new(n))
}

/// Number of set partitions of each block-size multiset.
fn shape_histogram(n: usize) -> Result<BTreeMap<Vec<usize>, u64>> {
    let mut hist = BTreeMap::new();
    for partition in set_partitions(n)? {
        let mut shape: Vec<usize> = partition.iter().map(Vec::len).collect();
        shape.sort_unstable();
        *hist.entry(shape).or_insert(0) += 1;
    }
    Ok(hist)
}

fn shape_weight(shape: &[usize], w: &WeightSpec) -> BigRational {
    shape
        .iter()
        .fold(BigRational::one(), |acc, &s| acc * w.weight(s))
}

/// Weighted count of all graphs on `n` labelled lines. Partitions with the
/// same block sizes carry the same weight, so the sum over ordered pairs is
/// taken over block-size shapes with their multiplicities.
pub fn enumerate_weighted(n: usize, v: &WeightSpec, l: &WeightSpec) -> Result<BigRational> {
    if n > ENUMERATE_MAX_N {
        return Err(Error::ScaleCap {
            what: "lines",
            got: n,
            cap: ENUMERATE_MAX_N,
        });
    }
    let hist = shape_histogram(n)?;
    let mut total = BigRational::zero();
    for (black, &nb) in &hist {
        let lw = shape_weight(black, l);
        if lw.is_zero() {
            continue;
        }
        for (white, &nw) in &hist {
            let vw = shape_weight(white, v);
            total += &lw * vw * BigRational::from_integer(BigInt::from(nb * nw));
        }
    }
    Ok(total)
}
