use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::coefficient::{bigint_to_f64, Coefficient};
use crate::error::{Error, Result};

/// Key `(dag, ann)` standing for the normal monomial `(a†)^dag a^ann`.
pub type Key = (usize, usize);

/// Σ c_{ij} (a†)^i a^j with exact nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalPolynomial {
    terms: BTreeMap<Key, Coefficient>,
}

impl NormalPolynomial {
    pub fn zero() -> Self {
        NormalPolynomial::default()
    }

    /// The identity operator, `{(0,0): 1}`.
    pub fn one() -> Self {
        NormalPolynomial::monomial(0, 0, Coefficient::one())
    }

    pub fn monomial(dag: usize, ann: usize, coeff: Coefficient) -> Self {
        let mut p = NormalPolynomial::zero();
        p.add_term((dag, ann), &coeff);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Key, Coefficient)>,
    {
        let mut p = NormalPolynomial::zero();
        for (key, c) in terms {
            p.add_term(key, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, dag: usize, ann: usize) -> Option<&Coefficient> {
        self.terms.get(&(dag, ann))
    }

    /// Terms in ascending `(dag, ann)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&Key, &Coefficient)> {
        self.terms.iter()
    }

    /// Terms in output order: descending `ann`, then descending `dag`.
    pub fn sorted_terms(&self) -> Vec<(Key, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c)).collect();
        v.sort_by(|(a, _), (b, _)| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        v
    }

    pub fn add_term(&mut self, key: Key, coeff: &Coefficient) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NormalPolynomial) -> NormalPolynomial {
        let mut out = self.clone();
        for (&key, c) in &other.terms {
            out.add_term(key, c);
        }
        out
    }

    pub fn scale(&self, factor: &Coefficient) -> NormalPolynomial {
        NormalPolynomial::from_terms(self.terms.iter().map(|(&k, c)| (k, c * factor)))
    }

    /// Multiply on the left by `(a†)^dag` and on the right by `a^ann`.
    pub fn shifted(&self, dag: usize, ann: usize) -> NormalPolynomial {
        NormalPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + dag, j + ann), c.clone()))
                .collect(),
        }
    }

    pub fn has_q_coefficients(&self) -> bool {
        self.terms.values().any(Coefficient::is_q_dependent)
    }

    /// Substitute `q = 1` in every coefficient.
    pub fn at_q_one(&self) -> NormalPolynomial {
        NormalPolynomial::from_terms(
            self.terms
                .iter()
                .map(|(&k, c)| (k, Coefficient::Int(c.eval_one()))),
        )
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|((dag, ann), c)| match c {
                Coefficient::Int(v) => json!({"dag": dag, "ann": ann, "coeff": v.to_string()}),
                Coefficient::QPoly(p) => json!({
                    "dag": dag,
                    "ann": ann,
                    "coeff_q": p.coeffs().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                }),
            })
            .collect();
        json!({ "terms": terms })
    }
}

pub fn poly_add(p: &NormalPolynomial, q: &NormalPolynomial) -> NormalPolynomial {
    p.add(q)
}

/// Expectation value in the coherent state |z⟩: Σ c_{ij} conj(z)^i z^j.
pub fn coherent_expectation(p: &NormalPolynomial, z: Complex64) -> Result<Complex64> {
    let mut total = Complex64::zero();
    for (&(dag, ann), c) in p.iter() {
        let c = match c {
            Coefficient::Int(v) => bigint_to_f64(v),
            Coefficient::QPoly(_) => return Err(Error::NonConstantCoefficient(c.to_string())),
        };
        total += z.conj().powu(dag as u32) * z.powu(ann as u32) * c;
    }
    Ok(total)
}

fn monomial_text(dag: usize, ann: usize) -> String {
    let part = |sym: char, n: usize| match n {
        0 => None,
        1 => Some(sym.to_string()),
        _ => Some(format!("{sym}^{n}")),
    };
    [part('d', dag), part('a', ann)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Splits a coefficient into sign and magnitude when it can be printed that way.
fn sign_split(c: &Coefficient) -> (bool, Coefficient) {
    let negative = match c {
        Coefficient::Int(v) => v < &Zero::zero(),
        Coefficient::QPoly(p) if c.is_atomic() => p.coeffs().iter().any(|v| v < &Zero::zero()),
        Coefficient::QPoly(_) => false,
    };
    if negative {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

impl fmt::Display for NormalPolynomial {
    /// e.g. `d^7 a^3 + 9 d^6 a^2 + 16 d^5 a`; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, ((dag, ann), c)) in self.sorted_terms().into_iter().enumerate() {
            let (negative, mag) = sign_split(c);
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = monomial_text(dag, ann);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else if mag.is_atomic() {
                write!(f, "{mag} {mono}")?;
            } else {
                write!(f, "({mag}) {mono}")?;
            }
        }
        Ok(())
    }
}
