//! Exact coefficients: big integers, or polynomials in a formal parameter `q`
//! with big-integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
///
/// Trailing zeros are never stored, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::new(vec![c])
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        QPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * q + bigint_to_f64(c))
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        QPoly::new(out)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPoly {
    /// Descending powers, e.g. `q^2 + 2 q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign_neg = c.is_negative();
            if first {
                if sign_neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if sign_neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match power {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag} q")?,
                _ if unit => write!(f, "q^{power}")?,
                _ => write!(f, "{mag} q^{power}")?,
            }
        }
        Ok(())
    }
}

/// Exact coefficient of a normal-ordered monomial.
///
/// A q-polynomial that is a constant is always stored as `Int`, so equality
/// is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Int(BigInt),
    QPoly(QPoly),
}

impl Coefficient {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Coefficient::Int(v.into())
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        Coefficient::QPoly(QPoly::q())
    }

    pub fn from_qpoly(p: QPoly) -> Self {
        match p.as_constant() {
            Some(c) => Coefficient::Int(c),
            None => Coefficient::QPoly(p),
        }
    }

    pub fn to_qpoly(&self) -> QPoly {
        match self {
            Coefficient::Int(c) => QPoly::constant(c.clone()),
            Coefficient::QPoly(p) => p.clone(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Coefficient::Int(c) => Some(c),
            Coefficient::QPoly(_) => None,
        }
    }

    pub fn is_q_dependent(&self) -> bool {
        matches!(self, Coefficient::QPoly(_))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        match self {
            Coefficient::Int(c) => c.clone(),
            Coefficient::QPoly(p) => p.eval_one(),
        }
    }

    /// Whether this coefficient prints as a single factor (no parentheses needed).
    pub(crate) fn is_atomic(&self) -> bool {
        match self {
            Coefficient::Int(_) => true,
            Coefficient::QPoly(p) => p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1,
        }
    }
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Coefficient::Int(BigInt::zero())
    }

    fn is_zero(&self) -> bool {
        match self {
            Coefficient::Int(c) => c.is_zero(),
            Coefficient::QPoly(p) => p.is_zero(),
        }
    }
}

impl One for Coefficient {
    fn one() -> Self {
        Coefficient::Int(BigInt::one())
    }
}

impl Add<&Coefficient> for &Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Coefficient::Int(a + b),
            _ => Coefficient::from_qpoly(&self.to_qpoly() + &rhs.to_qpoly()),
        }
    }
}

impl Add for Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        if let (Coefficient::Int(a), Coefficient::Int(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl Mul<&Coefficient> for &Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Coefficient::Int(a * b),
            _ => Coefficient::from_qpoly(&self.to_qpoly() * &rhs.to_qpoly()),
        }
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Int(c) => Coefficient::Int(-c),
            Coefficient::QPoly(p) => Coefficient::QPoly(-p),
        }
    }
}

impl From<BigInt> for Coefficient {
    fn from(v: BigInt) -> Self {
        Coefficient::Int(v)
    }
}

impl From<i64> for Coefficient {
    fn from(v: i64) -> Self {
        Coefficient::Int(BigInt::from(v))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Int(c) => write!(f, "{c}"),
            Coefficient::QPoly(p) => write!(f, "{p}"),
        }
    }
}

pub(crate) fn bigint_to_f64(v: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(v).unwrap_or(if v.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}
