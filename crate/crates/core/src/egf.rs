//! Truncated power series over exact rationals and the exponential
//! generating function of the weighted two-colour line graphs:
//!
//! ```text
//! G(x) = exp(Σ_m L_m x^m/m! ∂_y^m) exp(Σ_s V_s y^s/s!) |_{y=0}
//! ```

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn factorial_q(n: usize) -> BigRational {
    BigRational::from_integer(factorial(n))
}

/// c_0 + c_1 x + … + c_N x^N, everything above order N discarded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    /// Series with `n! c_n = values[n]`.
    pub fn from_egf_values(values: &[BigRational], order: usize) -> Self {
        let coeffs = values
            .iter()
            .enumerate()
            .map(|(n, v)| v / factorial_q(n))
            .collect();
        TruncatedSeries::from_coeffs(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    /// `[0! c_0, 1! c_1, …, N! c_N]`
    pub fn egf_values(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * factorial_q(n))
            .collect()
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .map(|k| &self.coeffs[k] * &rhs.coeffs[n - k])
                    .fold(BigRational::zero(), |acc, t| acc + t)
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// `exp(S)` for `S` with zero constant term, via `n f_n = Σ_{k=1}^n k s_k f_{n−k}`.
pub fn series_exp(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !s.coeffs[0].is_zero() {
        return Err(Error::InvalidArgument(format!(
            "exp needs a zero constant term, got {}",
            s.coeffs[0]
        )));
    }
    let order = s.order();
    let mut f = vec![BigRational::zero(); order + 1];
    f[0] = BigRational::one();
    for n in 1..=order {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            if !s.coeffs[k].is_zero() {
                acc += &s.coeffs[k] * BigRational::from_integer(k.into()) * &f[n - k];
            }
        }
        f[n] = acc / BigRational::from_integer(n.into());
    }
    Ok(TruncatedSeries { coeffs: f })
}

/// `log(S)` for `S` with constant term 1, via `n g_n = n s_n − Σ_{k=1}^{n−1} k g_k s_{n−k}`.
pub fn series_log(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !s.coeffs[0].is_one() {
        return Err(Error::InvalidArgument(format!(
            "log needs constant term 1, got {}",
            s.coeffs[0]
        )));
    }
    let order = s.order();
    let mut g = vec![BigRational::zero(); order + 1];
    for n in 1..=order {
        let nq = BigRational::from_integer(n.into());
        let mut acc = &nq * &s.coeffs[n];
        for k in 1..n {
            acc -= BigRational::from_integer(k.into()) * &g[k] * &s.coeffs[n - k];
        }
        g[n] = acc / nq;
    }
    Ok(TruncatedSeries { coeffs: g })
}

/// Weights `W_1, W_2, …` attached to dots by the number of lines they carry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeightSpec {
    /// `W_s = 1`
    Ones,
    /// `W_s = s!`
    Factorial,
    /// `W_s = 1` for `s = m`, else 0; `m ≥ 1`
    DeltaAt(usize),
    /// `W_s = list[s − 1]`, zero past the end
    Explicit(Vec<BigRational>),
}

impl WeightSpec {
    pub fn delta_at(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::WeightSpec("delta:0 (weights start at 1)".into()));
        }
        Ok(WeightSpec::DeltaAt(m))
    }

    /// `W_s`; index 0 is always 0.
    pub fn weight(&self, s: usize) -> BigRational {
        if s == 0 {
            return BigRational::zero();
        }
        match self {
            WeightSpec::Ones => BigRational::one(),
            WeightSpec::Factorial => factorial_q(s),
            WeightSpec::DeltaAt(m) if *m == s => BigRational::one(),
            WeightSpec::DeltaAt(_) => BigRational::zero(),
            WeightSpec::Explicit(list) => list.get(s - 1).cloned().unwrap_or_default(),
        }
    }

    pub fn is_integral(&self) -> bool {
        match self {
            WeightSpec::Explicit(list) => list.iter().all(BigRational::is_integer),
            _ => true,
        }
    }
}

impl FromStr for WeightSpec {
    type Err = Error;

    /// `ones` | `factorial` | `delta:m` | comma-separated rationals such as `1,0,1/2`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        match t {
            "ones" => return Ok(WeightSpec::Ones),
            "factorial" => return Ok(WeightSpec::Factorial),
            _ => {}
        }
        if let Some(m) = t.strip_prefix("delta:") {
            let m: usize = m
                .trim()
                .parse()
                .map_err(|_| Error::WeightSpec(text.to_string()))?;
            return WeightSpec::delta_at(m);
        }
        let list = t
            .split(',')
            .map(|item| BigRational::from_str(item.trim()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::WeightSpec(text.to_string()))?;
        Ok(WeightSpec::Explicit(list))
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSpec::Ones => f.write_str("ones"),
            WeightSpec::Factorial => f.write_str("factorial"),
            WeightSpec::DeltaAt(m) => write!(f, "delta:{m}"),
            WeightSpec::Explicit(list) => {
                let items: Vec<String> = list.iter().map(ToString::to_string).collect();
                f.write_str(&items.join(","))
            }
        }
    }
}

/// `Σ_{s≥1} W_s x^s / s!` to order `order`.
pub fn weight_series(w: &WeightSpec, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order).map(|s| w.weight(s) / factorial_q(s)).collect();
    TruncatedSeries { coeffs }
}

/// Coefficients of x^i y^j on an `(nx+1) × (ny+1)` grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    grid: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    pub fn zero(nx: usize, ny: usize) -> Self {
        BivariateSeries {
            grid: vec![vec![BigRational::zero(); ny + 1]; nx + 1],
        }
    }

    /// Embeds a series in `y` as the x^0 row.
    pub fn from_y_series(s: &TruncatedSeries, nx: usize) -> Self {
        let mut b = BivariateSeries::zero(nx, s.order());
        b.grid[0] = s.coeffs.clone();
        b
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.grid.len() - 1, self.grid[0].len() - 1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.grid[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.grid.iter().flatten().all(Zero::is_zero)
    }

    /// Applies `Σ_m L_m x^m/m! ∂_y^m`. The operator keeps `i + j` fixed on
    /// each term, so entries with `i + j ≤ min(nx, ny)` stay exact.
    pub fn apply_line_operator(&self, l: &WeightSpec) -> BivariateSeries {
        let (nx, ny) = self.orders();
        let multipliers: Vec<BigRational> =
            (0..=nx).map(|m| l.weight(m) / factorial_q(m)).collect();
        let mut out = BivariateSeries::zero(nx, ny);
        for i in 1..=nx {
            for j in 0..=ny {
                let mut acc = BigRational::zero();
                for m in 1..=i {
                    if multipliers[m].is_zero() || j + m > ny {
                        continue;
                    }
                    let src = &self.grid[i - m][j + m];
                    if src.is_zero() {
                        continue;
                    }
                    // ∂_y^m y^{j+m} = (j+m)!/j! y^j
                    let falling = BigRational::from_integer(factorial(j + m) / factorial(j));
                    acc += &multipliers[m] * falling * src;
                }
                out.grid[i][j] = acc;
            }
        }
        out
    }

    pub fn scaled(&self, factor: &BigRational) -> BivariateSeries {
        BivariateSeries {
            grid: self
                .grid
                .iter()
                .map(|row| row.iter().map(|c| c * factor).collect())
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &BivariateSeries) {
        for (row, orow) in self.grid.iter_mut().zip(&other.grid) {
            for (c, o) in row.iter_mut().zip(orow) {
                *c += o;
            }
        }
    }

    /// The series in `x` obtained by setting `y = 0`.
    pub fn at_y_zero(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.grid.iter().map(|row| row[0].clone()).collect(),
        }
    }
}

/// The graph EGF to order `order` in x. The exponential of the line
/// operator is summed term by term; each application raises the x-degree by
/// at least one, so `order` applications exhaust it.
pub fn graph_egf(v: &WeightSpec, l: &WeightSpec, order: usize) -> TruncatedSeries {
    let vertex = series_exp(&weight_series(v, order)).expect("weight series has no constant term");
    let mut term = BivariateSeries::from_y_series(&vertex, order);
    let mut total = term.clone();
    for j in 1..=order {
        term = term
            .apply_line_operator(l)
            .scaled(&BigRational::new(BigInt::one(), BigInt::from(j)));
        if term.is_zero() {
            break;
        }
        total.add_assign(&term);
    }
    total.at_y_zero()
}

/// `n! c_n`.
pub fn egf_coefficient(s: &TruncatedSeries, n: usize) -> Result<BigRational> {
    if n > s.order() {
        return Err(Error::OutOfRange {
            index: n,
            order: s.order(),
        });
    }
    Ok(&s.coeffs[n] * factorial_q(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn bell_egf_by_exp() {
        let s = series_exp(&weight_series(&WeightSpec::Ones, 7)).unwrap();
        assert_eq!(s.egf_values(), ints(&[1, 1, 2, 5, 15, 52, 203, 877]));
        assert_eq!(egf_coefficient(&s, 7).unwrap(), q(877));
        assert_eq!(egf_coefficient(&s, 0).unwrap(), q(1));
        assert!(matches!(
            egf_coefficient(&s, 8),
            Err(Error::OutOfRange { index: 8, order: 7 })
        ));
    }

    #[test]
    fn exp_and_log_edge_cases() {
        assert_eq!(
            series_exp(&TruncatedSeries::zero(5)).unwrap(),
            TruncatedSeries::one(5)
        );
        assert_eq!(
            series_log(&TruncatedSeries::one(5)).unwrap(),
            TruncatedSeries::zero(5)
        );
        assert!(series_exp(&TruncatedSeries::one(3)).is_err());
        assert!(series_log(&TruncatedSeries::zero(3)).is_err());
    }

    #[test]
    fn log_of_bell_egf_is_exp_minus_one() {
        let bell = series_exp(&weight_series(&WeightSpec::Ones, 10)).unwrap();
        let c = series_log(&bell).unwrap();
        let mut expected = vec![0];
        expected.extend(std::iter::repeat_n(1, 10));
        assert_eq!(c.egf_values(), ints(&expected));
    }

    #[test]
    fn log_of_exp_x_over_one_minus_x() {
        let g = series_exp(&weight_series(&WeightSpec::Factorial, 8)).unwrap();
        let c = series_log(&g).unwrap();
        let expected: Vec<BigRational> = (0..=8)
            .map(|n| {
                if n == 0 {
                    q(0)
                } else {
                    BigRational::from_integer(factorial(n))
                }
            })
            .collect();
        assert_eq!(c.egf_values(), expected);
        assert_eq!(series_exp(&c).unwrap(), g);
    }

    #[test]
    fn weight_series_presets() {
        let ones = weight_series(&WeightSpec::Ones, 5);
        let expected: Vec<BigRational> = (0..=5)
            .map(|n| {
                if n == 0 {
                    q(0)
                } else {
                    BigRational::new(1.into(), factorial(n))
                }
            })
            .collect();
        assert_eq!(ones.coeffs(), expected.as_slice());
        let fact = weight_series(&WeightSpec::Factorial, 5);
        assert_eq!(fact.coeffs(), ints(&[0, 1, 1, 1, 1, 1]).as_slice());
        let delta = weight_series(&WeightSpec::DeltaAt(1), 5);
        assert_eq!(delta.coeffs(), ints(&[0, 1, 0, 0, 0, 0]).as_slice());
    }

    #[test]
    fn weight_spec_parsing() {
        assert_eq!("ones".parse::<WeightSpec>().unwrap(), WeightSpec::Ones);
        assert_eq!(
            "factorial".parse::<WeightSpec>().unwrap(),
            WeightSpec::Factorial
        );
        assert_eq!(
            "delta:3".parse::<WeightSpec>().unwrap(),
            WeightSpec::DeltaAt(3)
        );
        assert_eq!(
            "1, 0,1/2".parse::<WeightSpec>().unwrap(),
            WeightSpec::Explicit(vec![q(1), q(0), BigRational::new(1.into(), 2.into())])
        );
        assert!("delta:0".parse::<WeightSpec>().is_err());
        assert!("delta:x".parse::<WeightSpec>().is_err());
        assert!("1,,2".parse::<WeightSpec>().is_err());
        assert!("bogus".parse::<WeightSpec>().is_err());
        let spec: WeightSpec = "2,1/3".parse().unwrap();
        assert_eq!(spec.to_string(), "2,1/3");
        assert_eq!(spec.weight(0), q(0));
        assert_eq!(spec.weight(3), q(0));
        assert!(!spec.is_integral());
    }

    #[test]
    fn graph_egf_bell_preset() {
        let g = graph_egf(&WeightSpec::Ones, &WeightSpec::DeltaAt(1), 7);
        assert_eq!(g.egf_values(), ints(&[1, 1, 2, 5, 15, 52, 203, 877]));
    }

    #[test]
    fn graph_egf_ones_ones_order_two() {
        let g = graph_egf(&WeightSpec::Ones, &WeightSpec::Ones, 2);
        assert_eq!(g.egf_values(), ints(&[1, 1, 4]));
    }

    #[test]
    fn graph_egf_zero_order() {
        let g = graph_egf(&WeightSpec::Ones, &WeightSpec::Ones, 0);
        assert_eq!(g.egf_values(), ints(&[1]));
    }

    #[test]
    fn delta_one_line_operator_is_substitution() {
        let specs = [
            WeightSpec::Ones,
            WeightSpec::Factorial,
            WeightSpec::Explicit(vec![q(2), BigRational::new(1.into(), 3.into()), q(0), q(5)]),
        ];
        for v in &specs {
            assert_eq!(
                graph_egf(v, &WeightSpec::DeltaAt(1), 9),
                series_exp(&weight_series(v, 9)).unwrap(),
                "V = {v}"
            );
        }
    }

    #[test]
    fn bivariate_operator_shape() {
        let y = TruncatedSeries::from_coeffs(ints(&[0, 0, 1]), 2);
        let b = BivariateSeries::from_y_series(&y, 2);
        assert_eq!(b.orders(), (2, 2));
        // x d/dy (y^2) = 2 x y
        let d = b.apply_line_operator(&WeightSpec::DeltaAt(1));
        assert_eq!(d.coeff(1, 1), &q(2));
        assert_eq!(d.coeff(0, 2), &q(0));
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-5i64..6, 1i64..5), 6).prop_map(|v| {
            let mut coeffs: Vec<BigRational> = v
                .into_iter()
                .map(|(n, d)| BigRational::new(n.into(), d.into()))
                .collect();
            coeffs[0] = BigRational::zero();
            TruncatedSeries::from_coeffs(coeffs, 5)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exp_log_inverse(s in arb_series()) {
            let e = series_exp(&s).unwrap();
            prop_assert_eq!(series_log(&e).unwrap(), s.clone());
            let shifted = &s + &TruncatedSeries::one(5);
            prop_assert_eq!(series_exp(&series_log(&shifted).unwrap()).unwrap(), shifted);
        }

        #[test]
        fn exp_is_multiplicative(a in arb_series(), b in arb_series()) {
            let lhs = series_exp(&(&a + &b)).unwrap();
            let rhs = &series_exp(&a).unwrap() * &series_exp(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integer_weights_give_integer_counts(w in proptest::collection::vec(0i64..4, 1..6),
                                               l in proptest::collection::vec(0i64..4, 1..6)) {
            let v = WeightSpec::Explicit(ints(&w));
            let l = WeightSpec::Explicit(ints(&l));
            for g in graph_egf(&v, &l, 7).egf_values() {
                prop_assert!(g.is_integer());
            }
        }
    }
}
