//! Exact integers, rationals, dense polynomials and truncated power series.
//!
//! Integers and rationals are the `num` big-number types; everything built on
//! top of them (polynomials, series, the product-form expansion) lives here.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Reduced rational with positive denominator.
pub type ExactRat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("product-form exponent must be positive, got {0}")]
    NonPositiveExponent(ExactInt),
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &ExactInt, b: &ExactInt) -> ExactInt {
    a.gcd(b)
}

pub fn lcm(a: &ExactInt, b: &ExactInt) -> ExactInt {
    a.lcm(b)
}

pub(crate) fn to_usize(x: &ExactInt) -> Option<usize> {
    x.to_usize()
}

/// Dense univariate polynomial with integer coefficients, indexed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DensePoly {
    coeffs: Vec<ExactInt>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly {
            coeffs: vec![ExactInt::one()],
        }
    }

    /// `1 - q^e`. For `e = 0` this is the zero polynomial.
    pub fn one_minus_q_pow(e: usize) -> Self {
        let mut coeffs = vec![ExactInt::zero(); e + 1];
        coeffs[0] += 1;
        coeffs[e] -= 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactInt> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> ExactInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficient list read backwards (leading zeros of the result are
    /// dropped by normalization).
    pub fn reverse(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn eval_at_one(&self) -> ExactInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        is_palindromic(self)
    }

    pub fn is_unimodal(&self) -> bool {
        is_unimodal(self)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;

    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![ExactInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Formal power series known exactly through degree `M`.
///
/// Equality compares coefficients only through the smaller of the two
/// truncation degrees, so it is not transitive across mixed truncations.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactInt>,
}

impl TruncatedSeries {
    /// Panics if `coeffs` is empty; a series always knows at least `c_0`.
    pub fn from_coeffs(coeffs: Vec<ExactInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(truncation_degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ExactInt::zero(); truncation_degree + 1],
        }
    }

    pub fn one(truncation_degree: usize) -> Self {
        let mut s = Self::zero(truncation_degree);
        s.coeffs[0] = ExactInt::one();
        s
    }

    pub fn from_poly(p: &DensePoly, truncation_degree: usize) -> Self {
        let mut s = Self::zero(truncation_degree);
        for (i, c) in p.coeffs().iter().take(truncation_degree + 1).enumerate() {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &ExactInt {
        &self.coeffs[i]
    }

    pub fn truncate(&self, truncation_degree: usize) -> Self {
        let keep = truncation_degree.min(self.truncation_degree()) + 1;
        TruncatedSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// The known coefficients as a polynomial.
    pub fn to_poly(&self) -> DensePoly {
        DensePoly::new(self.coeffs.clone())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn mul_poly(&self, p: &DensePoly) -> Self {
        let m = self.truncation_degree();
        let mut out = vec![ExactInt::zero(); m + 1];
        for (j, b) in p.coeffs().iter().enumerate().take(m + 1) {
            if b.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs[..=m - j].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn mul_series(&self, other: &TruncatedSeries) -> Self {
        let m = self.truncation_degree().min(other.truncation_degree());
        let lhs = self.truncate(m);
        lhs.mul_poly(&other.truncate(m).to_poly())
    }

    /// In-place multiplication by `1 - q^e`.
    pub fn mul_one_minus_q_pow(&mut self, e: usize) {
        if e == 0 {
            self.coeffs.iter_mut().for_each(|c| *c = ExactInt::zero());
            return;
        }
        for i in (e..self.coeffs.len()).rev() {
            let (head, tail) = self.coeffs.split_at_mut(i);
            tail[0] -= &head[i - e];
        }
    }

    /// In-place division by `1 - q^e`, `e >= 1`: a prefix sum with stride `e`.
    pub fn div_one_minus_q_pow(&mut self, e: usize) {
        assert!(e >= 1, "division by 1 - q^0 is undefined");
        for i in e..self.coeffs.len() {
            let (head, tail) = self.coeffs.split_at_mut(i);
            tail[0] += &head[i - e];
        }
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        let m = self.truncation_degree().min(other.truncation_degree());
        self.coeffs[..=m] == other.coeffs[..=m]
    }
}

/// Coefficientwise convolution of `s` and `p`, truncated at `s`'s degree.
pub fn series_mul_poly(s: &TruncatedSeries, p: &DensePoly) -> TruncatedSeries {
    s.mul_poly(p)
}

/// Coefficients of `prod_i 1/(1 - q^{e_i})` through degree `m`.
pub fn product_form_series(
    exponents: &[ExactInt],
    m: usize,
) -> Result<TruncatedSeries, ArithError> {
    if let Some(bad) = exponents.iter().find(|e| !e.is_positive()) {
        return Err(ArithError::NonPositiveExponent(bad.clone()));
    }
    let mut series = TruncatedSeries::one(m);
    for e in exponents {
        // Exponents beyond the truncation degree act as the identity.
        if let Some(e) = to_usize(e).filter(|&e| e <= m) {
            series.div_one_minus_q_pow(e);
        }
    }
    Ok(series)
}

/// `prod_i (1 - q^{e_i})` for positive machine-size exponents.
pub fn product_of_one_minus(exponents: &[usize]) -> DensePoly {
    exponents.iter().fold(DensePoly::one(), |acc, &e| {
        &acc * &DensePoly::one_minus_q_pow(e)
    })
}

pub fn is_palindromic(p: &DensePoly) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

/// Weakly rising, then weakly falling.
pub fn is_unimodal(p: &DensePoly) -> bool {
    let c = p.coeffs();
    let mut i = 1;
    while i < c.len() && c[i] >= c[i - 1] {
        i += 1;
    }
    while i < c.len() && c[i] <= c[i - 1] {
        i += 1;
    }
    i >= c.len()
}
