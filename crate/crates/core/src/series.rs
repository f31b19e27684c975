//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `N` stores the coefficients of `x^0 ..= x^N`; everything
//! above `x^N` is unknown rather than zero. Binary operations therefore return
//! the smaller of the two operand orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coefficient::{self, Coefficient};
use crate::error::{Error, Result};
use crate::real::{check_precision, Real};

/// Membership of a series in the subsets used by the Riordan group.
///
/// `H` is the multiplicative group (nonzero constant term), `V` the series
/// without constant term, and `K ⊂ V` those that also have a nonzero linear
/// term, i.e. the series invertible under composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesClass {
    H,
    K,
    /// Zero constant and zero linear term.
    V,
    /// Order 0 with a zero constant term: membership in `K` cannot be decided.
    General,
}

impl SeriesClass {
    pub fn is_h(self) -> bool {
        self == SeriesClass::H
    }

    pub fn is_k(self) -> bool {
        self == SeriesClass::K
    }

    /// `K` is a subset of `V`.
    pub fn is_v(self) -> bool {
        matches!(self, SeriesClass::K | SeriesClass::V)
    }
}

impl fmt::Display for SeriesClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesClass::H => "H",
            SeriesClass::K => "K",
            SeriesClass::V => "V",
            SeriesClass::General => "general",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Coefficient>,
}

impl TruncatedSeries {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Coefficient>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Format("a series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| coefficient::int(v)).collect())
    }

    /// From `(numerator, denominator)` pairs.
    pub fn from_ratios(values: &[(i64, i64)]) -> Result<Self> {
        Self::new(values.iter().map(|&(n, d)| coefficient::ratio(n, d)).collect())
    }

    /// Builds the order-`order` prefix from a coefficient rule.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Coefficient) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Coefficient::ZERO)
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0)
    }

    /// The series `x`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(order, 1)
    }

    /// `x^k` truncated at `order` (all zeros if `k > order`).
    pub fn monomial(order: usize, k: usize) -> Self {
        Self::from_fn(order, |n| if n == k { Coefficient::ONE } else { Coefficient::ZERO })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<Coefficient> {
        self.coeffs
    }

    /// Coefficient of `x^n`. Panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &Coefficient {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&Coefficient> {
        self.coeffs.get(n)
    }

    /// Keeps coefficients `0..=order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder { required: order, available: self.order() });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn classify(&self) -> SeriesClass {
        if !self.coeffs[0].is_zero() {
            SeriesClass::H
        } else if self.order() == 0 {
            SeriesClass::General
        } else if !self.coeffs[1].is_zero() {
            SeriesClass::K
        } else {
            SeriesClass::V
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| &self.coeffs[n] + &other.coeffs[n])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| &self.coeffs[n] - &other.coeffs[n])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |n| -&self.coeffs[n])
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::from_fn(self.order(), |n| &self.coeffs[n] * c)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| {
            let mut acc = Coefficient::ZERO;
            for m in 0..=n {
                if self.coeffs[m].is_zero() || other.coeffs[n - m].is_zero() {
                    continue;
                }
                acc += &self.coeffs[m] * &other.coeffs[n - m];
            }
            acc
        })
    }

    /// Multiplicative inverse, from `Σ_m f_m r_{n-m} = [n = 0]` solved
    /// for one coefficient at a time.
    pub fn reciprocal(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = coefficient::recip(f0);
        let mut r: Vec<Coefficient> = Vec::with_capacity(self.coeffs.len());
        r.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = Coefficient::ZERO;
            for m in 1..=n {
                if self.coeffs[m].is_zero() {
                    continue;
                }
                acc += &self.coeffs[m] * &r[n - m];
            }
            r.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    /// `self ∘ inner`, i.e. `f(g(x))`, by Horner's rule in powers of `g`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let g = inner.truncate(order)?;
        let mut acc = Self::zero(order);
        for n in (0..=order).rev() {
            acc = acc.multiply(&g);
            acc.coeffs[0] += &self.coeffs[n];
        }
        Ok(acc)
    }

    /// The series `ḡ` with `g(ḡ(x)) = ḡ(g(x)) = x` through the order.
    ///
    /// `ḡ_1 = 1/g_1`, and for `n ≥ 2` the coefficient of `x^n` in `g(ḡ)`
    /// is `g_1 ḡ_n + Σ_{m≥2} g_m [x^n] ḡ^m`, where the sum involves only
    /// `ḡ_1 ..= ḡ_{n-1}`. Powers of `ḡ` are extended one column at a time.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInK { index: 0, reason: "must be zero" });
        }
        if self.order() == 0 || self.coeffs[1].is_zero() {
            return Err(Error::NotInK { index: 1, reason: "must be nonzero" });
        }
        let order = self.order();
        let inv_g1 = coefficient::recip(&self.coeffs[1]);
        let mut inv = vec![Coefficient::ZERO; order + 1];
        inv[1] = inv_g1.clone();
        // powers[m][j] = [x^j] ḡ^m for m >= 1; column j is filled once ḡ_j is known.
        let mut powers = vec![vec![Coefficient::ZERO; order + 1]; order + 1];
        powers[1][1] = inv_g1.clone();
        for m in 2..=order {
            powers[m][m] = &powers[m - 1][m - 1] * &inv_g1;
        }
        for n in 2..=order {
            // Column n of ḡ^m for m >= 2 uses ḡ_1 ..= ḡ_{n-1} only.
            for m in 2..n {
                let mut acc = Coefficient::ZERO;
                for j in 1..=(n - m + 1) {
                    acc += &inv[j] * &powers[m - 1][n - j];
                }
                powers[m][n] = acc;
            }
            let mut acc = Coefficient::ZERO;
            for m in 2..=n {
                acc += &self.coeffs[m] * &powers[m][n];
            }
            inv[n] = -(acc * &inv_g1);
            powers[1][n] = inv[n].clone();
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `self^d` for any integer `d`; negative exponents go through the reciprocal.
    pub fn power(&self, d: i64) -> Result<Self> {
        let base = if d < 0 { self.reciprocal()? } else { self.clone() };
        let mut e = d.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.multiply(&sq);
            }
        }
        Ok(result)
    }

    /// Horner evaluation of the truncated polynomial at `x`, every step
    /// rounded to `precision_bits`.
    pub fn eval_float(&self, x: &Real, precision_bits: usize) -> Result<Real> {
        check_precision(precision_bits)?;
        let x = x.with_precision(precision_bits);
        let mut acc = Real::zero(precision_bits);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(&Real::from_rational(c, precision_bits));
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialize series")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<String> =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("expected a JSON array of strings: {e}")))?;
        let coeffs = raw
            .iter()
            .enumerate()
            .map(|(i, s)| coefficient::parse(s, i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        coefficient::serde_list::serialize(&self.coeffs, ser)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let coeffs = coefficient::serde_list::deserialize(de)?;
        TruncatedSeries::new(coeffs).map_err(serde::de::Error::custom)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.multiply(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}
