//! Binary floating-point values of caller-chosen precision, used only for
//! reporting how exact partial sums approach their limits.
//!
//! Values are backed by `astro_float::BigFloat`. Exact rationals convert with a
//! single rounding (numerator and denominator are rebuilt exactly first).

use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use dashu_int::UBig;

use crate::coefficient::{numerator_words, Coefficient};
use crate::error::{Error, Result};

/// Smallest precision accepted by the public constructors.
pub const MIN_PRECISION_BITS: usize = 64;

const RM: RoundingMode = RoundingMode::ToEven;

fn consts() -> Consts {
    Consts::new().expect("allocate astro-float constant cache")
}

pub fn check_precision(bits: usize) -> Result<()> {
    if bits < MIN_PRECISION_BITS {
        return Err(Error::InvalidParameters(format!(
            "precision_bits must be at least {MIN_PRECISION_BITS}, got {bits}"
        )));
    }
    Ok(())
}

/// A real number carried at a fixed number of mantissa bits.
#[derive(Debug, Clone)]
pub struct Real {
    value: BigFloat,
    bits: usize,
}

impl Real {
    fn wrap(value: BigFloat, bits: usize) -> Self {
        Real { value, bits }
    }

    pub fn zero(bits: usize) -> Self {
        Self::wrap(BigFloat::from_word(0, bits), bits)
    }

    pub fn from_i64(n: i64, bits: usize) -> Self {
        Self::wrap(BigFloat::from_i64(n, bits), bits)
    }

    /// Rounds an exact rational to `bits` bits, correctly rounded.
    pub fn from_rational(r: &Coefficient, bits: usize) -> Self {
        let (negative, magnitude) = numerator_words(r);
        let mut num = exact_integer(&magnitude);
        if negative {
            num.set_sign(Sign::Neg);
        }
        let den = exact_integer(r.denominator());
        Self::wrap(num.div(&den, bits, RM), bits)
    }

    /// Parses a decimal literal such as `"0.5772156649"` or `"1.5e-3"`.
    pub fn parse(s: &str, bits: usize) -> Result<Self> {
        let v = BigFloat::parse(s, Radix::Dec, bits, RM, &mut consts());
        if v.is_nan() {
            return Err(Error::Format(format!("not a decimal number: {s:?}")));
        }
        Ok(Self::wrap(v, bits))
    }

    pub fn precision_bits(&self) -> usize {
        self.bits
    }

    /// Re-rounds to a different precision.
    pub fn with_precision(&self, bits: usize) -> Self {
        let mut v = self.value.clone();
        v.set_precision(bits, RM).expect("set precision");
        Self::wrap(v, bits)
    }

    fn joint(&self, other: &Real) -> usize {
        self.bits.max(other.bits)
    }

    pub fn add(&self, other: &Real) -> Real {
        let p = self.joint(other);
        Self::wrap(self.value.add(&other.value, p, RM), p)
    }

    pub fn sub(&self, other: &Real) -> Real {
        let p = self.joint(other);
        Self::wrap(self.value.sub(&other.value, p, RM), p)
    }

    pub fn mul(&self, other: &Real) -> Real {
        let p = self.joint(other);
        Self::wrap(self.value.mul(&other.value, p, RM), p)
    }

    pub fn div(&self, other: &Real) -> Real {
        let p = self.joint(other);
        Self::wrap(self.value.div(&other.value, p, RM), p)
    }

    pub fn abs(&self) -> Real {
        Self::wrap(self.value.abs(), self.bits)
    }

    pub fn exp(&self) -> Real {
        Self::wrap(self.value.exp(self.bits, RM, &mut consts()), self.bits)
    }

    pub fn ln(&self) -> Real {
        Self::wrap(self.value.ln(self.bits, RM, &mut consts()), self.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    /// Binary exponent `e` such that `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.value.is_zero() {
            None
        } else {
            self.value.exponent()
        }
    }

    /// Nearest `f64`, for coarse comparisons only.
    pub fn to_f64(&self) -> f64 {
        self.to_scientific(20).parse().unwrap_or(f64::NAN)
    }

    /// Number of decimal digits this precision carries.
    pub fn decimal_digits(&self) -> usize {
        ((self.bits as f64) * std::f64::consts::LOG10_2).floor() as usize
    }

    /// Scientific notation `d.ddd…e±x` rounded to `digits` significant digits.
    pub fn to_scientific(&self, digits: usize) -> String {
        let (negative, mantissa, exp10) = match self.decimal_parts(digits) {
            Some(p) => p,
            None => return "0".to_string(),
        };
        let sign = if negative { "-" } else { "" };
        let (head, tail) = mantissa.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{exp10}")
        } else {
            format!("{sign}{head}.{tail}e{exp10}")
        }
    }

    /// Decimal rendering with `digits` significant digits: positional for
    /// moderate magnitudes, scientific otherwise.
    pub fn to_decimal(&self, digits: usize) -> String {
        let (negative, mantissa, exp10) = match self.decimal_parts(digits) {
            Some(p) => p,
            None => return "0".to_string(),
        };
        if !(-5..=20).contains(&exp10) {
            return self.to_scientific(digits);
        }
        let sign = if negative { "-" } else { "" };
        let body = if exp10 < 0 {
            format!("0.{}{}", "0".repeat((-exp10 - 1) as usize), mantissa)
        } else {
            let int_len = exp10 as usize + 1;
            if mantissa.len() <= int_len {
                format!("{mantissa}{}", "0".repeat(int_len - mantissa.len()))
            } else {
                format!("{}.{}", &mantissa[..int_len], &mantissa[int_len..])
            }
        };
        format!("{sign}{body}")
    }

    /// Decimal rendering carrying every digit the precision supports.
    pub fn to_full_decimal(&self) -> String {
        self.to_decimal(self.decimal_digits())
    }

    /// Sign, rounded significant digits, and decimal exponent.
    fn decimal_parts(&self, digits: usize) -> Option<(bool, String, i64)> {
        assert!(digits >= 1, "at least one significant digit");
        if self.value.is_zero() {
            return None;
        }
        let text = self
            .value
            .format(Radix::Dec, RM, &mut consts())
            .expect("format BigFloat");
        let negative = text.starts_with('-');
        let text = text.trim_start_matches('-');
        let (mant, exp) = text.split_once('e').unwrap_or((text, "0"));
        let mut exp10: i64 = exp.parse().expect("decimal exponent");
        let raw: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
        // Leading zeros are not expected from BigFloat, but tolerate them.
        let first = raw.iter().position(|&d| d != 0)?;
        exp10 -= first as i64;
        let raw = &raw[first..];

        let mut kept: Vec<u8> = raw.iter().copied().take(digits).collect();
        if raw.len() > digits && raw[digits] >= 5 {
            let mut i = kept.len();
            loop {
                if i == 0 {
                    kept.insert(0, 1);
                    kept.pop();
                    exp10 += 1;
                    break;
                }
                i -= 1;
                if kept[i] == 9 {
                    kept[i] = 0;
                } else {
                    kept[i] += 1;
                    break;
                }
            }
        }
        while kept.len() > 1 && *kept.last().unwrap() == 0 {
            kept.pop();
        }
        let mantissa: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
        Some((negative, mantissa, exp10))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(d) => f.write_str(&self.to_decimal(d.max(1))),
            None => f.write_str(&self.to_full_decimal()),
        }
    }
}

/// Rebuilds an integer without rounding: the working precision covers every limb.
fn exact_integer(n: &UBig) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_word(0, MIN_PRECISION_BITS);
    }
    let radix = BigFloat::from_u128(1u128 << 64, 128);
    let limbs = n.to_le_bytes();
    let mut words = limbs.chunks(8).map(|c| {
        let mut buf = [0u8; 8];
        buf[..c.len()].copy_from_slice(c);
        u64::from_le_bytes(buf)
    }).collect::<Vec<_>>();
    while words.last() == Some(&0) {
        words.pop();
    }
    let mut rev = words.into_iter().rev();
    // Full-precision arithmetic mishandles exact zero operands: start from
    // the leading limb and skip zero limbs.
    let mut acc = BigFloat::from_u64(rev.next().expect("nonzero integer"), 64);
    for limb in rev {
        acc = acc.mul_full_prec(&radix);
        if limb != 0 {
            acc = acc.add_full_prec(&BigFloat::from_u64(limb, 64));
        }
    }
    acc
}

/// `exp(num/den)` at `bits` bits, evaluated at twice the precision (plus
/// guard bits) and then rounded.
pub fn exp_rational(r: &Coefficient, bits: usize) -> Real {
    let wp = 2 * bits + 64;
    Real::from_rational(r, wp).exp().with_precision(bits)
}

/// Euler's constant at `bits` bits by the Brent–McMillan method.
///
/// With `U = Σ A_k`, `V = Σ B_k`, `B_k = (n^k/k!)²`, `A_k = B_k (H_k − ln n)`,
/// the ratio `U/V` differs from the constant by `O(e^{−4n})`. The sums are
/// carried at twice the requested precision plus guard bits, because the
/// alternating growth of the terms cancels roughly half of them.
pub fn euler_gamma(bits: usize) -> Real {
    let wp = 2 * bits + 64;
    let n = ((bits as f64) * std::f64::consts::LN_2 / 4.0).ceil() as u64 + 2;
    let n2 = BigFloat::from_u64(n * n, wp);
    let ln_n = BigFloat::from_u64(n, wp).ln(wp, RM, &mut consts());

    let mut a = ln_n.neg();
    let mut b = BigFloat::from_word(1, wp);
    let mut u = a.clone();
    let mut v = b.clone();
    let mut k: u64 = 1;
    loop {
        let kf = BigFloat::from_u64(k, wp);
        let k2 = BigFloat::from_u64(k * k, wp);
        b = b.mul(&n2, wp, RM).div(&k2, wp, RM);
        a = a.mul(&n2, wp, RM).div(&kf, wp, RM).add(&b, wp, RM).div(&kf, wp, RM);
        u = u.add(&a, wp, RM);
        v = v.add(&b, wp, RM);
        if k > n && negligible(&a, &u, wp) && negligible(&b, &v, wp) {
            break;
        }
        k += 1;
    }
    Real::wrap(u.div(&v, wp, RM), wp).with_precision(bits)
}

fn negligible(term: &BigFloat, total: &BigFloat, wp: usize) -> bool {
    match (term.exponent(), total.exponent()) {
        _ if term.is_zero() => true,
        (Some(t), Some(s)) => (t as i64) < (s as i64) - wp as i64 - 2,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficient::{int, ratio};

    const GAMMA_50: &str = "0.57721566490153286060651209008240243104215933593992";
    const E_50: &str = "2.71828182845904523536028747135266249775724709369995";

    #[test]
    fn rational_conversion_is_correctly_rounded() {
        let third = Real::from_rational(&ratio(1, 3), 128);
        assert_eq!(third.to_decimal(20), "0.33333333333333333333");
        let neg = Real::from_rational(&ratio(-7, 2), 64);
        assert_eq!(Real::from_rational(&ratio(-1, 3), 64).to_decimal(3), "-0.333");
        assert_eq!(neg.to_decimal(5), "-3.5");
        assert_eq!(Real::from_rational(&int(0), 64).to_decimal(5), "0");
    }

    #[test]
    fn integers_with_zero_limbs_convert_exactly() {
        let big: dashu_int::IBig = (dashu_int::IBig::from(3u8) << 200usize) + dashu_int::IBig::from(1u8);
        let r = Coefficient::from(big.clone());
        let x = Real::from_rational(&r, 256);
        assert_eq!(x.to_scientific(70), Real::parse(&big.to_string(), 256).unwrap().to_scientific(70));
    }

    #[test]
    fn big_integers_convert_exactly() {
        let big: dashu_int::IBig = "123456789012345678901234567890123456789".parse().unwrap();
        let r = Coefficient::from(big);
        let x = Real::from_rational(&r, 256);
        assert_eq!(x.to_scientific(39), "1.23456789012345678901234567890123456789e38");
    }

    #[test]
    fn decimal_rounding_carries() {
        let x = Real::parse("0.99996", 128).unwrap();
        assert_eq!(x.to_decimal(4), "1");
        assert_eq!(x.to_scientific(4), "1e0");
        let y = Real::parse("1.2345e-7", 128).unwrap();
        assert_eq!(y.to_decimal(3), "1.23e-7");
        assert_eq!(Real::parse("12345.678", 128).unwrap().to_decimal(6), "12345.7");
    }

    #[test]
    fn gamma_oracle_matches_reference_digits() {
        for bits in [64, 128, 160] {
            let g = euler_gamma(bits);
            let reference = Real::parse(GAMMA_50, 256).unwrap();
            let err = g.sub(&reference).abs();
            let tol = Real::parse(&format!("1e-{}", g.decimal_digits() - 1), 256).unwrap();
            assert!(err < tol, "bits {bits}: {g}");
        }
        assert!(euler_gamma(128).to_decimal(10).starts_with("0.5772156649"));
    }

    #[test]
    fn exp_oracle_matches_reference_digits() {
        let e = exp_rational(&int(1), 160);
        assert_eq!(e.to_decimal(40), Real::parse(E_50, 256).unwrap().to_decimal(40));
        assert!(e.to_decimal(15).starts_with("2.7182818284"));
        let sqrt_e = exp_rational(&ratio(1, 2), 128);
        assert_eq!(sqrt_e.to_decimal(20), "1.6487212707001281468");
    }

    #[test]
    fn precision_floor_is_enforced() {
        assert!(check_precision(63).is_err());
        assert!(check_precision(64).is_ok());
    }
}
