//! Exact rational coefficients and their `"p/q"` text form.

use dashu_int::{ops::UnsignedAbs, IBig, UBig};
use dashu_ratio::RBig;

use crate::error::{Error, Result};

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Coefficient = RBig;

pub fn int(n: i64) -> Coefficient {
    RBig::from(IBig::from(n))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Coefficient {
    RBig::from_parts_signed(IBig::from(num), IBig::from(den))
}

/// `1 / c`. Panics if `c` is zero.
pub fn recip(c: &Coefficient) -> Coefficient {
    Coefficient::ONE / c
}

/// Renders `p/q`, or just `p` for integers.
pub fn format(c: &Coefficient) -> String {
    if c.denominator().is_one() {
        c.numerator().to_string()
    } else {
        format!("{}/{}", c.numerator(), c.denominator())
    }
}

/// Parses `"p/q"`, `"-p/q"` or an integer. `index` is reported on failure.
pub fn parse(s: &str, index: usize) -> Result<Coefficient> {
    let s = s.trim();
    let err = |message: String| Error::Parse { index, message };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: IBig = num
        .parse()
        .map_err(|_| err(format!("invalid numerator in {s:?}")))?;
    let den: IBig = den
        .parse()
        .map_err(|_| err(format!("invalid denominator in {s:?}")))?;
    if den == IBig::ZERO {
        return Err(err(format!("zero denominator in {s:?}")));
    }
    Ok(RBig::from_parts_signed(num, den))
}

/// Sign and magnitude of the numerator.
pub(crate) fn numerator_words(c: &Coefficient) -> (bool, UBig) {
    let n = c.numerator();
    (n < &IBig::ZERO, n.unsigned_abs())
}

/// Serde adapter for a list of coefficients as a JSON array of strings.
pub mod serde_list {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Coefficient], ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(values.iter().map(format))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<Coefficient>, D::Error> {
        let raw = Vec::<String>::deserialize(de)?;
        raw.iter()
            .enumerate()
            .map(|(i, s)| parse(s, i).map_err(de::Error::custom))
            .collect()
    }
}
