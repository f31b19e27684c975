//! Shared generators and brute-force oracles for the integration tests.
//! The oracles work on plain square `Vec<Vec<_>>` arrays and never call the
//! library's matrix code.

#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use riordan::coefficient::ratio;
use riordan::{Coefficient, KenterTriple, RiordanElement, StandardPair, TruncatedSeries};

pub type Square = Vec<Vec<Coefficient>>;

pub fn coefficient() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_coefficient() -> impl Strategy<Value = Coefficient> {
    (1i64..=6, 1i64..=5, any::<bool>()).prop_map(|(n, d, neg)| ratio(if neg { -n } else { n }, d))
}

pub fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(coefficient(), order + 1).prop_map(|c| TruncatedSeries::new(c).unwrap())
}

/// Nonzero constant term.
pub fn h_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (nonzero_coefficient(), prop::collection::vec(coefficient(), order)).prop_map(|(c0, rest)| {
        let mut c = vec![c0];
        c.extend(rest);
        TruncatedSeries::new(c).unwrap()
    })
}

/// Zero constant term, nonzero linear term.
pub fn k_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (nonzero_coefficient(), prop::collection::vec(coefficient(), order - 1)).prop_map(|(c1, rest)| {
        let mut c = vec![Coefficient::ZERO, c1];
        c.extend(rest);
        TruncatedSeries::new(c).unwrap()
    })
}

/// Zero constant term.
pub fn v_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(coefficient(), order).prop_map(|rest| {
        let mut c = vec![Coefficient::ZERO];
        c.extend(rest);
        TruncatedSeries::new(c).unwrap()
    })
}

pub fn element(order: usize) -> impl Strategy<Value = RiordanElement> {
    (h_series(order), k_series(order)).prop_map(|(f, g)| RiordanElement::new(f, g).unwrap())
}

pub fn standard_pair(order: usize) -> impl Strategy<Value = StandardPair> {
    (h_series(order), k_series(order)).prop_map(|(g, f)| StandardPair::new(g, f).unwrap())
}

// Seeded generators for the acceptance suite.

pub fn rand_coefficient<R: Rng>(rng: &mut R) -> Coefficient {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=5))
}

pub fn rand_nonzero<R: Rng>(rng: &mut R) -> Coefficient {
    let n = rng.gen_range(1..=6);
    ratio(if rng.gen_bool(0.5) { -n } else { n }, rng.gen_range(1..=5))
}

pub fn rand_h<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
    let mut c = vec![rand_nonzero(rng)];
    c.extend((0..order).map(|_| rand_coefficient(rng)));
    TruncatedSeries::new(c).unwrap()
}

pub fn rand_k<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
    let mut c = vec![Coefficient::ZERO, rand_nonzero(rng)];
    c.extend((1..order).map(|_| rand_coefficient(rng)));
    TruncatedSeries::new(c).unwrap()
}

pub fn rand_element<R: Rng>(rng: &mut R, order: usize) -> RiordanElement {
    RiordanElement::new(rand_h(rng, order), rand_k(rng, order)).unwrap()
}

pub fn rand_pair<R: Rng>(rng: &mut R, order: usize) -> StandardPair {
    StandardPair::new(rand_h(rng, order), rand_k(rng, order)).unwrap()
}

pub fn rand_triple<R: Rng>(rng: &mut R, order: usize, d: i64) -> KenterTriple {
    KenterTriple::new(rand_h(rng, order), rand_h(rng, order), rand_h(rng, order), d).unwrap()
}

// Oracles.

pub fn naive_matmul(a: &Square, b: &Square) -> Square {
    let n = a.len();
    let mut out = vec![vec![Coefficient::ZERO; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Coefficient::ZERO;
            for k in 0..n {
                acc += &a[i][k] * &b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn naive_matvec(a: &Square, v: &[Coefficient]) -> Vec<Coefficient> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Coefficient::ZERO, |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn naive_identity(n: usize) -> Square {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Coefficient::ONE } else { Coefficient::ZERO }).collect())
        .collect()
}

/// Dense lower-triangular Toeplitz array of `t`.
pub fn naive_toeplitz(t: &TruncatedSeries, n: usize) -> Square {
    (0..n)
        .map(|i| (0..n).map(|j| if j <= i { t.coeff(i - j).clone() } else { Coefficient::ZERO }).collect())
        .collect()
}

/// Column `m` (1-based) holds coefficients `x^1 ..= x^n` of `G·F^m`,
/// computed by repeated series multiplication.
pub fn standard_columns(p: &StandardPair, n: usize) -> Square {
    let mut out = vec![vec![Coefficient::ZERO; n]; n];
    let mut power = p.multiplier().clone();
    for m in 1..=n {
        power = power.multiply(p.generator());
        for row in 1..=n {
            out[row - 1][m - 1] = power.coeff(row).clone();
        }
    }
    out
}
