//! Row · Toeplitz^d · column products and the two constants they represent.
//!
//! For series `a, b, c` with nonzero constant terms and an integer `d`, the
//! product of the row `(a₀ a₁ …)`, the `d`-th power of the Toeplitz matrix of
//! `b`, and the column `(c₀ c₁ …)ᵀ` equals `Σ aₙ fₙ` where `f = b^d · c`.
//! That coefficient sum is how the residue of `a(z) b(1/z)^d c(1/z) / z` is
//! evaluated here; no numerical contour integration is done.
//!
//! Convergence of the three series on `|x| < 1` is the caller's
//! responsibility; truncated sums are exact rationals regardless.


use crate::coefficient::{self, Coefficient};
use crate::error::{Error, Result};
use crate::matrix::matrix_vector_product;
use crate::real::{self, check_precision, Real};
use crate::report::ConvergenceReport;
use crate::group::AppellElement;
use crate::series::TruncatedSeries;

/// Series `a, b, c` and exponent `d` for the row · matrix^d · column product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KenterTriple {
    a: TruncatedSeries,
    b: TruncatedSeries,
    c: TruncatedSeries,
    d: i64,
}

impl KenterTriple {
    pub fn new(a: TruncatedSeries, b: TruncatedSeries, c: TruncatedSeries, d: i64) -> Result<Self> {
        for (name, s) in [("a", &a), ("b", &b), ("c", &c)] {
            if s.coeff(0).is_zero() {
                return Err(Error::InvalidParameters(format!("{name}(0) must be nonzero")));
            }
        }
        if a.order() != b.order() || a.order() != c.order() {
            return Err(Error::DimensionMismatch { expected: a.order(), found: b.order().min(c.order()) });
        }
        Ok(KenterTriple { a, b, c, d })
    }

    pub fn a(&self) -> &TruncatedSeries {
        &self.a
    }

    pub fn b(&self) -> &TruncatedSeries {
        &self.b
    }

    pub fn c(&self) -> &TruncatedSeries {
        &self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    fn require(&self, terms: usize) -> Result<()> {
        if terms > self.order() {
            return Err(Error::InsufficientOrder { required: terms, available: self.order() });
        }
        Ok(())
    }

    /// `f = b^d · c` truncated at `terms`.
    pub fn combined_series(&self, terms: usize) -> Result<TruncatedSeries> {
        self.require(terms)?;
        let b = self.b.truncate(terms)?;
        Ok(b.power(self.d)?.multiply(&self.c.truncate(terms)?))
    }

    /// The individual contributions `aₙ fₙ` for `n = 0 ..= terms`.
    pub fn contributions(&self, terms: usize) -> Result<Vec<Coefficient>> {
        let f = self.combined_series(terms)?;
        Ok((0..=terms).map(|n| self.a.coeff(n) * f.coeff(n)).collect())
    }
}

/// `Σ_{n=0}^{terms} aₙ fₙ` with `f = b^d · c`, exactly.
pub fn kenter_sum(t: &KenterTriple, terms: usize) -> Result<Coefficient> {
    Ok(t.contributions(terms)?.into_iter().fold(Coefficient::ZERO, |acc, x| acc + x))
}

/// The literal truncated product `(a₀ … a_N) · T(b)^d · (c₀ … c_N)ᵀ`
/// with `(N + 1)`-dimensional matrices, `N = terms`.
pub fn kenter_matrix_product(t: &KenterTriple, terms: usize) -> Result<Coefficient> {
    t.require(terms)?;
    let dimension = terms + 1;
    let matrix = AppellElement::new(t.b.clone())?.appell_power(t.d, dimension)?;
    let column = t.c.coefficients()[..dimension].to_vec();
    let image = matrix_vector_product(&matrix, &column)?;
    Ok(t.a.coefficients()[..dimension]
        .iter()
        .zip(&image)
        .fold(Coefficient::ZERO, |acc, (x, y)| acc + x * y))
}

/// Both evaluations of the truncated residue; they must agree exactly.
pub fn residue_cross_check(t: &KenterTriple, terms: usize) -> Result<(Coefficient, Coefficient)> {
    let sum = kenter_sum(t, terms)?;
    let product = kenter_matrix_product(t, terms)?;
    if sum != product {
        return Err(Error::IdentityViolated(format!(
            "coefficient sum {sum} differs from matrix product {product}"
        )));
    }
    Ok((sum, product))
}

/// `-log(1 - x)/x = Σ xⁿ/(n + 1)`.
pub fn harmonic_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| coefficient::ratio(1, n as i64 + 1))
}

/// Coefficients `L₀ ..= L_N` of `x / log(1 - x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GregoryCoefficients {
    values: Vec<Coefficient>,
}

impl GregoryCoefficients {
    pub fn values(&self) -> &[Coefficient] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &Coefficient {
        &self.values[n]
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    /// `Σ_{m=0}^{n-1} L_m / (n - m)`, which vanishes for every `n ≥ 2`.
    pub fn recursion_residual(&self, n: usize) -> Coefficient {
        (0..n).fold(Coefficient::ZERO, |acc, m| acc + &self.values[m] / coefficient::int((n - m) as i64))
    }

    /// First `n` in `2 ..= order` where the recursion fails, if any.
    pub fn first_recursion_failure(&self) -> Option<usize> {
        (2..=self.order()).find(|&n| !self.recursion_residual(n).is_zero())
    }

    /// `Σ_{m=1}^{terms} L_m / m`.
    pub fn weighted_sum(&self, terms: usize) -> Coefficient {
        (1..=terms).fold(Coefficient::ZERO, |acc, m| acc + &self.values[m] / coefficient::int(m as i64))
    }
}

/// `L_n = −[xⁿ] (1 / harmonic_series)`.
pub fn gregory_coefficients(order: usize) -> GregoryCoefficients {
    let recip = harmonic_series(order).reciprocal().expect("harmonic series has constant term 1");
    GregoryCoefficients { values: recip.into_coefficients().into_iter().map(|c| -c).collect() }
}

/// `a = b = -log(1-x)/x`, `c = (a - 1)/x`, `d = -1`: the product is Euler's constant.
pub fn kenter_gamma_triple(order: usize) -> KenterTriple {
    let a = harmonic_series(order);
    let c = TruncatedSeries::from_fn(order, |n| coefficient::ratio(1, n as i64 + 2));
    KenterTriple { b: a.clone(), a, c, d: -1 }
}

/// Contributions `L_m / m` for `m = 1 ..= max_terms`, via the triple.
fn gamma_contributions(max_terms: usize) -> Result<Vec<Coefficient>> {
    if max_terms == 0 {
        return Err(Error::InvalidParameters("at least one term is required".into()));
    }
    let order = max_terms - 1;
    kenter_gamma_triple(order).contributions(order)
}

/// `Σ_{m=1}^{terms} L_m/m` against Euler's constant.
pub fn gamma_partial_sum(terms: usize, precision_bits: usize) -> Result<ConvergenceReport> {
    Ok(gamma_sweep(&[terms], precision_bits, None)?.remove(0))
}

/// Reports at each term count in `sweep` (strictly increasing), sharing one
/// exact computation. `per_term_cap` keeps up to that many contributions per report.
pub fn gamma_sweep(sweep: &[usize], precision_bits: usize, per_term_cap: Option<usize>) -> Result<Vec<ConvergenceReport>> {
    check_precision(precision_bits)?;
    check_sweep(sweep)?;
    let max = *sweep.last().expect("nonempty sweep");
    let contributions = gamma_contributions(max)?;
    let target = real::euler_gamma(precision_bits);
    Ok(prefix_reports(&contributions, sweep, |n| n, &target, per_term_cap))
}

fn check_sweep(sweep: &[usize]) -> Result<()> {
    if sweep.is_empty() {
        return Err(Error::InvalidParameters("empty sweep".into()));
    }
    if sweep.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameters("sweep values must be strictly increasing".into()));
    }
    Ok(())
}

/// Builds one report per sweep point from prefix sums; `count(n)` is how many
/// contributions the point `n` covers.
fn prefix_reports(
    contributions: &[Coefficient],
    sweep: &[usize],
    count: impl Fn(usize) -> usize,
    target: &Real,
    per_term_cap: Option<usize>,
) -> Vec<ConvergenceReport> {
    let mut reports = Vec::with_capacity(sweep.len());
    let mut acc = Coefficient::ZERO;
    let mut used = 0;
    for &n in sweep {
        let upto = count(n);
        for c in &contributions[used..upto] {
            acc += c;
        }
        used = upto;
        let per_term = per_term_cap.map(|cap| contributions[..upto.min(cap)].to_vec());
        reports.push(ConvergenceReport::new(n, acc.clone(), target.clone(), per_term));
    }
    reports
}

fn check_euler_parameters(p: i64, q: i64) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameters("p and q must be nonzero".into()));
    }
    match p.checked_mul(q) {
        Some(pq) if pq > 1 => Ok(()),
        Some(_) => Err(Error::InvalidParameters(format!("p·q must exceed 1, got p = {p}, q = {q}"))),
        None => Err(Error::InvalidParameters("p·q overflows".into())),
    }
}

/// `a = 1/(1 − x/p)`, `b = eˣ`, `c = 1/(1 − x/q)` with exponent `d`.
pub fn euler_triple(p: i64, q: i64, d: i64, order: usize) -> Result<KenterTriple> {
    check_euler_parameters(p, q)?;
    let geometric = |base: i64| {
        let r = coefficient::ratio(1, base);
        let mut power = Coefficient::ONE;
        TruncatedSeries::from_fn(order, move |_| {
            let out = power.clone();
            power *= &r;
            out
        })
    };
    let mut factorial = Coefficient::ONE;
    let b = TruncatedSeries::from_fn(order, |n| {
        if n > 0 {
            factorial *= coefficient::int(n as i64);
        }
        coefficient::recip(&factorial)
    });
    Ok(KenterTriple { a: geometric(p), b, c: geometric(q), d })
}

/// `pq/(pq − 1) · e^{d/p}`, from an independent exponential at `precision_bits`.
pub fn euler_target(p: i64, q: i64, d: i64, precision_bits: usize) -> Result<Real> {
    check_euler_parameters(p, q)?;
    check_precision(precision_bits)?;
    let pq = coefficient::int(p * q);
    let factor = &pq / (&pq - Coefficient::ONE);
    let exp = real::exp_rational(&coefficient::ratio(d, p), precision_bits);
    Ok(Real::from_rational(&factor, precision_bits).mul(&exp))
}

/// `Σ_{n=0}^{terms} aₙ fₙ` for the Euler triple against its closed form.
pub fn euler_convergence(p: i64, q: i64, d: i64, terms: usize, precision_bits: usize) -> Result<ConvergenceReport> {
    Ok(euler_sweep(p, q, d, &[terms], precision_bits, None)?.remove(0))
}

pub fn euler_sweep(
    p: i64,
    q: i64,
    d: i64,
    sweep: &[usize],
    precision_bits: usize,
    per_term_cap: Option<usize>,
) -> Result<Vec<ConvergenceReport>> {
    check_sweep(sweep)?;
    let target = euler_target(p, q, d, precision_bits)?;
    let max = *sweep.last().expect("nonempty sweep");
    let contributions = euler_triple(p, q, d, max)?.contributions(max)?;
    Ok(prefix_reports(&contributions, sweep, |n| n + 1, &target, per_term_cap))
}
