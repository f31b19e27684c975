//! The Riordan group `G = H ⋊ K`, its action on `V`, and its representation
//! as infinite lower-triangular matrices (materialised as N×N views).
//!
//! An element `(f, g)` acts on `h ∈ V` by `(f, g) ∗ h = f · (h ∘ ḡ)`, and its
//! matrix has column `m` equal to the coefficients of `(f, g) ∗ x^m = f · ḡ^m`.
//! The group law is `(f₁, g₁) ∗ (f₂, g₂) = (f₁ · (f₂ ∘ ḡ₁), g₁ ∘ g₂)`.


use crate::error::{Error, Result};
use crate::matrix::RiordanMatrixView;
use crate::series::TruncatedSeries;

fn require_h(s: &TruncatedSeries) -> Result<()> {
    if s.classify().is_h() {
        Ok(())
    } else {
        Err(Error::ZeroConstantTerm)
    }
}

fn require_k(s: &TruncatedSeries) -> Result<()> {
    if !s.coeff(0).is_zero() {
        return Err(Error::NotInK { index: 0, reason: "must be zero" });
    }
    if s.order() == 0 || s.coeff(1).is_zero() {
        return Err(Error::NotInK { index: 1, reason: "must be nonzero" });
    }
    Ok(())
}

fn require_order(s: &TruncatedSeries, required: usize) -> Result<()> {
    if s.order() < required {
        return Err(Error::InsufficientOrder { required, available: s.order() });
    }
    Ok(())
}

/// A pair `(f, g)` with `f ∈ H`, `g ∈ K`, both truncated at the same order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RiordanElement {
    f: TruncatedSeries,
    g: TruncatedSeries,
}

impl RiordanElement {
    pub fn new(f: TruncatedSeries, g: TruncatedSeries) -> Result<Self> {
        require_h(&f)?;
        require_k(&g)?;
        if f.order() != g.order() {
            return Err(Error::DimensionMismatch { expected: f.order(), found: g.order() });
        }
        Ok(RiordanElement { f, g })
    }

    /// `(1, x)`.
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1, "K needs a linear term");
        RiordanElement { f: TruncatedSeries::one(order), g: TruncatedSeries::identity(order) }
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// `(f₁ · (f₂ ∘ ḡ₁), g₁ ∘ g₂)`.
    pub fn group_multiply(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::DimensionMismatch { expected: self.order(), found: other.order() });
        }
        let g1_inv = self.g.compositional_inverse()?;
        let f = self.f.multiply(&other.f.compose(&g1_inv)?);
        let g = self.g.compose(&other.g)?;
        Ok(RiordanElement { f, g })
    }

    /// `((1/f) ∘ g, ḡ)`.
    pub fn group_inverse(&self) -> Result<Self> {
        let f = self.f.reciprocal()?.compose(&self.g)?;
        let g = self.g.compositional_inverse()?;
        Ok(RiordanElement { f, g })
    }

    /// `f · (h ∘ ḡ)` for `h` without constant term.
    pub fn act(&self, h: &TruncatedSeries) -> Result<TruncatedSeries> {
        if !h.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let g_inv = self.g.compositional_inverse()?;
        Ok(self.f.multiply(&h.compose(&g_inv)?))
    }

    /// The N×N truncation of the matrix of this element: entry `(n, m)` is
    /// the coefficient of `x^n` in `f · ḡ^m`.
    pub fn to_matrix(&self, dimension: usize) -> Result<RiordanMatrixView> {
        require_order(&self.f, dimension)?;
        let f = self.f.truncate(dimension)?;
        let g_inv = self.g.truncate(dimension)?.compositional_inverse()?;
        Ok(columns_of_powers(&f, &g_inv, dimension))
    }
}

/// Matrix whose column `m` holds coefficients `x^1 ..= x^N` of `lead · step^m`.
fn columns_of_powers(lead: &TruncatedSeries, step: &TruncatedSeries, dimension: usize) -> RiordanMatrixView {
    let mut columns = Vec::with_capacity(dimension);
    let mut current = lead.clone();
    for _ in 1..=dimension {
        current = current.multiply(step);
        columns.push(current.clone());
    }
    RiordanMatrixView::from_fn(dimension, |n, m| columns[m - 1].coeff(n).clone())
}

/// `(t, x)`: the Appell subgroup, whose matrices are lower-triangular Toeplitz.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AppellElement {
    t: TruncatedSeries,
}

impl AppellElement {
    pub fn new(t: TruncatedSeries) -> Result<Self> {
        require_h(&t)?;
        Ok(AppellElement { t })
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.t
    }

    /// The group element `(t, x)`.
    pub fn to_element(&self) -> Result<RiordanElement> {
        RiordanElement::new(self.t.clone(), TruncatedSeries::identity(self.t.order()))
    }

    /// Entry `(n, m)` is `t_{n-m}`. Needs order at least `dimension - 1`.
    pub fn appell_matrix(&self, dimension: usize) -> Result<RiordanMatrixView> {
        toeplitz(&self.t, dimension)
    }

    /// Toeplitz matrix of `t^d`; negative `d` uses `1/t`.
    pub fn appell_power(&self, d: i64, dimension: usize) -> Result<RiordanMatrixView> {
        require_order(&self.t, dimension.saturating_sub(1))?;
        let t = self.t.truncate(dimension.saturating_sub(1))?;
        toeplitz(&t.power(d)?, dimension)
    }
}

fn toeplitz(t: &TruncatedSeries, dimension: usize) -> Result<RiordanMatrixView> {
    require_order(t, dimension.saturating_sub(1))?;
    Ok(RiordanMatrixView::from_fn(dimension, |n, m| t.coeff(n - m).clone()))
}

/// Standard notation `[G, F]`, the matrix whose column `m` is `G · F^m`.
/// It is the group element `(G, F̄)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardPair {
    multiplier: TruncatedSeries,
    generator: TruncatedSeries,
}

impl StandardPair {
    /// `[G, F]` with `G ∈ H` and `F ∈ K` of equal order.
    pub fn new(multiplier: TruncatedSeries, generator: TruncatedSeries) -> Result<Self> {
        require_h(&multiplier)?;
        require_k(&generator)?;
        if multiplier.order() != generator.order() {
            return Err(Error::DimensionMismatch { expected: multiplier.order(), found: generator.order() });
        }
        Ok(StandardPair { multiplier, generator })
    }

    pub fn identity(order: usize) -> Self {
        StandardPair { multiplier: TruncatedSeries::one(order), generator: TruncatedSeries::identity(order) }
    }

    /// `G`.
    pub fn multiplier(&self) -> &TruncatedSeries {
        &self.multiplier
    }

    /// `F`.
    pub fn generator(&self) -> &TruncatedSeries {
        &self.generator
    }

    pub fn order(&self) -> usize {
        self.multiplier.order()
    }

    /// `(G, F̄)`.
    pub fn to_element(&self) -> Result<RiordanElement> {
        RiordanElement::new(self.multiplier.clone(), self.generator.compositional_inverse()?)
    }

    /// `[f, ḡ]`.
    pub fn from_element(e: &RiordanElement) -> Result<Self> {
        StandardPair::new(e.f.clone(), e.g.compositional_inverse()?)
    }

    /// `[G₁ · (G₂ ∘ F₁), F₂ ∘ F₁]`, the product of the two matrices.
    pub fn fundamental_product(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::DimensionMismatch { expected: self.order(), found: other.order() });
        }
        let multiplier = self.multiplier.multiply(&other.multiplier.compose(&self.generator)?);
        let generator = other.generator.compose(&self.generator)?;
        Ok(StandardPair { multiplier, generator })
    }

    pub fn to_matrix(&self, dimension: usize) -> Result<RiordanMatrixView> {
        self.to_element()?.to_matrix(dimension)
    }
}

pub fn group_multiply(e1: &RiordanElement, e2: &RiordanElement) -> Result<RiordanElement> {
    e1.group_multiply(e2)
}

pub fn group_inverse(e: &RiordanElement) -> Result<RiordanElement> {
    e.group_inverse()
}

pub fn act(e: &RiordanElement, h: &TruncatedSeries) -> Result<TruncatedSeries> {
    e.act(h)
}

pub fn to_matrix(e: &RiordanElement, dimension: usize) -> Result<RiordanMatrixView> {
    e.to_matrix(dimension)
}

pub fn appell_matrix(t: &AppellElement, dimension: usize) -> Result<RiordanMatrixView> {
    t.appell_matrix(dimension)
}

pub fn appell_power(t: &AppellElement, d: i64, dimension: usize) -> Result<RiordanMatrixView> {
    t.appell_power(d, dimension)
}

pub fn from_standard(p: &StandardPair) -> Result<RiordanElement> {
    p.to_element()
}

pub fn fundamental_product(p1: &StandardPair, p2: &StandardPair) -> Result<StandardPair> {
    p1.fundamental_product(p2)
}
