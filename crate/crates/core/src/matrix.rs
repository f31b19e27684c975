//! N×N lower-triangular truncations of Riordan matrices.
//!
//! Indices are 1-based, matching the basis `{x, x², x³, …}` the matrices act
//! on: entry `(n, m)` is the coefficient of `x^n` in the image of `x^m`.
//! Exported arrays are 0-based, so entry `(n, m)` sits at `rows[n-1][m-1]`.


use crate::coefficient::{self, Coefficient};
use crate::error::{Error, Result};
use crate::real::{check_precision, Real};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RiordanMatrixView {
    /// `rows[n-1]` holds entries `(n, 1) ..= (n, n)`.
    rows: Vec<Vec<Coefficient>>,
}

impl RiordanMatrixView {
    /// Builds from a 1-based entry rule evaluated on and below the diagonal.
    pub fn from_fn(dimension: usize, mut entry: impl FnMut(usize, usize) -> Coefficient) -> Self {
        let rows = (1..=dimension)
            .map(|n| (1..=n).map(|m| entry(n, m)).collect())
            .collect();
        RiordanMatrixView { rows }
    }

    pub fn identity(dimension: usize) -> Self {
        Self::from_fn(dimension, |n, m| if n == m { Coefficient::ONE } else { Coefficient::ZERO })
    }

    /// From full square rows; anything above the diagonal must be zero.
    pub fn from_square_rows(rows: Vec<Vec<Coefficient>>) -> Result<Self> {
        let dimension = rows.len();
        let mut out = Vec::with_capacity(dimension);
        for (i, mut row) in rows.into_iter().enumerate() {
            if row.len() != dimension {
                return Err(Error::DimensionMismatch { expected: dimension, found: row.len() });
            }
            if let Some(j) = row[i + 1..].iter().position(|c| !c.is_zero()) {
                return Err(Error::Parse {
                    index: i,
                    message: format!("entry above the diagonal in column {} is nonzero", i + j + 1),
                });
            }
            row.truncate(i + 1);
            out.push(row);
        }
        Ok(RiordanMatrixView { rows: out })
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Entry `l_{n,m}` with 1-based indices; zero above the diagonal.
    pub fn entry(&self, n: usize, m: usize) -> Coefficient {
        assert!(
            (1..=self.dimension()).contains(&n) && (1..=self.dimension()).contains(&m),
            "index ({n}, {m}) outside a {0}×{0} matrix",
            self.dimension()
        );
        if m > n {
            Coefficient::ZERO
        } else {
            self.rows[n - 1][m - 1].clone()
        }
    }

    /// Borrowed entry on or below the diagonal.
    fn at(&self, n: usize, m: usize) -> &Coefficient {
        &self.rows[n - 1][m - 1]
    }

    pub fn diagonal(&self) -> Vec<Coefficient> {
        (1..=self.dimension()).map(|n| self.at(n, n).clone()).collect()
    }

    /// Column `m` restricted to rows `m ..= N`.
    pub fn column(&self, m: usize) -> Vec<Coefficient> {
        (m..=self.dimension()).map(|n| self.at(n, m).clone()).collect()
    }

    /// Full square rows, zeros above the diagonal.
    pub fn to_square_rows(&self) -> Vec<Vec<Coefficient>> {
        let d = self.dimension();
        (1..=d).map(|n| (1..=d).map(|m| self.entry(n, m)).collect()).collect()
    }

    /// Exact product; only the lower triangle is touched.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch { expected: self.dimension(), found: other.dimension() });
        }
        Ok(Self::from_fn(self.dimension(), |n, m| {
            let mut acc = Coefficient::ZERO;
            for p in m..=n {
                acc += self.at(n, p) * other.at(p, m);
            }
            acc
        }))
    }

    /// Exact lower-triangular product `M·v`.
    pub fn mul_vector(&self, v: &[Coefficient]) -> Result<Vec<Coefficient>> {
        if v.len() != self.dimension() {
            return Err(Error::DimensionMismatch { expected: self.dimension(), found: v.len() });
        }
        Ok((1..=self.dimension())
            .map(|n| {
                let mut acc = Coefficient::ZERO;
                for m in 1..=n {
                    if !v[m - 1].is_zero() {
                        acc += self.at(n, m) * &v[m - 1];
                    }
                }
                acc
            })
            .collect())
    }

    /// JSON array of rows, each a full row of `"p/q"` strings.
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .to_square_rows()
            .iter()
            .map(|r| r.iter().map(coefficient::format).collect())
            .collect();
        serde_json::to_string(&rows).expect("serialize matrix")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<String>> = serde_json::from_str(text)
            .map_err(|e| Error::Format(format!("expected a JSON array of string rows: {e}")))?;
        let rows = raw
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .map(|s| {
                        coefficient::parse(s, i).map_err(|e| match e {
                            Error::Parse { index, message } => Error::Parse { index, message: format!("row {index}: {message}") },
                            other => other,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_square_rows(rows)
    }

    /// Comma-separated decimals, one line per row, `digits` significant digits
    /// after rounding through `precision_bits`. Lossy.
    pub fn to_csv(&self, precision_bits: usize, digits: usize) -> Result<String> {
        check_precision(precision_bits)?;
        let mut out = String::new();
        for row in self.to_square_rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|c| Real::from_rational(c, precision_bits).to_decimal(digits))
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

/// `M·v` for a lower-triangular view.
pub fn matrix_vector_product(matrix: &RiordanMatrixView, v: &[Coefficient]) -> Result<Vec<Coefficient>> {
    matrix.mul_vector(v)
}
