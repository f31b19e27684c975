//! Exact truncated formal power series, the Riordan group and its
//! lower-triangular matrix representation, and row · matrix · column
//! representations of Euler's constant γ and of `e`.
//!
//! Coefficients are exact rationals throughout. Floating point appears only
//! when a result is reported against a numeric target ([`Real`]).
//!
//! ```
//! use riordan::{gregory_coefficients, kenter_gamma_triple, kenter_matrix_product};
//!
//! let l = gregory_coefficients(5);
//! assert_eq!(l.get(4).to_string(), "19/720");
//!
//! // (1 1/2 … ) · T(-log(1-x)/x)^-1 · (1/2 1/3 …)ᵀ, truncated at seven terms.
//! let t = kenter_gamma_triple(6);
//! assert_eq!(kenter_matrix_product(&t, 6).unwrap(), l_sum(7));
//! # fn l_sum(n: usize) -> riordan::Coefficient { riordan::gregory_coefficients(n).weighted_sum(n) }
//! ```

pub mod coefficient;
pub mod constants;
pub mod error;
pub mod matrix;
pub mod real;
pub mod report;
pub mod group;
pub mod series;

pub use coefficient::Coefficient;
pub use constants::{
    euler_convergence, euler_sweep, euler_target, euler_triple, gamma_partial_sum, gamma_sweep,
    gregory_coefficients, harmonic_series, kenter_gamma_triple, kenter_matrix_product, kenter_sum,
    residue_cross_check, GregoryCoefficients, KenterTriple,
};
pub use error::{Error, Result};
pub use matrix::{matrix_vector_product, RiordanMatrixView};
pub use real::Real;
pub use report::ConvergenceReport;
pub use group::{
    act, appell_matrix, appell_power, from_standard, fundamental_product, group_inverse, group_multiply,
    to_matrix, AppellElement, RiordanElement, StandardPair,
};
pub use series::{SeriesClass, TruncatedSeries};
