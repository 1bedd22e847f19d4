//! Exact Hermite-basis expansions of Euler, Genocchi and Bernstein polynomials.
//!
//! Everything is computed over the rationals: polynomial coefficients are
//! [`Rational`]s and Gaussian integrals are rational multiples of `sqrt(pi)`
//! ([`GaussSqrtPi`]). The [`verify`] module compares closed-form Hermite
//! coefficient formulas with direct projection and reports every disagreement.

pub mod classical;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod gaussian;
pub mod polynomial;
pub mod rational;
pub mod verify;

pub use classical::{
    bernstein_operator, bernstein_poly, euler_number, euler_poly, genocchi_number, genocchi_poly,
    hermite_poly, hermite_rodrigues, rodrigues_factor, Family, FamilyTable,
};
pub use error::{Error, ParseRationalError, Result};
pub use expansion::{
    expand, kim_identity_rhs, kim_sum_poly, theorem1_coeffs, theorem2_coeffs, theorem3_coeffs,
    HermiteExpansion, Variant,
};
pub use gaussian::{
    derivative_kernel_integral, inner_product, integral_of_poly, moment, GaussSqrtPi,
};
pub use polynomial::Polynomial;
pub use rational::{binomial, factorial, falling_factorial, Rational};
pub use verify::{verify_theorem, CaseRecord, Summary, Theorem, VerificationReport};
