//! Integrals against the Gaussian weight `e^{-x^2}` over the real line.
//!
//! Every such integral of a rational polynomial is a rational multiple of
//! `sqrt(pi)`, so values are carried as [`GaussSqrtPi`] and `pi` is never
//! evaluated.

use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::classical::rodrigues_factor;
use crate::polynomial::Polynomial;
use crate::rational::{factorial, Rational};

/// The value `coeff * sqrt(pi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GaussSqrtPi {
    #[serde(rename = "sqrt_pi_coeff")]
    pub coeff: Rational,
}

impl GaussSqrtPi {
    pub fn new(coeff: Rational) -> Self {
        GaussSqrtPi { coeff }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussSqrtPi::new(&self.coeff * c)
    }
}

impl Add for GaussSqrtPi {
    type Output = GaussSqrtPi;
    fn add(self, rhs: GaussSqrtPi) -> GaussSqrtPi {
        GaussSqrtPi::new(self.coeff + rhs.coeff)
    }
}

impl Mul<&Rational> for GaussSqrtPi {
    type Output = GaussSqrtPi;
    fn mul(self, rhs: &Rational) -> GaussSqrtPi {
        GaussSqrtPi::new(self.coeff * rhs)
    }
}

/// `int e^{-x^2} x^l dx`: zero for odd `l`, `l! / (2^l (l/2)!) sqrt(pi)` otherwise.
pub fn moment(l: usize) -> GaussSqrtPi {
    if l % 2 == 1 {
        return GaussSqrtPi::zero();
    }
    GaussSqrtPi::new(factorial(l) / (Rational::pow2(l) * factorial(l / 2)))
}

/// `int e^{-x^2} p(x) dx`.
pub fn integral_of_poly(p: &Polynomial) -> GaussSqrtPi {
    let coeff = p
        .coeffs()
        .iter()
        .enumerate()
        .step_by(2)
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| moment(i).coeff * c)
        .sum();
    GaussSqrtPi::new(coeff)
}

/// `int (d^n/dx^n e^{-x^2}) p(x) dx`, computed as the Gaussian integral of
/// `q_n * p` with `q_n` the Rodrigues factor.
pub fn derivative_kernel_integral(n: usize, p: &Polynomial) -> GaussSqrtPi {
    if p.is_zero() {
        return GaussSqrtPi::zero();
    }
    integral_of_poly(&(&rodrigues_factor(n) * p))
}

/// `<p, q> = int e^{-x^2} p(x) q(x) dx`.
pub fn inner_product(p: &Polynomial, q: &Polynomial) -> GaussSqrtPi {
    integral_of_poly(&(p * q))
}
