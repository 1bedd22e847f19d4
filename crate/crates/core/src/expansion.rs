//! Hermite-basis expansions.
//!
//! [`expand`] projects a polynomial onto `H_0, ..., H_n` with exact Gaussian
//! inner products, `C_k = <p, H_k> / (2^k k! sqrt(pi))`. It is the reference
//! against which the closed-form coefficient formulas below
//! ([`theorem1_coeffs`], [`theorem2_coeffs`], [`theorem3_coeffs`]) are checked.

use serde::{Deserialize, Serialize};

use crate::classical::{euler_number, euler_poly, genocchi_number, hermite_poly};
use crate::error::{Error, Result};
use crate::gaussian::inner_product;
use crate::polynomial::Polynomial;
use crate::rational::{binomial, factorial, falling_factorial, Rational};

/// Coefficients `C_0, ..., C_n` of `sum_k C_k H_k(x)`.
///
/// Closed-form expansions keep trailing zero coefficients (the formulas
/// produce `n + 1` entries regardless), projections do not.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HermiteExpansion {
    pub coeffs: Vec<Rational>,
}

impl HermiteExpansion {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        HermiteExpansion { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `C_k`, zero past the stored length.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `sum_k C_k H_k(x)` in the monomial basis.
    pub fn reconstruct(&self) -> Polynomial {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| hermite_poly(k).scale(c))
            .sum()
    }
}

/// Projects `p` onto the Hermite basis.
pub fn expand(p: &Polynomial) -> HermiteExpansion {
    let Some(deg) = p.degree() else {
        return HermiteExpansion::default();
    };
    let coeffs = (0..=deg)
        .map(|k| {
            let norm = Rational::pow2(k) * factorial(k);
            inner_product(p, &hermite_poly(k)).coeff / norm
        })
        .collect();
    HermiteExpansion::new(coeffs)
}

/// `m! / (2^m (m/2)!)` for even `m`.
fn even_weight(m: usize) -> Rational {
    debug_assert!(m.is_multiple_of(2));
    factorial(m) / (Rational::pow2(m) * factorial(m / 2))
}

/// Closed-form Hermite coefficients of the Genocchi polynomial `G_n`:
///
/// `C_k = n!/(2^k k!) * sum_{l even, l <= n-k} G_{n-k-l} / ((n-k-l)! 2^l (l/2)!)`.
pub fn theorem1_coeffs(n: usize) -> HermiteExpansion {
    let n_fact = factorial(n);
    let coeffs = (0..=n)
        .map(|k| {
            let inner: Rational = (0..=n - k)
                .step_by(2)
                .map(|l| {
                    genocchi_number(n - k - l)
                        / (factorial(n - k - l) * Rational::pow2(l) * factorial(l / 2))
                })
                .sum();
            &n_fact / (Rational::pow2(k) * factorial(k)) * inner
        })
        .collect();
    HermiteExpansion::new(coeffs)
}

/// Closed-form Hermite coefficients of the Bernstein polynomial `B_{l,n}`:
///
/// `C_k = n!/k! * sum_j C(l+j, l) (-1)^j / ((n-l-j)! 2^{l+j} ((l+j-k)/2)!)`
///
/// over `0 <= j <= n-l` with `l+j-k` even and non-negative. Terms with
/// `k > l+j` would need a negative factorial; the integral they come from
/// vanishes, so they are dropped.
pub fn theorem2_coeffs(l: usize, n: usize) -> Result<HermiteExpansion> {
    if l > n {
        return Err(Error::TheoremTwoIndex { l, n });
    }
    let n_fact = factorial(n);
    let coeffs = (0..=n)
        .map(|k| {
            let inner: Rational = (0..=n - l)
                .filter(|&j| l + j >= k && (l + j - k).is_multiple_of(2))
                .map(|j| {
                    binomial(l + j, l as i64) * Rational::sign_power(j)
                        / (factorial(n - l - j)
                            * Rational::pow2(l + j)
                            * factorial((l + j - k) / 2))
                })
                .sum();
            &n_fact / factorial(k) * inner
        })
        .collect();
    Ok(HermiteExpansion::new(coeffs))
}

/// `sum_{k=0}^{n} E_k(x) x^{n-k}`.
pub fn kim_sum_poly(n: usize) -> Polynomial {
    (0..=n).map(|k| euler_poly(k).shift(n - k)).sum()
}

/// `2 - sum_{l=j}^{n-1} E_{l-j}`, the bracketed weight shared by the Kim
/// identity and the third closed form.
fn kim_weight(j: usize, n: usize) -> Rational {
    let tail: Rational = (j..n).map(|l| euler_number(l - j)).sum();
    Rational::from(2) - tail
}

/// Right-hand side of the Kim et al. identity,
///
/// `1/2 sum_{j<n} C(n+1, j) (2 - sum_{l=j}^{n-1} E_{l-j}) E_j(x) + (n+1) E_n(x)`.
pub fn kim_identity_rhs(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroDegree(n));
    }
    let half = Rational::new(1, 2);
    let head: Polynomial = (0..n)
        .map(|j| euler_poly(j).scale(&(binomial(n + 1, j as i64) * kim_weight(j, n) * &half)))
        .sum();
    Ok(&head + &euler_poly(n).scale(&Rational::from(n + 1)))
}

/// Which form of the second term of the third closed form to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// As printed, with the `(-1)^{n+k}` factor on the second term.
    Verbatim,
    /// Without that factor, as integration by parts gives.
    Corrected,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Verbatim => "verbatim",
            Variant::Corrected => "corrected",
        }
    }
}

/// `sum_{s even, s <= d} C(d, s) E_{d-s} s! / (2^s (s/2)!)`, the Euler-number
/// form of `int e^{-x^2} E_d(x) dx / sqrt(pi)`.
fn euler_gauss_sum(d: usize) -> Rational {
    (0..=d)
        .step_by(2)
        .map(|s| binomial(d, s as i64) * euler_number(d - s) * even_weight(s))
        .sum()
}

/// Closed-form Hermite coefficients of `sum_k E_k(x) x^{n-k}`.
///
/// `C_k = T1 + T2` where
///
/// - `T1 = 1/2 sum_{j<n} C(n+1,j) w_j j^(k) sum_{m even} C(j-k,m) E_{j-k-m} m!/(2^{m+k} k! (m/2)!)`
///   with `w_j = 2 - sum_{l=j}^{n-1} E_{l-j}` and `j^(k)` the falling factorial,
/// - `T2 = (n+1) [(-1)^{n+k}] sum_{s even} C(n,k) C(n-k,s) E_{n-k-s} s!/(2^{s+k} (s/2)!)`,
///   the bracketed sign present only in [`Variant::Verbatim`].
pub fn theorem3_coeffs(n: usize, variant: Variant) -> Result<HermiteExpansion> {
    if n == 0 {
        return Err(Error::ZeroDegree(n));
    }
    let half = Rational::new(1, 2);
    let weights: Vec<Rational> = (0..n).map(|j| kim_weight(j, n)).collect();
    let coeffs = (0..=n)
        .map(|k| {
            let norm_k = Rational::pow2(k) * factorial(k);
            let term1: Rational = (k..n)
                .map(|j| {
                    binomial(n + 1, j as i64)
                        * &weights[j]
                        * falling_factorial(j, k)
                        * euler_gauss_sum(j - k)
                })
                .sum::<Rational>()
                / &norm_k
                * &half;
            let mut term2 = Rational::from(n + 1) * binomial(n, k as i64) * euler_gauss_sum(n - k)
                / Rational::pow2(k);
            if variant == Variant::Verbatim {
                term2 = term2 * Rational::sign_power(n + k);
            }
            term1 + term2
        })
        .collect();
    Ok(HermiteExpansion::new(coeffs))
}
