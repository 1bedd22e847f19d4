//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls the recurrences, projections or closed forms under
//! test; only the `Rational` and `Polynomial` carriers are reused.

#![allow(dead_code)]

pub mod series;

use hermite_identities::{binomial, factorial, Polynomial, Rational};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn poly(cs: &[(i64, i64)]) -> Polynomial {
    Polynomial::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
}

pub fn x_pow(m: usize) -> Polynomial {
    Polynomial::monomial(Rational::one(), m)
}

/// Hermite coefficients by back substitution: peel off the top monomial with
/// `H_d`, whose leading coefficient is `2^d`, and repeat. `hermite` must hold
/// `H_0..=H_deg` from an independent source.
pub fn triangular_solve(p: &Polynomial, hermite: &[Polynomial]) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut rest = p.clone();
    let mut out = vec![Rational::zero(); deg + 1];
    for d in (0..=deg).rev() {
        let top = rest.coeff(d);
        let lead = hermite[d].coeff(d);
        let c = &top / &lead;
        rest = &rest - &hermite[d].scale(&c);
        out[d] = c;
    }
    assert!(rest.is_zero());
    out
}

/// Branch formula for `int (d^n/dx^n e^{-x^2}) x^m dx / sqrt(pi)`: zero for
/// `n > m` or opposite parity, otherwise `m! (-1)^n / (2^{m-n} ((m-n)/2)!)`.
pub fn derivative_kernel_closed_form(n: usize, m: usize) -> Rational {
    if n > m || (m - n) % 2 == 1 {
        return Rational::zero();
    }
    factorial(m) * Rational::sign_power(n) / (Rational::pow2(m - n) * factorial((m - n) / 2))
}

/// `C(n,k) x^k (1-x)^{n-k}` by direct binomial expansion of `(1-x)^{n-k}`.
pub fn bernstein_brute(k: usize, n: usize) -> Polynomial {
    let mut cs = vec![Rational::zero(); n + 1];
    for i in 0..=(n - k) {
        cs[k + i] = binomial(n, k as i64) * binomial(n - k, i as i64) * Rational::sign_power(i);
    }
    Polynomial::new(cs)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num: i64 = rng.gen_range(-1000..=1000);
    let den: i64 = rng.gen_range(1..=60);
    q(num, den)
}

/// Random polynomial of degree at most `max_deg`, sometimes zero.
pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Polynomial {
    let len = rng.gen_range(0..=max_deg + 1);
    Polynomial::new((0..len).map(|_| random_rational(rng)).collect())
}

/// Random polynomial of exact degree `0..=max_deg`.
pub fn random_nonzero_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut cs: Vec<Rational> = (0..deg).map(|_| random_rational(rng)).collect();
    let lead = loop {
        let c = random_rational(rng);
        if !c.is_zero() {
            break c;
        }
    };
    cs.push(lead);
    Polynomial::new(cs)
}
