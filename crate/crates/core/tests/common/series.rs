//! Truncated power series in `t` with polynomial-in-`x` coefficients, used
//! to read the families straight off their generating functions.

use hermite_identities::{factorial, Polynomial, Rational};

/// `sum_{i < len} terms[i] t^i`.
#[derive(Debug, Clone)]
pub struct Series {
    pub terms: Vec<Polynomial>,
}

impl Series {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// `exp(c t)` where `c` is a polynomial in `x`.
    pub fn exp_linear(c: &Polynomial, len: usize) -> Self {
        let mut terms = Vec::with_capacity(len);
        let mut power = Polynomial::one();
        for i in 0..len {
            terms.push(power.scale(&factorial(i).recip().unwrap()));
            power = &power * c;
        }
        Series { terms }
    }

    /// `exp(-t^2)`.
    pub fn exp_neg_t2(len: usize) -> Self {
        let terms = (0..len)
            .map(|i| {
                if i % 2 == 1 {
                    Polynomial::zero()
                } else {
                    let m = i / 2;
                    Polynomial::constant(Rational::sign_power(m) / factorial(m))
                }
            })
            .collect();
        Series { terms }
    }

    pub fn constant(c: Rational, len: usize) -> Self {
        let mut terms = vec![Polynomial::zero(); len];
        terms[0] = Polynomial::constant(c);
        Series { terms }
    }

    pub fn add(&self, other: &Series) -> Series {
        let terms = self
            .terms
            .iter()
            .zip(&other.terms)
            .map(|(a, b)| a + b)
            .collect();
        Series { terms }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        let terms = (0..len)
            .map(|n| (0..=n).map(|i| &self.terms[i] * &other.terms[n - i]).sum())
            .collect();
        Series { terms }
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn recip(&self) -> Series {
        let a0 = &self.terms[0];
        assert_eq!(
            a0.degree(),
            Some(0),
            "constant term must be a nonzero constant"
        );
        let inv0 = a0.coeff(0).recip().unwrap();
        let mut out: Vec<Polynomial> = vec![Polynomial::constant(inv0.clone())];
        for n in 1..self.len() {
            let acc: Polynomial = (1..=n).map(|i| &self.terms[i] * &out[n - i]).sum();
            out.push(acc.scale(&-&inv0));
        }
        Series { terms: out }
    }

    /// Multiplies by `t`, dropping the term that falls off the end.
    pub fn times_t(&self) -> Series {
        let mut terms = vec![Polynomial::zero()];
        terms.extend(self.terms[..self.len() - 1].iter().cloned());
        Series { terms }
    }

    /// `n!` times the coefficient of `t^n`.
    pub fn egf_coeff(&self, n: usize) -> Polynomial {
        self.terms[n].scale(&factorial(n))
    }
}

fn x() -> Polynomial {
    Polynomial::x()
}

/// `2 e^{xt} / (e^t + 1)`.
pub fn euler_gf(len: usize) -> Series {
    let et = Series::exp_linear(&Polynomial::one(), len);
    let denom = et.add(&Series::constant(Rational::one(), len));
    Series::exp_linear(&x(), len)
        .mul(&denom.recip())
        .mul(&Series::constant(Rational::from(2), len))
}

/// `2t e^{xt} / (e^t + 1)`.
pub fn genocchi_gf(len: usize) -> Series {
    euler_gf(len).times_t()
}

/// `e^{2tx - t^2}`.
pub fn hermite_gf(len: usize) -> Series {
    let two_x = x().scale(&Rational::from(2));
    Series::exp_linear(&two_x, len).mul(&Series::exp_neg_t2(len))
}
