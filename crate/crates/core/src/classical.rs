//! Euler, Genocchi, Hermite and Bernstein polynomials.
//!
//! Production values come from recurrences:
//!
//! - Euler: `E_n(x) = x^n - 1/2 * sum_{k<n} C(n,k) E_k(x)`, read off from
//!   `(e^t + 1) * sum E_n(x) t^n/n! = 2 e^{xt}`.
//! - Genocchi: `G_0 = 0` and `G_n(x) = n E_{n-1}(x)`, since the Genocchi
//!   generating function is `t` times the Euler one.
//! - Hermite: `H_0 = 1`, `H_1 = 2x`, `H_{n+1} = 2x H_n - 2n H_{n-1}`.
//! - Bernstein: `B_{k,n}(x) = C(n,k) x^k (1-x)^{n-k}` expanded.
//!
//! Results are memoized in process-wide [`FamilyTable`]s.

use std::fmt;
use std::sync::{LazyLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::{binomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Euler,
    Genocchi,
    Hermite,
    Bernstein,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Euler => "euler",
            Family::Genocchi => "genocchi",
            Family::Hermite => "hermite",
            Family::Bernstein => "bernstein",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Append-only memo of one polynomial family.
///
/// Row `n` holds the single entry of degree index `n` for Euler, Genocchi and
/// Hermite, and `B_{0,n}, ..., B_{n,n}` for Bernstein. Rows are only ever
/// appended, under the write lock, so every reader sees a consistent prefix.
#[derive(Debug)]
pub struct FamilyTable {
    family: Family,
    rows: RwLock<Vec<Vec<Polynomial>>>,
}

static EULER: LazyLock<FamilyTable> = LazyLock::new(|| FamilyTable::new(Family::Euler));
static GENOCCHI: LazyLock<FamilyTable> = LazyLock::new(|| FamilyTable::new(Family::Genocchi));
static HERMITE: LazyLock<FamilyTable> = LazyLock::new(|| FamilyTable::new(Family::Hermite));
static BERNSTEIN: LazyLock<FamilyTable> = LazyLock::new(|| FamilyTable::new(Family::Bernstein));

impl FamilyTable {
    /// An empty, private table. Most callers want [`FamilyTable::shared`].
    pub fn new(family: Family) -> Self {
        FamilyTable {
            family,
            rows: RwLock::new(Vec::new()),
        }
    }

    /// The process-wide table for `family`.
    pub fn shared(family: Family) -> &'static FamilyTable {
        match family {
            Family::Euler => &EULER,
            Family::Genocchi => &GENOCCHI,
            Family::Hermite => &HERMITE,
            Family::Bernstein => &BERNSTEIN,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of rows computed so far.
    pub fn len(&self) -> usize {
        self.rows.read().expect("family table lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entry `n` of a singly indexed family.
    pub fn get(&self, n: usize) -> Result<Polynomial> {
        if self.family == Family::Bernstein {
            return Err(Error::NeedsPair(self.family.name()));
        }
        Ok(self.row_entry(n, 0))
    }

    /// `B_{k,n}` from a Bernstein table.
    pub fn get_pair(&self, k: usize, n: usize) -> Result<Polynomial> {
        if self.family != Family::Bernstein {
            return Err(Error::SingleIndex(self.family.name()));
        }
        if k > n {
            return Err(Error::BernsteinIndex { k, n });
        }
        Ok(self.row_entry(n, k))
    }

    fn row_entry(&self, n: usize, idx: usize) -> Polynomial {
        {
            let rows = self.rows.read().expect("family table lock poisoned");
            if let Some(row) = rows.get(n) {
                return row[idx].clone();
            }
        }
        let mut rows = self.rows.write().expect("family table lock poisoned");
        while rows.len() <= n {
            let next = self.compute_row(&rows);
            rows.push(next);
        }
        rows[n][idx].clone()
    }

    fn compute_row(&self, prev: &[Vec<Polynomial>]) -> Vec<Polynomial> {
        let n = prev.len();
        match self.family {
            Family::Euler => {
                let half = Rational::new(1, 2);
                let sum: Polynomial = prev
                    .iter()
                    .enumerate()
                    .map(|(k, row)| row[0].scale(&binomial(n, k as i64)))
                    .sum();
                vec![&Polynomial::monomial(Rational::one(), n) - &sum.scale(&half)]
            }
            Family::Genocchi => {
                if n == 0 {
                    vec![Polynomial::zero()]
                } else {
                    vec![euler_poly(n - 1).scale(&Rational::from(n))]
                }
            }
            Family::Hermite => vec![match n {
                0 => Polynomial::one(),
                1 => Polynomial::monomial(Rational::from(2), 1),
                _ => {
                    let two_x_h = prev[n - 1][0].shift(1).scale(&Rational::from(2));
                    let back = prev[n - 2][0].scale(&Rational::from(2 * (n - 1)));
                    &two_x_h - &back
                }
            }],
            Family::Bernstein => {
                let one_minus_x = Polynomial::new(vec![Rational::one(), -Rational::one()]);
                (0..=n)
                    .map(|k| {
                        one_minus_x
                            .pow(n - k)
                            .shift(k)
                            .scale(&binomial(n, k as i64))
                    })
                    .collect()
            }
        }
    }
}

/// `E_n(x)`.
pub fn euler_poly(n: usize) -> Polynomial {
    EULER.row_entry(n, 0)
}

/// Euler number `E_n = E_n(0)`.
pub fn euler_number(n: usize) -> Rational {
    euler_poly(n).coeff(0)
}

/// `G_n(x)`; `G_0` is the zero polynomial.
pub fn genocchi_poly(n: usize) -> Polynomial {
    GENOCCHI.row_entry(n, 0)
}

/// Genocchi number `G_n = G_n(0)`, always an integer.
pub fn genocchi_number(n: usize) -> Rational {
    genocchi_poly(n).coeff(0)
}

/// Physicists' Hermite polynomial `H_n(x)`.
pub fn hermite_poly(n: usize) -> Polynomial {
    HERMITE.row_entry(n, 0)
}

/// The polynomial `q_n` with `d^n/dx^n e^{-x^2} = q_n(x) e^{-x^2}`.
///
/// Built from `q_0 = 1`, `q_{n+1} = q_n' - 2x q_n`; not memoized.
pub fn rodrigues_factor(n: usize) -> Polynomial {
    let two = Rational::from(2);
    (0..n).fold(Polynomial::one(), |q, _| {
        &q.derivative() - &q.shift(1).scale(&two)
    })
}

/// `H_n` through the Rodrigues form `(-1)^n e^{x^2} d^n/dx^n e^{-x^2}`.
pub fn hermite_rodrigues(n: usize) -> Polynomial {
    rodrigues_factor(n).scale(&Rational::sign_power(n))
}

/// `B_{k,n}(x) = C(n,k) x^k (1-x)^{n-k}`.
pub fn bernstein_poly(k: usize, n: usize) -> Result<Polynomial> {
    BERNSTEIN.get_pair(k, n)
}

/// Bernstein operator `sum_k f(k/n) B_{k,n}(x)` from the samples
/// `f(0/n), ..., f(n/n)`.
pub fn bernstein_operator(samples: &[Rational]) -> Result<Polynomial> {
    let n = samples.len().checked_sub(1).ok_or(Error::EmptySamples)?;
    let mut acc = Polynomial::zero();
    for (k, f) in samples.iter().enumerate() {
        acc = &acc + &bernstein_poly(k, n)?.scale(f);
    }
    Ok(acc)
}
