//! Differential checks of the closed-form expansions against projection.
//!
//! Each closed form is compared coefficient by coefficient with [`expand`]
//! applied to the polynomial it claims to describe. Disagreements are
//! recorded, not raised.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classical::{bernstein_poly, genocchi_poly};
use crate::error::{Error, Result};
use crate::expansion::{
    expand, kim_sum_poly, theorem1_coeffs, theorem2_coeffs, theorem3_coeffs, HermiteExpansion,
    Variant,
};
use crate::rational::Rational;

/// The three closed-form expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Genocchi polynomials `G_n`.
    Genocchi,
    /// Bernstein polynomials `B_{l,n}`.
    Bernstein,
    /// The Euler sum `sum_k E_k(x) x^{n-k}`.
    EulerSum,
}

impl Theorem {
    pub fn number(self) -> u8 {
        match self {
            Theorem::Genocchi => 1,
            Theorem::Bernstein => 2,
            Theorem::EulerSum => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Theorem::Genocchi),
            2 => Some(Theorem::Bernstein),
            3 => Some(Theorem::EulerSum),
            _ => None,
        }
    }

    /// Smallest admissible `n`.
    fn first_n(self) -> usize {
        match self {
            Theorem::EulerSum => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub k: usize,
    pub closed: Rational,
    pub oracle: Rational,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub variant: Variant,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_matched(&self) -> bool {
        self.summary.matched == self.summary.total
    }

    /// First mismatching record in `(n, l, k)` order.
    pub fn first_mismatch(&self) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| !c.matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.matched)
    }
}

/// Compares two expansions over the longer of their lengths.
fn compare(
    n: usize,
    l: Option<usize>,
    closed: &HermiteExpansion,
    oracle: &HermiteExpansion,
) -> Vec<CaseRecord> {
    let len = closed.len().max(oracle.len());
    (0..len)
        .map(|k| {
            let closed = closed.coeff(k);
            let oracle = oracle.coeff(k);
            CaseRecord {
                n,
                l,
                k,
                matched: closed == oracle,
                closed,
                oracle,
            }
        })
        .collect()
}

fn cases_for_n(theorem: Theorem, variant: Variant, n: usize) -> Vec<CaseRecord> {
    match theorem {
        Theorem::Genocchi => compare(n, None, &theorem1_coeffs(n), &expand(&genocchi_poly(n))),
        Theorem::Bernstein => (0..=n)
            .flat_map(|l| {
                let closed = theorem2_coeffs(l, n).expect("l <= n");
                let oracle = expand(&bernstein_poly(l, n).expect("l <= n"));
                compare(n, Some(l), &closed, &oracle)
            })
            .collect(),
        Theorem::EulerSum => {
            let closed = theorem3_coeffs(n, variant).expect("n >= 1");
            compare(n, None, &closed, &expand(&kim_sum_poly(n)))
        }
    }
}

/// Runs one closed form against projection for every `n <= max_n`
/// (every `0 <= l <= n` as well for Bernstein).
///
/// The Euler-sum form starts at `n = 1` and needs `max_n >= 1`; the other
/// two start at `n = 0` and only exist in the verbatim variant. Records come
/// out ordered by `(n, l, k)` whatever the internal parallelism.
pub fn verify_theorem(
    theorem: Theorem,
    variant: Variant,
    max_n: usize,
) -> Result<VerificationReport> {
    if theorem != Theorem::EulerSum && variant != Variant::Verbatim {
        return Err(Error::VariantNotApplicable(theorem.number()));
    }
    if max_n < theorem.first_n() {
        return Err(Error::ZeroDegree(max_n));
    }
    let per_n: Vec<Vec<CaseRecord>> = (theorem.first_n()..=max_n)
        .into_par_iter()
        .map(|n| cases_for_n(theorem, variant, n))
        .collect();
    let cases: Vec<CaseRecord> = per_n.into_iter().flatten().collect();
    let summary = Summary {
        total: cases.len(),
        matched: cases.iter().filter(|c| c.matched).count(),
    };
    Ok(VerificationReport {
        theorem,
        variant,
        cases,
        summary,
    })
}
