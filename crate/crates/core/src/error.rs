use thiserror::Error;

/// A coefficient token that is neither an integer nor `a/b`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational {token:?}: expected an integer or \"a/b\"")]
pub struct ParseRationalError {
    pub token: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must satisfy 0 <= k <= n (got k = {k}, n = {n})")]
    BernsteinIndex { k: usize, n: usize },

    #[error("l must satisfy 0 <= l <= n (got l = {l}, n = {n})")]
    TheoremTwoIndex { l: usize, n: usize },

    #[error("n must be at least 1 (got n = {0})")]
    ZeroDegree(usize),

    #[error("theorem {0} has only the verbatim variant")]
    VariantNotApplicable(u8),

    #[error("the Bernstein operator needs at least one sample")]
    EmptySamples,

    #[error("family {0} is indexed by a (k, n) pair")]
    NeedsPair(&'static str),

    #[error("family {0} is indexed by a single degree")]
    SingleIndex(&'static str),

    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
