use thiserror::Error;

use crate::conjugation::CycleSeq;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NonSquare { row: usize, len: usize, n: usize },
    #[error("matrix is empty")]
    Empty,
    #[error("diagonal entry m({0},{0}) is nonzero")]
    NonzeroDiagonal(usize),
    #[error("integer overflow")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("images do not form a permutation of 0..{0}")]
    NotBijective(usize),
    #[error("weights sum to zero")]
    ZeroWeights,
    #[error("weight {0} is negative")]
    NegativeWeight(usize),

    #[error("triangle inequality fails: m({i},{k}) + m({k},{j}) < m({i},{j})")]
    NotTiledOrder { i: usize, k: usize, j: usize },
    #[error("order is not basic: m({0},{1}) + m({1},{0}) <= 0")]
    NotBasic(usize, usize),
    #[error("order is not N-graded: m({0},{1}) < 0")]
    NotNGraded(usize, usize),
    #[error("no Nakayama partner exists for index {0}")]
    NotGorenstein(usize),
    #[error("more than one Nakayama partner for index {0}")]
    AmbiguousNakayama(usize),
    #[error("average over orbit {0} differs from the global average")]
    NonConstantOrbitAverage(usize),

    #[error("enumeration limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
    #[error("cycle must have length at least 2")]
    CycleTooShort,
    #[error("cycle repeats index {0}")]
    CycleNotMultiplicityFree(usize),
    #[error("negative cycle {0}")]
    NegativeCycle(CycleSeq),
    #[error("diagonal entry m({0},{0}) is negative")]
    NegativeDiagonal(usize),
    #[error("cycle does not attain the minimal cycle sum")]
    NotMinCycle,
    #[error("non-integral sum: {r}/{g} * {n} is not an integer")]
    NotIntegralSum { r: i64, g: i64, n: usize },
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(i64),

    #[error("equivariance fails at ({0},{1})")]
    EquivarianceViolation(usize, usize),
    #[error("orbits {0} and {1} have different averages")]
    OrbitAverageMismatch(usize, usize),
    #[error("m-data is not of floor type")]
    NotFloorType,
    #[error("m is not periodic under the g-th power of nu at ({0},{1})")]
    PeriodicityViolation(usize, usize),

    #[error("exponent vector does not define a lattice")]
    InvalidLattice,
    #[error("Gorenstein parameter p_{0} is positive")]
    PositiveParameter(usize),
    #[error("summand vectors for labels {0:?} and {1:?} coincide")]
    DuplicateSummand((usize, i64), (usize, i64)),

    #[error("postcondition failed: {0}")]
    Postcondition(&'static str),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonSquare { .. } => "NonSquare",
            Error::Empty => "Empty",
            Error::NonzeroDiagonal(_) => "NonzeroDiagonal",
            Error::Overflow => "Overflow",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotBijective(_) => "NotBijective",
            Error::ZeroWeights => "ZeroWeights",
            Error::NegativeWeight(_) => "NegativeWeight",
            Error::NotTiledOrder { .. } => "NotTiledOrder",
            Error::NotBasic(..) => "NotBasic",
            Error::NotNGraded(..) => "NotNGraded",
            Error::NotGorenstein(_) => "NotGorenstein",
            Error::AmbiguousNakayama(_) => "AmbiguousNakayama",
            Error::NonConstantOrbitAverage(_) => "NonConstantOrbitAverage",
            Error::TooLarge { .. } => "TooLarge",
            Error::CycleTooShort => "CycleTooShort",
            Error::CycleNotMultiplicityFree(_) => "CycleNotMultiplicityFree",
            Error::NegativeCycle(_) => "NegativeCycle",
            Error::NegativeDiagonal(_) => "NegativeDiagonal",
            Error::NotMinCycle => "NotMinCycle",
            Error::NotIntegralSum { .. } => "NotIntegralSum",
            Error::NonPositiveDenominator(_) => "NonPositiveDenominator",
            Error::EquivarianceViolation(..) => "EquivarianceViolation",
            Error::OrbitAverageMismatch(..) => "OrbitAverageMismatch",
            Error::NotFloorType => "NotFloorType",
            Error::PeriodicityViolation(..) => "PeriodicityViolation",
            Error::InvalidLattice => "InvalidLattice",
            Error::PositiveParameter(_) => "PositiveParameter",
            Error::DuplicateSummand(..) => "DuplicateSummand",
            Error::Postcondition(_) => "Postcondition",
        }
    }

    /// Integer witness attached to the error, if any.
    pub fn witness(&self) -> Option<Vec<i64>> {
        let w = |xs: &[usize]| Some(xs.iter().map(|&x| x as i64).collect());
        match self {
            Error::NonzeroDiagonal(i)
            | Error::NotGorenstein(i)
            | Error::AmbiguousNakayama(i)
            | Error::NonConstantOrbitAverage(i)
            | Error::NegativeDiagonal(i)
            | Error::PositiveParameter(i)
            | Error::NegativeWeight(i)
            | Error::CycleNotMultiplicityFree(i) => w(&[*i]),
            Error::NotTiledOrder { i, k, j } => w(&[*i, *k, *j]),
            Error::NotBasic(i, j)
            | Error::NotNGraded(i, j)
            | Error::EquivarianceViolation(i, j)
            | Error::OrbitAverageMismatch(i, j)
            | Error::PeriodicityViolation(i, j) => w(&[*i, *j]),
            Error::NegativeCycle(c) => w(c.indices()),
            Error::IndexOutOfRange { index, .. } => w(&[*index]),
            _ => None,
        }
    }
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn check_sum(xs: &[i64]) -> Result<i64> {
    xs.iter().try_fold(0i64, |acc, &x| add(acc, x))
}
