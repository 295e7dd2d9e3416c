use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for affine family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse affine type `{0}`")]
    ParseType(String),
    #[error("index {index} is out of range 1..={rank}")]
    IndexRange { index: usize, rank: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("q-binomial needs 0 <= k <= n, got n = {n}, k = {k}")]
    BinomialDomain { n: i64, k: i64 },
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("node {r} of {ty} is not cominuscule (marked label {label}); the module realization needs label 1")]
    NotCominuscule { ty: String, r: usize, label: i64 },
    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),
    #[error("not a Lyndon word: {0}")]
    NotLyndon(String),
    #[error("dual root vectors are not available for family {0}")]
    RootVectorsUnavailable(char),
    #[error("q-bracket vanished on its good word; the alphabet order conventions are inconsistent")]
    BracketDegenerate,
    #[error("operand lies outside the admitted span of this operator")]
    OutsideAdmittedSpan,
    #[error("result is not a scalar multiple of the expected vector")]
    NotProportional,
    #[error("closed-form fit failed; raw coefficients: {0:?}")]
    FitFailure(Vec<String>),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
