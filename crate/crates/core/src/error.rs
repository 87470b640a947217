use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero polynomial has no squarefree test")]
    ZeroPolynomial,
    #[error("element is not purely odd")]
    NotOdd,
    #[error("element is not purely even")]
    NotEven,
    #[error("algebra `{0}` has no designated faithful representation")]
    MissingFaithfulRep(String),
    #[error("not a product of its center and simple ideals: {0}")]
    NotSemisimpleStructure(String),
    #[error("Cartan element acts non-semisimply or with irrational spectrum: {0}")]
    NonSemisimpleCartanAction(String),
    #[error("no split Cartan subalgebra found after {attempts} attempts")]
    CartanSearchFailed { attempts: usize },
    #[error("odd element is not in the semisimple-square cone")]
    NotInG1ss,
    #[error("module does not match the algebra: {0}")]
    ModuleMismatch(String),
    #[error("derivation is vanishing: 1 is not in the ideal generated by its image")]
    Vanishing,
    #[error("square of the derivation does not act semisimply with rational spectrum")]
    NonSemisimpleSquare,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
