use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd: both inputs are zero")]
    UndefinedGcd,
    #[error("zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),
    #[error("degree 0 in `{0}`: resultant undefined")]
    DegreeZero(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero denominator in binding for `{0}`")]
    ZeroDenominator(String),
    #[error("pole at specialization s = {0}")]
    Pole(String),
    #[error("inconsistent alpha: {0}")]
    AlphaMismatch(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("not of type A: corank {0}")]
    NotTypeA(usize),
    #[error("jet order {0} exceeded")]
    JetOrderExceeded(u32),
    #[error("infinite intersection multiplicity: common component through the point")]
    InfiniteIntersection,
    #[error("contact order 0 gives no singularity")]
    NoSingularity,
    #[error("line is a component of the sextic")]
    LineInBranch,
    #[error("lines coincide")]
    SameLine,
    #[error("degenerate lattice: call radical_quotient first")]
    Degenerate,
    #[error("lattice spec: {0}")]
    LatticeSpec(String),
    #[error("odd lattice where an even one is required")]
    OddLattice,
    #[error("singular table mismatch: {0}")]
    TableMismatch(String),
    #[error("enumeration survivors disagree: {0}")]
    SurvivorMismatch(String),
    #[error("elimination failed: {0}")]
    Elimination(String),
    #[error("variable mismatch: expected `{expected}`, got `{got}`")]
    VariableMismatch { expected: String, got: String },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
