use thiserror::Error;

/// Errors raised across the workbench.
///
/// Mathematical "negative" outcomes (a map that is not an automorphism, a
/// bracket that fails Jacobi) are returned as data by the checking
/// operations; the variants here are raised by operations whose
/// preconditions do not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("element is zero")]
    ZeroElement,

    #[error("division by the zero polynomial")]
    DivisorZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("exponent overflow (degrees are capped at 2^31)")]
    ExponentOverflow,

    #[error("Groebner basis computation exceeded the S-polynomial degree budget {0}")]
    DegreeBudgetExceeded(u32),

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("potential is zero")]
    ZeroPotential,

    #[error("bracket is not quadratic")]
    NotQuadratic,

    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    JacobiFails(String, String, String),

    #[error("Lie-Jacobi identity fails on (x{0}, x{1}, x{2})")]
    LieJacobiFails(usize, usize, usize),

    #[error("normal element does not split off: {0}")]
    NotSplittable(String),

    #[error("element is not Poisson normal")]
    NotNormal,

    #[error("map is not a Poisson automorphism (pair {0}, {1})")]
    NotAutomorphism(String, String),

    #[error("map is not a reflection")]
    NotReflection,

    #[error("map does not have finite order")]
    InfiniteOrder,

    #[error("group closure exceeded {0} elements")]
    BoundExceeded(usize),

    #[error("degree bound {0} is too small to certify the invariant ring")]
    DegreeBoundTooSmall(u32),

    #[error("bracket of invariants leaves the generated subalgebra: {0}")]
    InducedBracketNotClosed(String),

    #[error("derived ideal is not monomial in the given coordinates")]
    NotMonomial,

    #[error("degree {0} exceeds the configured cap {1}")]
    CapExceeded(u32, u32),

    #[error("solution set could not be enumerated")]
    Inconclusive,

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable identifier for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::ZeroElement => "zero-element",
            Error::DivisorZero => "divisor-zero",
            Error::SingularMatrix => "singular-matrix",
            Error::Dimension(_) => "dimension",
            Error::ExponentOverflow => "exponent-overflow",
            Error::DegreeBudgetExceeded(_) => "degree-budget-exceeded",
            Error::NotSkew => "not-skew",
            Error::ZeroPotential => "zero-potential",
            Error::NotQuadratic => "not-quadratic",
            Error::JacobiFails(..) => "jacobi-fails",
            Error::LieJacobiFails(..) => "lie-jacobi-fails",
            Error::NotSplittable(_) => "not-splittable",
            Error::NotNormal => "not-normal",
            Error::NotAutomorphism(..) => "not-automorphism",
            Error::NotReflection => "not-reflection",
            Error::InfiniteOrder => "infinite-order",
            Error::BoundExceeded(_) => "bound-exceeded",
            Error::DegreeBoundTooSmall(_) => "degree-bound-too-small",
            Error::InducedBracketNotClosed(_) => "induced-bracket-not-closed",
            Error::NotMonomial => "not-monomial",
            Error::CapExceeded(..) => "cap-exceeded",
            Error::Inconclusive => "inconclusive",
            Error::Input(_) => "input",
        }
    }

    /// A negative answer to the question asked, as opposed to a failure
    /// to answer it.
    pub fn is_negative_finding(&self) -> bool {
        matches!(
            self,
            Error::JacobiFails(..)
                | Error::LieJacobiFails(..)
                | Error::NotSplittable(_)
                | Error::NotNormal
                | Error::NotAutomorphism(..)
                | Error::NotReflection
                | Error::InfiniteOrder
        )
    }
}
