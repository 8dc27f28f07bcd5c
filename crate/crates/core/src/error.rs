use thiserror::Error;

/// Errors raised by the algebra toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ideal is not admissible: irreducible paths longer than {cap}")]
    NonAdmissible { cap: usize },
    #[error("ill-formed relation: {0}")]
    RelationIllFormed(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("algebra is not basic: {0}")]
    NotBasic(String),
    #[error("algebra is not split over the base field: {0}")]
    NotSplit(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("endomorphism algebra does not split over the base field")]
    NonSplitEndo,
    #[error("computation exceeded cap {cap}")]
    AboveCap { cap: usize },
    #[error("global dimension {gldim} exceeds n = {n}")]
    GldimTooLarge { gldim: usize, n: usize },
    #[error("not tau_n-finite within {cap} iterations (last nonzero iterate has dimension {last_dim})")]
    NotTauFinite { cap: usize, last_dim: usize },
    #[error("orbit scan hit the window cap {cap} before support separation")]
    WindowInconclusive { cap: usize },
    #[error("term in degree {0} is not projective")]
    TermNotProjective(i64),
    #[error("term in degree {0} is not injective")]
    TermNotInjective(i64),
    #[error("stage {stage} failed: {reason}")]
    StageFailed { stage: usize, reason: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
