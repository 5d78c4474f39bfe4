use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix rows have unequal lengths")]
    RaggedRows,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("corank of V - V^T is {found}, expected r - 1 = {expected}")]
    CorankMismatch { expected: usize, found: usize },
    #[error("nondegenerate part of V - V^T is not unimodular (invariant {0})")]
    NotUnimodularSkew(String),
    #[error("matrix has odd size {0}")]
    OddSize(usize),
    #[error("basis change is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("{0}")]
    NotSymmetric(String),
    #[error("negative winding number {0}; reverse the pattern first")]
    NegativeWinding(i64),
    #[error("companion must be a knot (found {0} components)")]
    MultiComponentCompanion(usize),
    #[error("operation requires a knot (found {0} components)")]
    MultiComponent(usize),
    #[error("pattern carries no trivial-block certificate")]
    MissingCertificate,
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("omega is a root of the Alexander polynomial")]
    NotRegular,
    #[error("signature at omega = 1 is undefined")]
    OmegaIsOne,
    #[error("parameter {0} must be odd")]
    EvenParameter(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("inconsistent bounds for {invariant}: lower {lower} > upper {upper}")]
    InconsistentBounds {
        invariant: String,
        lower: i64,
        upper: i64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
