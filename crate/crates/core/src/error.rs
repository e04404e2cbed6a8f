//! Error type shared by every module.

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("denominator vanishes in the field")]
    ZeroDenominator,
    #[error("superalgebra structures require characteristic different from 2")]
    CharacteristicTwo,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("map is not convolution-invertible")]
    NotConvolutionInvertible,
    #[error("bialgebra has no antipode")]
    NoAntipode,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("invalid coaction: {0}")]
    InvalidCoaction(String),
    #[error("coaction is not by group-likes: {0}")]
    NotGroupLikeCoaction(String),
    #[error("crossed system check failed: {0}")]
    CrossedSystemViolation(String),
    #[error("2-cochain is not a normalized cocycle: {0}")]
    CocycleViolation(String),
    #[error("no section found: {0}")]
    NoSectionFound(String),
    #[error("augmentation ideal is not square-zero")]
    NotSquareZero,
    #[error("kernel is not nilpotent")]
    KernelNotNilpotent,
    #[error("not a Hopf module: {0}")]
    NotHopfModule(String),
    #[error("algebra is not super-commutative")]
    NotSuperCommutative,
    #[error("internal verification failed: {0}")]
    Internal(String),
}
