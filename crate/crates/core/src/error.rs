use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("root of unity order must be odd and at least 3, got {0}")]
    InvalidOrder(u32),
    #[error("scalars belong to different cyclotomic fields")]
    FieldMismatch,
    #[error("invalid skew form: {0}")]
    InvalidForm(String),
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("lattice generator {generator:?} is not central")]
    LatticeNotCentral { generator: Vec<i64> },
    #[error("lattice does not contain N*Z^n")]
    LatticeTooSmall,
    #[error("basis is not closed: exponent {exponent:?} has no representative")]
    BasisNotClosed { exponent: Vec<i64> },
    #[error("pairing is degenerate")]
    DegeneratePairing,
    #[error("Gram matrix is not a generalized permutation matrix (row {row})")]
    NotMonomialPairing { row: usize },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("unsupported surface: {0}")]
    UnsupportedSurface(String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("index mismatch: expected length {expected}, got {got}")]
    IndexMismatch { expected: usize, got: usize },
    #[error("point lies in W (a and d both vanish)")]
    InsideW,
    #[error("matrix does not have determinant 1")]
    NotSpecialLinear,
    #[error("specialized quotient has dimension {got}, expected {expected}")]
    UnexpectedDimension { expected: usize, got: usize },
    #[error("algebra axiom violated: {0}")]
    AxiomViolated(String),
}
