use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Operations that are total on their documented domain return plain values;
/// everything that can reject its input goes through this enum so callers can
/// distinguish malformed data (`Shape*`), models that violate a structural
/// hypothesis (`NotEffective`, `InvalidFan`), and inputs outside an
/// operation's mathematical domain (the rest).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for {bound} entries")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("torsion invariants must be >= 2 and form a divisibility chain")]
    InvalidTorsion,

    #[error("grading is not effective: the degrees do not generate the group")]
    NotEffective,

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("degree lies outside the weight space")]
    OutsideWeightSpace,

    #[error("monomial is not relevant: its weight cone is not full-dimensional")]
    NotRelevant,

    #[error("orbit cone is not full-dimensional")]
    NotFullDimensional,

    #[error("grading group has rank zero")]
    RankZero,

    #[error("ray configuration does not span the ambient lattice")]
    RaysDoNotSpan,

    #[error("ray configuration is not Gale dual to the grading")]
    NotGaleDual,
}

pub type Result<T> = std::result::Result<T, Error>;
