use crate::mask::Mask;

/// Errors shared by oracle construction and the exhaustive operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("negative value in {context}")]
    NegativeValue { context: &'static str },

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("ground set of size {n} exceeds the representation cap {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("ground set of size {n} exceeds the exhaustive guard {max}")]
    ExhaustiveGuardExceeded { n: usize, max: usize },

    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("separating pair must be two distinct elements")]
    IdenticalPair,

    #[error("function is nonzero on {which}")]
    BoundaryNonzero { which: &'static str },

    #[error("function is not symmetric; witness subset {witness:?}")]
    NotSymmetric { witness: Mask },

    #[error("function is negative on subset {witness:?}")]
    NegativeOnSubset { witness: Mask },

    #[error("constructed tree failed the Gomory-Hu edge property (internal error)")]
    GomoryHuValidationFailed,

    #[error("budget must be positive")]
    ZeroBudget,

    #[error("at least one element value must be positive")]
    AllValuesZero,

    #[error("integer-lifted budget or values too large for the coverage construction")]
    LiftedBudgetTooLarge,

    #[error("operation requires a budgeted additive oracle")]
    NotBudgetedAdditive,

    #[error("profile is not concave at index {index}")]
    NotConcaveProfile { index: usize },

    #[error("profile is not monotone nondecreasing at index {index}")]
    NotMonotoneProfile { index: usize },

    #[error("profile must start at zero")]
    ProfileNotZeroBased,

    #[error("decomposition failed to reconstruct the input (internal error)")]
    ReconstructionFailed,

    #[error("value at index {index} is not an integer")]
    NonIntegerValues { index: usize },

    #[error("bad hard-instance specification: {reason}")]
    BadInstanceSpec { reason: String },

    #[error("instance with ground set {n} exceeds the enumeration cap {max}")]
    InstanceTooLarge { n: usize, max: usize },

    #[error("edge set does not form a spanning tree: {reason}")]
    NotASpanningTree { reason: &'static str },

    #[error("operation requires a rational-valued oracle (sqrt-modular is not)")]
    IrrationalOracle,

    #[error("scaled sums may not contain sqrt-modular terms")]
    SqrtInScaledSum,

    #[error("hitting weights must be indexed by nonempty subsets")]
    EmptyHittingSet,

    #[error("expected a nonempty list of subsets")]
    EmptySetList,
}

pub type Result<T> = std::result::Result<T, Error>;
