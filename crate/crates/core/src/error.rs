use thiserror::Error;

/// Rejections from Kupisch series and relation system validation.
///
/// Vertex indices in messages are 1-based, matching the usual labelling of the
/// quiver `1 → 2 → … → n → 1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("bad rank: expected {expected} lengths for rank {rank}, got {found}")]
    BadRank {
        rank: usize,
        expected: usize,
        found: usize,
    },
    #[error("length {value} at index {index} is too short (every projective needs length >= 2)")]
    TooShort { index: usize, value: usize },
    #[error(
        "series is not admissible at index {index}: c[{index}] = {value} < c[{previous_index}] - 1 = {}",
        previous - 1
    )]
    NotAdmissible {
        index: usize,
        value: usize,
        previous_index: usize,
        previous: usize,
    },
    #[error("invalid relation system: {0}")]
    InvalidRelations(String),
    #[error("inconsistent relations: {0}")]
    InconsistentRelations(String),
    #[error("invalid enumeration spec: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("vertex {top} is out of range 1..={rank}")]
    InvalidVertex { top: usize, rank: usize },
    #[error("no uniserial module with top {top} and length {len}: P_{top} has length {max}")]
    InvalidLength { top: usize, len: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("module (top={top}, len={len}) has no B-filtration")]
    NotFilterable { top: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EpsilonError {
    #[error("the syzygy filtered algebra is only defined for non-selfinjective algebras")]
    SelfinjectiveInput,
    /// The block counts form a Nakayama algebra whose quiver is not a full
    /// cycle (some block-count is 1). This happens for some algebras of finite
    /// global dimension and lies outside the cyclic model.
    #[error("syzygy filtered algebra is not cyclic: block counts {series:?}")]
    NotCyclic { series: Vec<usize> },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Text-format errors for Kupisch series, relation systems and module specs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse token {token:?} at position {index}: {reason}")]
    Token {
        token: String,
        index: usize,
        reason: String,
    },
    #[error("malformed input {input:?}: {reason}")]
    Malformed { input: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
