use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad classes of failure, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// A configured size or count cap was exceeded.
    Capacity,
    /// Malformed input, or a hypothesis of the requested operation does not hold.
    Input,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0},{1}) is not present")]
    EdgeAbsent(usize, usize),
    #[error("edge ({0},{1}) is already present")]
    EdgeCollision(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid edge ({0},{1}): loops are not allowed")]
    Loop(usize, usize),
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("expected {expected} colors, got {got}")]
    ColorLengthMismatch { expected: usize, got: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("bad cycle notation: {0}")]
    BadCycleNotation(String),
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: u64 },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("vertex set is not invariant under the group")]
    NotInvariant,
    #[error("bad group spec: {0}")]
    BadGroupSpec(String),

    #[error("one graph is colored and the other is not")]
    ColorArityMismatch,
    #[error("graphs carry different color sequences")]
    ColorMismatch,

    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph has no end vertices")]
    NoEndVertices,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("inconsistent deck: {0}")]
    InconsistentDeck(String),
    #[error("deck fits more than one attachment profile: {0:?}")]
    AmbiguousProfile(Vec<Vec<usize>>),
    #[error("class index {0} out of range")]
    ClassOutOfRange(usize),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("{m} edges means 2^{m} subsets, above the cap of {cap}")]
    SubsetCapExceeded { m: usize, cap: u64 },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error("{count} candidates exceed the cap of {cap}")]
    CandidateCapExceeded { count: u128, cap: u64 },

    #[error("graph is disconnected")]
    Disconnected,
    #[error("pruned graph has no edges")]
    EmptyPrunedGraph,
    #[error("pruned graph is disconnected")]
    DisconnectedPrunedGraph,
    #[error("graph has no cut vertex")]
    NotSeparable,
    #[error("pruned center is not 3-connected")]
    CenterNotThreeConnected,
    #[error("pruned center is a cut vertex, not a block")]
    CenterIsCutVertex,
    #[error("vertex {0} is not an end vertex")]
    NotEndVertex(usize),

    #[error("enumeration cap exceeded: {0}")]
    EnumerationCapExceeded(String),
    #[error("profile needs {needed} base vertices, only {available} available")]
    ProfileTooLarge { needed: usize, available: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::OrderCapExceeded { .. }
            | Error::SubsetCapExceeded { .. }
            | Error::CandidateCapExceeded { .. }
            | Error::EnumerationCapExceeded(_)
            | Error::TooManyVertices { .. } => ErrorClass::Capacity,
            _ => ErrorClass::Input,
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EdgeAbsent(..) => "EdgeAbsent",
            Error::EdgeCollision(..) => "EdgeCollision",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::Loop(..) => "Loop",
            Error::TooManyVertices { .. } => "TooManyVertices",
            Error::MalformedGraph6(_) => "MalformedGraph6",
            Error::ColorLengthMismatch { .. } => "ColorLengthMismatch",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::BadCycleNotation(_) => "BadCycleNotation",
            Error::OrderCapExceeded { .. } => "OrderCapExceeded",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NotInvariant => "NotInvariant",
            Error::BadGroupSpec(_) => "BadGroupSpec",
            Error::ColorArityMismatch => "ColorArityMismatch",
            Error::ColorMismatch => "ColorMismatch",
            Error::EmptyGraph => "EmptyGraph",
            Error::NoEndVertices => "NoEndVertices",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::InconsistentDeck(_) => "InconsistentDeck",
            Error::AmbiguousProfile(_) => "AmbiguousProfile",
            Error::ClassOutOfRange(_) => "ClassOutOfRange",
            Error::HypothesisNotMet(_) => "HypothesisNotMet",
            Error::SubsetCapExceeded { .. } => "SubsetCapExceeded",
            Error::NotBipartite => "NotBipartite",
            Error::NotTwoEdgeConnected => "NotTwoEdgeConnected",
            Error::CandidateCapExceeded { .. } => "CandidateCapExceeded",
            Error::Disconnected => "Disconnected",
            Error::EmptyPrunedGraph => "EmptyPrunedGraph",
            Error::DisconnectedPrunedGraph => "DisconnectedPrunedGraph",
            Error::NotSeparable => "NotSeparable",
            Error::CenterNotThreeConnected => "CenterNotThreeConnected",
            Error::CenterIsCutVertex => "CenterIsCutVertex",
            Error::NotEndVertex(_) => "NotEndVertex",
            Error::EnumerationCapExceeded(_) => "EnumerationCapExceeded",
            Error::ProfileTooLarge { .. } => "ProfileTooLarge",
            Error::Precondition(_) => "Precondition",
        }
    }
}
