use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("capacity exceeded: {what} is {got}, limit {limit}")]
    CapacityExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("invalid edge {{{0},{1}}}")]
    InvalidEdge(usize, usize),
    #[error("vertex {0} is outside 1..={1}")]
    InvalidVertex(usize, usize),
    #[error("face family is not closed under taking subsets")]
    NotDownwardClosed,
    #[error("the void complex has no reduced homology or Hilbert series")]
    VoidComplex,
    #[error("ideal is zero")]
    IdealZero,
    #[error("ideal is not proper")]
    IdealImproper,
    #[error("variable x{0} appears in no minimal generator")]
    VariableAbsent(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("im <= reg <= m violated: im={im} reg={reg} m={m}")]
    SandwichViolation { im: usize, reg: usize, m: usize },
    #[error("{0} is not an independent set")]
    NotIndependent(String),
    #[error("{{{0},{1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} of S is adjacent to, or equal to, an endpoint of the edge")]
    AdjacencyViolation(usize),
    #[error("|S| = {size} is outside 0..={dpow}")]
    SizeOutOfRange { size: usize, dpow: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("regularity {0} is below 2")]
    RegularityTooSmall(usize),
    #[error("deg h = {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("invalid triple (a, r, s) = ({0}, {1}, {2}): need 1 <= a <= r and s >= 1")]
    InvalidTriple(usize, usize, usize),
    #[error("no verified base graph with im = 1 and reg = dim = {0} is available")]
    BaseUnavailable(usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("oracle input too large: {what} is {got}, limit {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },
}

impl Error {
    /// The variant name, for messages that must name the violated condition.
    pub fn name(&self) -> &'static str {
        match self {
            Error::CapacityExceeded { .. } => "CapacityExceeded",
            Error::InvalidEdge(..) => "InvalidEdge",
            Error::InvalidVertex(..) => "InvalidVertex",
            Error::NotDownwardClosed => "NotDownwardClosed",
            Error::VoidComplex => "VoidComplex",
            Error::IdealZero => "IdealZero",
            Error::IdealImproper => "IdealImproper",
            Error::VariableAbsent(_) => "VariableAbsent",
            Error::NoEdges => "NoEdges",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::SandwichViolation { .. } => "SandwichViolation",
            Error::NotIndependent(_) => "NotIndependent",
            Error::NotAnEdge(..) => "NotAnEdge",
            Error::AdjacencyViolation(_) => "AdjacencyViolation",
            Error::SizeOutOfRange { .. } => "SizeOutOfRange",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::NotPrime(_) => "NotPrime",
            Error::RegularityTooSmall(_) => "RegularityTooSmall",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::InvalidTriple(..) => "InvalidTriple",
            Error::BaseUnavailable(_) => "BaseUnavailable",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::TooLarge { .. } => "TooLarge",
        }
    }
}
