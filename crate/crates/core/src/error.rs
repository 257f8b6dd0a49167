use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("virtual crossings (label 0) are not supported by this operation")]
    VirtualUnsupported,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("label error: {0}")]
    Label(String),
    #[error("ambiguous shape: list lengths fit both RG[{0},{1}] and RG[{2},{3}]; add an explicit RG[p,q] prefix")]
    AmbiguousShape(usize, usize, usize, usize),
    #[error("value out of range: {0}")]
    Range(String),
    #[error("dimension mismatch: RG[{0},{1}] vs RG[{2},{3}]")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("edge {0} is not a curl crossing")]
    NotACurl(usize),
    #[error("edges {0} and {1} do not bound a bigon face")]
    NotABigon(usize, usize),
    #[error("edges {0} and {1} bound a bigon but neither strand passes over both crossings")]
    SignMismatch(usize, usize),
    #[error("no R3 triangle at the given site: {0}")]
    NotATriangle(String),
    #[error("no grid pattern found: {0}")]
    PatternNotFound(String),
    #[error("reduction budget of {0} steps exhausted")]
    BudgetExceeded(usize),
    #[error("{0} crossings exceed the limit of {1}")]
    TooManyCrossings(usize, usize),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("code is not alternating: {0}")]
    NotAlternating(String),
    #[error("no canonical (p,q,m,n) form; obstructing edges {0:?}")]
    NotRepresentable(Vec<usize>),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("unlink detection inconclusive at {0} mirrors")]
    Unknown(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable error name, used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::VirtualUnsupported => "VirtualUnsupported",
            Error::Shape(_) => "ShapeError",
            Error::Label(_) => "LabelError",
            Error::AmbiguousShape(..) => "AmbiguousShape",
            Error::Range(_) => "RangeError",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::NotACurl(_) => "NotACurl",
            Error::NotABigon(..) => "NotABigon",
            Error::SignMismatch(..) => "SignMismatch",
            Error::NotATriangle(_) => "NotATriangle",
            Error::PatternNotFound(_) => "PatternNotFound",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::TooManyCrossings(..) => "TooManyCrossings",
            Error::TooLarge(_) => "TooLarge",
            Error::NotAlternating(_) => "NotAlternating",
            Error::NotRepresentable(_) => "NotRepresentable",
            Error::ParameterOutOfRange(_) => "ParameterOutOfRange",
            Error::Unknown(_) => "Unknown",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
        }
    }

    /// Parse and usage problems, as opposed to domain failures.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Shape(_) | Error::Label(_) | Error::AmbiguousShape(..) | Error::Parse(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
