use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group of order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("class {class} is not valid for group {group}")]
    InvalidClass { group: String, class: String },
    #[error("restriction from {group} to {subgroup} is not supported")]
    UnsupportedPair { group: String, subgroup: String },
    #[error("{class} is not subconjugate to {subgroup}")]
    NotSubconjugate { class: String, subgroup: String },
    #[error("no separating clopen set is implemented for {class} in {group}")]
    UnsupportedInstance { group: String, class: String },
    #[error("operands live over different spaces")]
    SpaceMismatch,
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("malformed class-set descriptor: {0}")]
    MalformedDescriptor(String),
    #[error("malformed expression: {0}")]
    MalformedExpr(String),
    #[error("group {0} is not finite")]
    NotFinite(String),
    #[error("expression is not finite: {0}")]
    NotFiniteExpr(String),
    #[error("set is not realizable: {0}")]
    NotRealizable(String),
    #[error("{0} and {1} are cotorally related")]
    NotUnrelated(String, String),
    #[error("invalid wide sphere: {0}")]
    InvalidWideSphere(String),
    #[error("malformed Laurent polynomial: {0}")]
    MalformedPoly(String),
    #[error("homotopy class has {got} coordinates, group has dimension {expected}")]
    ClassNotInGroup { expected: usize, got: usize },
    #[error("split attachment needs an untwisted part in degree parity of {0}")]
    SplitUnavailable(i64),
    #[error("total dimension {dim} exceeds the exact classification limit {limit}")]
    TooLargeModel { dim: usize, limit: usize },
    #[error("isomorphism classes form a continuous family for {0}")]
    ContinuousModuli(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAGroup(_) => "NotAGroup",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidClass { .. } => "InvalidClass",
            Error::UnsupportedPair { .. } => "UnsupportedPair",
            Error::NotSubconjugate { .. } => "NotSubconjugate",
            Error::UnsupportedInstance { .. } => "UnsupportedInstance",
            Error::SpaceMismatch => "SpaceMismatch",
            Error::GroupMismatch => "GroupMismatch",
            Error::MalformedDescriptor(_) => "MalformedDescriptor",
            Error::MalformedExpr(_) => "MalformedExpr",
            Error::NotFinite(_) => "NotFinite",
            Error::NotFiniteExpr(_) => "NotFinite",
            Error::NotRealizable(_) => "NotRealizable",
            Error::NotUnrelated(..) => "NotUnrelated",
            Error::InvalidWideSphere(_) => "InvalidWideSphere",
            Error::MalformedPoly(_) => "MalformedPoly",
            Error::ClassNotInGroup { .. } => "ClassNotInGroup",
            Error::SplitUnavailable(_) => "SplitUnavailable",
            Error::TooLargeModel { .. } => "TooLarge",
            Error::ContinuousModuli(_) => "ContinuousModuli",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
        }
    }
}
