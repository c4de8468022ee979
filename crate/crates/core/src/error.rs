use thiserror::Error;

use crate::groups::GroupId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix has {got} entries, expected {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("boundary composite is nonzero at degree {degree}")]
    BoundarySquareNonzero { degree: i64 },

    #[error("group {0} is not in the catalogue")]
    NotInCatalogue(String),

    #[error("unknown group name `{0}`")]
    UnknownGroupName(String),

    #[error("no integer character table for {0}")]
    UnsupportedCharacterTable(GroupId),

    #[error("character data for {group} is inconsistent: {reason}")]
    CorruptTable { group: GroupId, reason: String },

    #[error("{0} has an irreducible character with indicator other than 1")]
    HypothesisFails(GroupId),

    #[error("Z{d} does not embed in Z{m}")]
    NotDivisor { d: u64, m: u64 },

    #[error("invalid induction {spec} from {source_group} to {target_group}")]
    InductionMismatch {
        spec: String,
        source_group: GroupId,
        target_group: GroupId,
    },

    #[error("unresolved cell label `{label}` in dimension {dim}")]
    UnresolvedLabel { label: String, dim: usize },

    #[error("duplicate cell label `{label}` in dimension {dim}")]
    DuplicateLabel { label: String, dim: usize },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p = {0} is not congruent to 11 mod 12")]
    WrongResidue(u64),

    #[error("unexpected torsion in {0}")]
    UnexpectedTorsion(String),

    #[error("forced rank is negative: {0}")]
    NegativeRank(String),

    #[error("collapse not justified: H{degree} is nonzero")]
    CollapseNotJustified { degree: usize },

    #[error("page has a nonzero column at p = {column}; only single-column pages collapse")]
    MultiColumnPage { column: usize },

    #[error("Kunneth operator requires torsion-free input, got {0} in degree {1}")]
    TorsionInKunneth(String, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }

    /// Errors that point at a malformed input file rather than at the
    /// mathematics: syntax, unknown names, dangling or repeated labels.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::UnknownGroupName(_)
                | Error::UnresolvedLabel { .. }
                | Error::DuplicateLabel { .. }
        )
    }
}
