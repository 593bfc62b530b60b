use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {constant} is not a unit (expected 1 or -1)")]
    NonUnitConstant { constant: BigInt },
    #[error("substitution q -> q^0 is not allowed")]
    ZeroSubstitution,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the brute-force oracle bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

/// Offsets are one-based byte positions; end of input is `len + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("unknown atom `{name}` at offset {offset}")]
    UnknownAtom { name: String, offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownAtom { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by `{denominator}` failed: {source}")]
    Division {
        denominator: String,
        #[source]
        source: SeriesError,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("theta arguments need r + s >= 1, got r = {r}, s = {s}")]
    DegenerateTheta { r: usize, s: usize },
    #[error("eta-quotient needs at least one factor")]
    EmptyEtaQuotient,
    #[error("eta-quotient step must be positive")]
    ZeroEtaStep,
    #[error("lattice dimension {0} is outside 1..=16")]
    LatticeDimension(usize),
    #[error("residue vector has length {found}, expected {expected}")]
    ResidueLength { expected: usize, found: usize },
    #[error("residue entries must be 0 or 1, found {0}")]
    ResidueEntry(u8),
}
