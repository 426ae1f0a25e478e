use std::collections::BTreeSet;

use thiserror::Error;

/// Failures of the tuple conversions and relation constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("variable `{0}` occurs more than once in the enumeration")]
    RepeatedVariable(String),
    #[error("enumeration covers {expected:?} but the tuple is indexed by {found:?}")]
    NameMismatch {
        expected: BTreeSet<String>,
        found: BTreeSet<String>,
    },
    #[error("expected a tuple of length {expected}, found length {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("relation row does not match the relation's index")]
    RowIndexMismatch,
    #[error("domain is empty")]
    EmptyDomain,
    #[error("invalid atom `{0}`")]
    InvalidAtom(String),
}
