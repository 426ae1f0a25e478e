use std::collections::BTreeSet;

use lamech_core::TupleError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("variable `{0}` has no value in the assignment")]
    UnboundVariable(String),
    #[error("symbol `{0}` is not interpreted")]
    UnknownSymbol(String),
    #[error("symbol `{symbol}` takes {expected} arguments, given {found}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("`{0}` cannot be defined recursively or redefined")]
    RecursiveDefinition(String),
    #[error("value `{0}` is not in the carrier")]
    ValueOutsideCarrier(String),
    #[error("predicate `{0}` is defined more than once")]
    DuplicateDefinedPredicate(String),
    #[error("`{pred}` enumerates {order:?} but its body has free variables {free:?}")]
    FreeVarEnumerationMismatch {
        pred: String,
        order: Vec<String>,
        free: BTreeSet<String>,
    },
    #[error("`{pred}`: {connective} is not allowed in a definition body")]
    IllegalBodyConnective { pred: String, connective: &'static str },
    #[error("`{0}` has an empty body")]
    EmptyBody(String),
    #[error("defined predicate `{0}` is already interpreted by the base interpretation")]
    DefinedPredicateInterpreted(String),
    #[error("no candidate relation for `{0}`")]
    MissingCandidate(String),
    #[error("no fixpoint after {0} rounds")]
    RoundLimit(usize),
    #[error(transparent)]
    Tuple(#[from] TupleError),
}
