use std::collections::BTreeSet;

use thiserror::Error;

use crate::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("node {0} is the entry of more than one box or test")]
    MultipleEntry(NodeId),
    #[error("start node {0} is the exit of a box or test")]
    StartIsExit(NodeId),
    #[error("halt node {0} is the entry of a box or test")]
    HaltIsEntry(NodeId),
    #[error("node {0} is referenced but not declared")]
    DanglingNode(NodeId),
    #[error("identifier {0} is neither declared nor a formal parameter")]
    UndeclaredIdentifier(String),
    #[error("call of {0} in a flowchart without procedures")]
    CallWithoutProcedures(String),
    #[error("procedure {0} is declared more than once")]
    DuplicateProcedure(String),
    #[error("{0} is declared both as a location and as a procedure")]
    LocationProcedureClash(String),
    #[error("formals ({formals}) of {proc} do not enumerate its undeclared identifiers {{{}}}", free.iter().cloned().collect::<Vec<_>>().join(", "))]
    FormalsMismatch { proc: String, formals: String, free: BTreeSet<String> },
    #[error("main procedure has formal parameters")]
    MainHasFormals,
    #[error("identifier {0} is unbound")]
    UnboundIdentifier(String),
    #[error("unknown procedure {0}")]
    UnknownProcedure(String),
    #[error("{proc} expects {expected} actual parameters, got {found}")]
    ArityMismatch { proc: String, expected: usize, found: usize },
    #[error("formal {formal} of {proc} is assigned to but its actual is not an identifier")]
    NonIdentifierActualForAssignedFormal { proc: String, formal: String },
    #[error("actual parameter {name} of {proc} names a procedure")]
    ProcedureActual { proc: String, name: String },
    #[error("control at {0}, which has no outgoing box or test")]
    Stuck(NodeId),
    #[error("data state does not assign exactly the declared locations")]
    DataStateMismatch,
}
