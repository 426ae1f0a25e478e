//! Flowcharts over natural-number locations.
//!
//! A flowchart is a set of nodes joined by boxes (assignments or procedure
//! calls) and tests, with one start and one halt node. Procedure-free
//! flowcharts have two semantics that define the same relation on data
//! states: running the machine, and closing a node-indexed matrix of
//! relations. Procedures take their parameters by name.

mod error;
mod machine;
mod procedure;
mod relation;
mod state;
mod syntax;
mod validate;

pub use error::FlowError;
pub use machine::{run, step, RunOutcome};
pub use procedure::{
    expand_call, run_program, Environment, Expansion, Limits, ProgramOutcome, RenamePolicy, Store,
};
pub use relation::{all_states, declarative_relation, operational_relation, StateRelation};
pub use state::{eval_bool, eval_expr, DataState, MachineState};
pub use syntax::{Body, BoolExpr, Expr, FlowBox, Flowchart, NodeId, Outgoing, ProcDecl, Procedure, Stmt, Test};
pub use validate::{validate, validate_body, validate_program};

pub use lamech_core::{FreshNameSupply, VarOrder};
