//! First-order predicate logic as a small programming language.
//!
//! * [`eval_term`], [`eval_formula`] and [`denotation`] give Tarski-style
//!   meanings under a finite [`Interpretation`].
//! * [`extend_with_function`] adds a new function symbol whose meaning is a
//!   term read through an enumeration of its variables.
//! * [`PredicateExtension`] defines possibly mutually recursive relations;
//!   [`minimal_model`] computes their least model by Kleene iteration.

mod error;
mod eval;
mod extend;
mod extension;
mod interp;
mod syntax;

pub use error::LogicError;
pub use eval::{check_formula, check_term, denotation, denotation_over, eval_formula, eval_term};
pub use extend::extend_with_function;
pub use extension::{
    corresponding_formula, is_model, kleene_chain, minimal_model, validate_extension, Candidates,
    DfpContext, MinimalModel, PredicateDef, PredicateExtension,
};
pub use interp::{Interpretation, EQUALITY, LESS, PLUS, SUCC, TIMES};
pub use syntax::{Formula, Term};

pub use lamech_core::{Domain, DomainValue, OrdRelation, OrdTuple, VarOrder, VarRelation, VarTuple};

/// Assignments are variable-indexed tuples.
pub type Assignment = VarTuple;
