//! Shared vocabulary for the lambda-mechanism workbench.
//!
//! An expression with a set `X` of free variables denotes a function on
//! variable-indexed tuples `X -> D`. Defining an `n`-ary function or relation
//! from it requires ordinal-indexed tuples `n -> D` instead. Given an
//! enumeration `x: n -> X` of the variables (a [`VarOrder`]), the two are
//! related by composition: `d = chi . x` and `chi = d . x^-1`.
//!
//! This crate provides the tuple types on both sides and the three lifts
//! built on that conversion:
//!
//! * [`make_ordinal_tuple`] / [`invert_tuple`] for single tuples,
//! * [`lift_relation`] for sets of tuples,
//! * [`lift_function`] for functions on tuples.

mod error;
pub mod fresh;
mod lift;
mod relation;
mod tuple;
mod value;

pub use error::TupleError;
pub use fresh::FreshNameSupply;
pub use lift::{invert_tuple, lift_function, lift_relation, make_ordinal_tuple, Binding, OrdFunction};
pub use relation::{OrdRelation, VarRelation};
pub use tuple::{OrdTuple, VarOrder, VarTuple};
pub use value::{Domain, DomainKind, DomainValue};
