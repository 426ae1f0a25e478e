use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::{DomainValue, OrdRelation, OrdTuple, TupleError, VarOrder, VarRelation, VarTuple};

/// `d = chi . x`: reads `chi` off in the order given by `order`.
pub fn make_ordinal_tuple(order: &VarOrder, chi: &VarTuple) -> Result<OrdTuple, TupleError> {
    order.check_enumerates(&chi.names())?;
    Ok(order
        .iter()
        .map(|name| chi.get(name).cloned().expect("names checked above"))
        .collect())
}

/// `chi = d . x^-1`.
pub fn invert_tuple(order: &VarOrder, d: &OrdTuple) -> Result<VarTuple, TupleError> {
    if order.len() != d.len() {
        return Err(TupleError::LengthMismatch {
            expected: order.len(),
            found: d.len(),
        });
    }
    Ok(order
        .iter()
        .zip(d.values())
        .map(|(name, value)| (name, value.clone()))
        .collect())
}

/// `{ lambda x. p | p in P }`: converts every row of a variable-indexed
/// relation. Cardinality is preserved because `order` is a bijection.
pub fn lift_relation(order: &VarOrder, rel: &VarRelation) -> Result<OrdRelation, TupleError> {
    order.check_enumerates(rel.vars())?;
    let rows = rel
        .rows()
        .iter()
        .map(|row| make_ordinal_tuple(order, row))
        .collect::<Result<Vec<_>, _>>()?;
    OrdRelation::from_rows(order.len(), rows)
}

type VarFn = dyn Fn(&VarTuple) -> DomainValue + Send + Sync;
type OrdFn = dyn Fn(&[DomainValue]) -> DomainValue + Send + Sync;

/// A function of type `(X -> D) -> D`, the meaning of an expression whose
/// free variables are `X`.
#[derive(Clone)]
pub struct Binding {
    vars: BTreeSet<String>,
    f: Arc<VarFn>,
}

impl Binding {
    pub fn new<F>(vars: BTreeSet<String>, f: F) -> Self
    where
        F: Fn(&VarTuple) -> DomainValue + Send + Sync + 'static,
    {
        Binding { vars, f: Arc::new(f) }
    }

    pub fn vars(&self) -> &BTreeSet<String> {
        &self.vars
    }

    pub fn apply(&self, chi: &VarTuple) -> Result<DomainValue, TupleError> {
        if chi.names() != self.vars {
            return Err(TupleError::NameMismatch {
                expected: self.vars.clone(),
                found: chi.names(),
            });
        }
        Ok((self.f)(chi))
    }
}

impl fmt::Debug for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Binding").field("vars", &self.vars).finish_non_exhaustive()
    }
}

/// A total function `D^n -> D`.
#[derive(Clone)]
pub struct OrdFunction {
    arity: usize,
    f: Arc<OrdFn>,
}

impl OrdFunction {
    pub fn new<F>(arity: usize, f: F) -> Self
    where
        F: Fn(&[DomainValue]) -> DomainValue + Send + Sync + 'static,
    {
        OrdFunction { arity, f: Arc::new(f) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn apply(&self, args: &[DomainValue]) -> Result<DomainValue, TupleError> {
        if args.len() != self.arity {
            return Err(TupleError::LengthMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        Ok((self.f)(args))
    }
}

impl fmt::Debug for OrdFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrdFunction").field("arity", &self.arity).finish_non_exhaustive()
    }
}

/// `g = lambda x. f`, characterised by `g(lambda x. chi) = f(chi)`.
pub fn lift_function(order: &VarOrder, binding: &Binding) -> Result<OrdFunction, TupleError> {
    order.check_enumerates(binding.vars())?;
    let order = order.clone();
    let binding = binding.clone();
    Ok(OrdFunction::new(order.len(), move |args| {
        let chi = invert_tuple(&order, &OrdTuple::new(args.to_vec()))
            .expect("arity checked by OrdFunction::apply");
        (binding.f)(&chi)
    }))
}
