use std::collections::BTreeSet;

use lamech_core::{DomainValue, OrdTuple, VarRelation, VarTuple};

use crate::{Formula, Interpretation, LogicError, Term};

pub fn eval_term(interp: &Interpretation, alpha: &VarTuple, t: &Term) -> Result<DomainValue, LogicError> {
    match t {
        Term::Var(x) => alpha
            .get(x)
            .cloned()
            .ok_or_else(|| LogicError::UnboundVariable(x.clone())),
        Term::Const(c) => interp
            .constant(c)
            .ok_or_else(|| LogicError::UnknownSymbol(c.clone())),
        Term::FnApp(f, args) => {
            let func = interp
                .function(f)
                .ok_or_else(|| LogicError::UnknownSymbol(f.clone()))?;
            if func.arity() != args.len() {
                return Err(LogicError::ArityMismatch {
                    symbol: f.clone(),
                    expected: func.arity(),
                    found: args.len(),
                });
            }
            let values = args
                .iter()
                .map(|a| eval_term(interp, alpha, a))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(func.apply(&values)?)
        }
    }
}

pub fn eval_formula(interp: &Interpretation, alpha: &VarTuple, f: &Formula) -> Result<bool, LogicError> {
    match f {
        Formula::Atom(p, args) => {
            let rel = interp
                .predicate(p)
                .ok_or_else(|| LogicError::UnknownSymbol(p.clone()))?;
            if rel.arity() != args.len() {
                return Err(LogicError::ArityMismatch {
                    symbol: p.clone(),
                    expected: rel.arity(),
                    found: args.len(),
                });
            }
            let row = args
                .iter()
                .map(|a| eval_term(interp, alpha, a))
                .collect::<Result<OrdTuple, _>>()?;
            Ok(rel.contains(&row))
        }
        Formula::And(fs) => {
            for g in fs {
                if !eval_formula(interp, alpha, g)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Formula::Or(fs) => {
            for g in fs {
                if eval_formula(interp, alpha, g)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Formula::Not(g) => Ok(!eval_formula(interp, alpha, g)?),
        // "a if b" holds iff a holds or b does not
        Formula::If(a, b) => Ok(eval_formula(interp, alpha, a)? || !eval_formula(interp, alpha, b)?),
        Formula::Exists(x, g) => {
            for d in interp.domain().carrier() {
                if eval_formula(interp, &alpha.updated(x, d.clone()), g)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Formula::Forall(x, g) => {
            for d in interp.domain().carrier() {
                if !eval_formula(interp, &alpha.updated(x, d.clone()), g)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// `M^I(F)`: every assignment to the free variables of `f` that satisfies it.
/// A closed formula denotes `{()}` when true and `{}` when false.
pub fn denotation(interp: &Interpretation, f: &Formula) -> Result<VarRelation, LogicError> {
    denotation_over(interp, f, &f.free_vars())
}

/// Like [`denotation`], over a superset `vars` of the free variables.
pub fn denotation_over(
    interp: &Interpretation,
    f: &Formula,
    vars: &BTreeSet<String>,
) -> Result<VarRelation, LogicError> {
    if let Some(missing) = f.free_vars().difference(vars).next() {
        return Err(LogicError::UnboundVariable(missing.clone()));
    }
    let mut rel = VarRelation::empty(vars.clone());
    for values in interp.domain().tuples(vars.len()) {
        let alpha: VarTuple = vars.iter().cloned().zip(values).collect();
        if eval_formula(interp, &alpha, f)? {
            rel.insert(alpha)?;
        }
    }
    Ok(rel)
}

/// Checks that every symbol of `t` is interpreted with the arity used.
pub fn check_term(interp: &Interpretation, t: &Term) -> Result<(), LogicError> {
    match t {
        Term::Var(_) => Ok(()),
        Term::Const(c) => interp
            .constant(c)
            .map(|_| ())
            .ok_or_else(|| LogicError::UnknownSymbol(c.clone())),
        Term::FnApp(f, args) => {
            let func = interp
                .function(f)
                .ok_or_else(|| LogicError::UnknownSymbol(f.clone()))?;
            if func.arity() != args.len() {
                return Err(LogicError::ArityMismatch {
                    symbol: f.clone(),
                    expected: func.arity(),
                    found: args.len(),
                });
            }
            args.iter().try_for_each(|a| check_term(interp, a))
        }
    }
}

/// Static counterpart of [`eval_formula`]: reports the first uninterpreted
/// symbol or arity mismatch, regardless of short-circuiting.
/// `known` maps additional predicate names to arities.
pub fn check_formula(
    interp: &Interpretation,
    f: &Formula,
    known: &dyn Fn(&str) -> Option<usize>,
) -> Result<(), LogicError> {
    let mut result = Ok(());
    f.visit_atoms(&mut |p, args| {
        if result.is_err() {
            return;
        }
        let arity = known(p).or_else(|| interp.predicate(p).map(|r| r.arity()));
        result = match arity {
            None => Err(LogicError::UnknownSymbol(p.to_string())),
            Some(n) if n != args.len() => Err(LogicError::ArityMismatch {
                symbol: p.to_string(),
                expected: n,
                found: args.len(),
            }),
            Some(_) => args.iter().try_for_each(|a| check_term(interp, a)),
        };
    });
    result
}
