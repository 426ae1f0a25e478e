use std::collections::BTreeSet;

use lamech_core::VarOrder;

use crate::{LambdaError, LamTerm};

/// Rewrites every tuple abstraction `\(x0, .., xn). M` into `\x0. .. \xn. M`
/// and every tuple application `M (N0, .., Nn)` into `M N0 .. Nn`.
pub fn curry(t: &LamTerm) -> LamTerm {
    match t {
        LamTerm::Var(_) => t.clone(),
        LamTerm::App(f, a) => LamTerm::app(curry(f), curry(a)),
        LamTerm::Abs(x, body) => LamTerm::abs(x.clone(), curry(body)),
        LamTerm::TupleAbs(order, body) => order
            .names()
            .iter()
            .rev()
            .fold(curry(body), |acc, x| LamTerm::abs(x.clone(), acc)),
        LamTerm::TupleApp(f, args) => LamTerm::apps(curry(f), args.iter().map(curry)),
    }
}

/// Collapses the outermost `arity` single abstractions into one tuple
/// abstraction. Only the root is touched.
///
/// `\x\x. M` has no tuple counterpart: the inner `x` shadows the outer one,
/// so the result would need a repeated variable.
pub fn uncurry(t: &LamTerm, arity: usize) -> Result<LamTerm, LambdaError> {
    let mut names = Vec::with_capacity(arity);
    let mut seen = BTreeSet::new();
    let mut cursor = t;
    while names.len() < arity {
        match cursor {
            LamTerm::Abs(x, body) => {
                if !seen.insert(x.as_str()) {
                    return Err(LambdaError::NotCurriable(format!(
                        "variable `{x}` is abstracted more than once"
                    )));
                }
                names.push(x.clone());
                cursor = body;
            }
            _ => {
                return Err(LambdaError::NotCurriable(format!(
                    "expected {arity} nested abstractions, found {}",
                    names.len()
                )))
            }
        }
    }
    let order = VarOrder::new(names).expect("distinctness checked above");
    Ok(LamTerm::tuple_abs(order, cursor.clone()))
}
