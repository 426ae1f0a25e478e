use lamech_core::FreshNameSupply;

use crate::{substitute, substitute_all, LambdaError, LamTerm};

/// Contracts the leftmost-outermost redex, or returns `None` for a normal
/// form. `(\x. M) N` and `(\(x0, ..).M)(N0, ..)` are the only redexes; a
/// tuple application of a single abstraction (or vice versa) is stuck.
pub fn beta_step(t: &LamTerm, supply: &mut FreshNameSupply) -> Result<Option<LamTerm>, LambdaError> {
    match t {
        LamTerm::Var(_) => Ok(None),
        LamTerm::App(f, a) => {
            if let LamTerm::Abs(x, body) = f.as_ref() {
                return Ok(Some(substitute(a, x, body, supply)));
            }
            if let Some(f2) = beta_step(f, supply)? {
                return Ok(Some(LamTerm::App(Box::new(f2), a.clone())));
            }
            Ok(beta_step(a, supply)?.map(|a2| LamTerm::App(f.clone(), Box::new(a2))))
        }
        LamTerm::TupleApp(f, args) => {
            if let LamTerm::TupleAbs(order, body) = f.as_ref() {
                if order.len() != args.len() {
                    return Err(LambdaError::ArityMismatch {
                        expected: order.len(),
                        found: args.len(),
                    });
                }
                let pairs: Vec<(String, LamTerm)> = order
                    .iter()
                    .map(str::to_string)
                    .zip(args.iter().cloned())
                    .collect();
                return Ok(Some(substitute_all(&pairs, body, supply)));
            }
            if let Some(f2) = beta_step(f, supply)? {
                return Ok(Some(LamTerm::TupleApp(Box::new(f2), args.clone())));
            }
            for (i, a) in args.iter().enumerate() {
                if let Some(a2) = beta_step(a, supply)? {
                    let mut args = args.clone();
                    args[i] = a2;
                    return Ok(Some(LamTerm::TupleApp(f.clone(), args)));
                }
            }
            Ok(None)
        }
        LamTerm::Abs(x, body) => Ok(beta_step(body, supply)?.map(|b| LamTerm::abs(x.clone(), b))),
        LamTerm::TupleAbs(order, body) => {
            Ok(beta_step(body, supply)?.map(|b| LamTerm::tuple_abs(order.clone(), b)))
        }
    }
}

/// Outcome of [`normalize`]. Running out of steps is a verdict, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalization {
    NormalForm { term: LamTerm, steps: usize },
    StepLimit { term: LamTerm, steps: usize },
}

impl Normalization {
    pub fn term(&self) -> &LamTerm {
        match self {
            Normalization::NormalForm { term, .. } | Normalization::StepLimit { term, .. } => term,
        }
    }

    pub fn steps(&self) -> usize {
        match self {
            Normalization::NormalForm { steps, .. } | Normalization::StepLimit { steps, .. } => *steps,
        }
    }

    pub fn normal_form(&self) -> Option<&LamTerm> {
        match self {
            Normalization::NormalForm { term, .. } => Some(term),
            Normalization::StepLimit { .. } => None,
        }
    }
}

/// Iterates [`beta_step`] at most `max_steps` times.
pub fn normalize(t: &LamTerm, max_steps: usize) -> Result<Normalization, LambdaError> {
    let mut supply = FreshNameSupply::avoiding(t.all_names());
    let mut term = t.clone();
    for steps in 0..=max_steps {
        match beta_step(&term, &mut supply)? {
            None => return Ok(Normalization::NormalForm { term, steps }),
            Some(next) if steps < max_steps => term = next,
            Some(_) => break,
        }
    }
    Ok(Normalization::StepLimit { term, steps: max_steps })
}
