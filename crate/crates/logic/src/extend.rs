use lamech_core::{lift_function, Binding, VarOrder};

use crate::{check_term, eval_term, Interpretation, LogicError, Term};

/// Returns `interp` extended with `f = \(order). M^I(t)`.
///
/// `f` must be new and must not occur in `t`, so a function symbol can never
/// be defined in terms of itself, directly or through earlier extensions.
pub fn extend_with_function(
    interp: &Interpretation,
    f: &str,
    order: &VarOrder,
    t: &Term,
) -> Result<Interpretation, LogicError> {
    if interp.interprets(f) || t.mentions_symbol(f) {
        return Err(LogicError::RecursiveDefinition(f.to_string()));
    }
    let vars = t.free_vars();
    order.check_enumerates(&vars)?;
    check_term(interp, t)?;

    let base = interp.clone();
    let body = t.clone();
    let binding = Binding::new(vars, move |chi| {
        eval_term(&base, chi, &body).expect("term was checked against the interpretation")
    });
    let mut extended = interp.clone();
    extended.define_function(f, lift_function(order, &binding)?);
    Ok(extended)
}
