use std::collections::HashMap;

use lamech_core::VarOrder;

use crate::LamTerm;

/// Renames every bound variable to `#k`, `k` counting binders in pre-order.
/// Free variables are kept. `#` cannot occur in a parsed identifier, so the
/// canonical names never collide with free ones.
pub fn canonical(t: &LamTerm) -> LamTerm {
    let mut counter = 0;
    canon(t, &mut HashMap::new(), &mut counter)
}

/// Equality up to renaming of bound variables.
pub fn alpha_eq(a: &LamTerm, b: &LamTerm) -> bool {
    canonical(a) == canonical(b)
}

fn canon(t: &LamTerm, scope: &mut HashMap<String, Vec<String>>, counter: &mut usize) -> LamTerm {
    match t {
        LamTerm::Var(v) => LamTerm::Var(
            scope
                .get(v)
                .and_then(|stack| stack.last())
                .cloned()
                .unwrap_or_else(|| v.clone()),
        ),
        LamTerm::App(f, a) => LamTerm::app(canon(f, scope, counter), canon(a, scope, counter)),
        LamTerm::TupleApp(f, args) => LamTerm::tuple_app(
            canon(f, scope, counter),
            args.iter().map(|a| canon(a, scope, counter)).collect(),
        ),
        LamTerm::Abs(x, body) => {
            let fresh = bind(x, scope, counter);
            let body = canon(body, scope, counter);
            unbind(x, scope);
            LamTerm::abs(fresh, body)
        }
        LamTerm::TupleAbs(order, body) => {
            let fresh: Vec<String> = order.iter().map(|x| bind(x, scope, counter)).collect();
            let body = canon(body, scope, counter);
            for x in order.iter() {
                unbind(x, scope);
            }
            LamTerm::tuple_abs(VarOrder::new(fresh).expect("canonical names are distinct"), body)
        }
    }
}

fn bind(x: &str, scope: &mut HashMap<String, Vec<String>>, counter: &mut usize) -> String {
    let name = format!("#{counter}");
    *counter += 1;
    scope.entry(x.to_string()).or_default().push(name.clone());
    name
}

fn unbind(x: &str, scope: &mut HashMap<String, Vec<String>>) {
    if let Some(stack) = scope.get_mut(x) {
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> LamTerm {
        LamTerm::var(n)
    }

    #[test]
    fn renaming_bound_variables() {
        assert!(alpha_eq(&LamTerm::abs("x", v("x")), &LamTerm::abs("y", v("y"))));
        assert!(!alpha_eq(&LamTerm::abs("x", v("y")), &LamTerm::abs("y", v("y"))));
        assert!(!alpha_eq(&v("x"), &v("y")));
    }

    #[test]
    fn shadowing_is_respected() {
        // \x.\x. x  vs  \x.\y. x
        let a = LamTerm::abs("x", LamTerm::abs("x", v("x")));
        let b = LamTerm::abs("x", LamTerm::abs("y", v("x")));
        let c = LamTerm::abs("z", LamTerm::abs("w", v("w")));
        assert!(!alpha_eq(&a, &b));
        assert!(alpha_eq(&a, &c));
    }

    #[test]
    fn tuple_binders_are_positional() {
        let xy = VarOrder::new(["x", "y"]).unwrap();
        let yx = VarOrder::new(["y", "x"]).unwrap();
        let a = LamTerm::tuple_abs(xy.clone(), LamTerm::app(v("x"), v("y")));
        let b = LamTerm::tuple_abs(yx.clone(), LamTerm::app(v("y"), v("x")));
        let c = LamTerm::tuple_abs(yx, LamTerm::app(v("x"), v("y")));
        assert!(alpha_eq(&a, &b));
        assert!(!alpha_eq(&a, &c));
    }
}
