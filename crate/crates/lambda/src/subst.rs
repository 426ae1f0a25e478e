use std::collections::{BTreeMap, BTreeSet};

use lamech_core::{FreshNameSupply, VarOrder};

use crate::LamTerm;

/// `[n/x]m`: replaces the free occurrences of `x` in `m` by `n`, renaming
/// bound variables of `m` that would capture a free variable of `n`.
pub fn substitute(n: &LamTerm, x: &str, m: &LamTerm, supply: &mut FreshNameSupply) -> LamTerm {
    substitute_all(&[(x.to_string(), n.clone())], m, supply)
}

/// Simultaneous substitution `[n0/x0, .., nk/xk]m`.
///
/// Later pairs for an already-mapped name are ignored.
pub fn substitute_all(
    pairs: &[(String, LamTerm)],
    m: &LamTerm,
    supply: &mut FreshNameSupply,
) -> LamTerm {
    let mut map = BTreeMap::new();
    for (x, n) in pairs {
        map.entry(x.clone()).or_insert_with(|| n.clone());
    }
    supply.reserve_all(m.all_names());
    for (x, n) in &map {
        supply.reserve(x.clone());
        supply.reserve_all(n.all_names());
    }
    subst(&map, m, supply)
}

fn subst(map: &BTreeMap<String, LamTerm>, m: &LamTerm, supply: &mut FreshNameSupply) -> LamTerm {
    match m {
        LamTerm::Var(y) => map.get(y).cloned().unwrap_or_else(|| m.clone()),
        LamTerm::App(f, a) => LamTerm::app(subst(map, f, supply), subst(map, a, supply)),
        LamTerm::TupleApp(f, args) => LamTerm::tuple_app(
            subst(map, f, supply),
            args.iter().map(|a| subst(map, a, supply)).collect(),
        ),
        LamTerm::Abs(y, body) => {
            let (binders, body) = under_binder(map, std::slice::from_ref(y), body, supply);
            LamTerm::abs(binders.into_iter().next().expect("one binder"), body)
        }
        LamTerm::TupleAbs(order, body) => {
            let (binders, body) = under_binder(map, order.names(), body, supply);
            let order = VarOrder::new(binders).expect("renaming keeps names distinct");
            LamTerm::tuple_abs(order, body)
        }
    }
}

/// Pushes a substitution under a binder of `binders`, returning the possibly
/// renamed binders and the new body.
fn under_binder(
    map: &BTreeMap<String, LamTerm>,
    binders: &[String],
    body: &LamTerm,
    supply: &mut FreshNameSupply,
) -> (Vec<String>, LamTerm) {
    let active: BTreeMap<String, LamTerm> = map
        .iter()
        .filter(|(x, _)| !binders.contains(x) && body.is_free(x))
        .map(|(x, n)| (x.clone(), n.clone()))
        .collect();
    if active.is_empty() {
        return (binders.to_vec(), body.clone());
    }

    let incoming: BTreeSet<String> = active.values().flat_map(LamTerm::free_vars).collect();
    let mut renaming = BTreeMap::new();
    let new_binders: Vec<String> = binders
        .iter()
        .map(|b| {
            if incoming.contains(b) {
                let fresh = supply.fresh(b);
                renaming.insert(b.clone(), LamTerm::var(fresh.clone()));
                fresh
            } else {
                b.clone()
            }
        })
        .collect();

    let body = if renaming.is_empty() {
        body.clone()
    } else {
        subst(&renaming, body, supply)
    };
    (new_binders, subst(&active, &body, supply))
}
