//! Generators for source-language syntax trees, shared with the workspace
//! acceptance suite.
#![allow(dead_code)]

use lamech_core::{DomainValue, VarOrder};
use lamech_flowchart::{Body, BoolExpr, Expr, FlowBox, NodeId, ProcDecl, Procedure, Stmt, Test};
use lamech_frontends::{DomainDecl, FolStatement};
use lamech_lambda::LamTerm;
use lamech_logic::{Formula, PredicateDef, Term};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;
use proptest::sample::select;

pub const NAMES: &[&str] = &["x", "y", "z", "f", "g1", "a_b", "x'"];

pub fn name() -> impl Strategy<Value = String> {
    select(NAMES).prop_map(String::from)
}

pub fn order(max: usize) -> BoxedStrategy<VarOrder> {
    btree_set(name(), 0..=max)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| VarOrder::new(v).unwrap())
        .boxed()
}

pub fn lam_term() -> impl Strategy<Value = LamTerm> {
    name().prop_map(LamTerm::Var).prop_recursive(5, 48, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(f, a)| LamTerm::app(f, a)),
            (name(), inner.clone()).prop_map(|(x, b)| LamTerm::abs(x, b)),
            (order(3), inner.clone()).prop_map(|(o, b)| LamTerm::tuple_abs(o, b)),
            (inner.clone(), vec(inner, 0..=3)).prop_map(|(f, args)| LamTerm::tuple_app(f, args)),
        ]
    })
}

pub const VARS: &[&str] = &["x", "y", "v0", "w"];

pub fn fol_term() -> impl Strategy<Value = Term> {
    prop_oneof![
        select(VARS).prop_map(Term::var),
        (0u64..30).prop_map(Term::nat),
        Just(Term::constant("top")),
    ]
    .prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::app("+", vec![a, b])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::app("*", vec![a, b])),
            (select(&["s", "f", "g"][..]), vec(inner, 0..=2)).prop_map(|(f, args)| Term::app(f, args)),
        ]
    })
}

pub fn fol_formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (fol_term(), fol_term()).prop_map(|(a, b)| Formula::eq(a, b)),
        (fol_term(), fol_term()).prop_map(|(a, b)| Formula::atom("<", vec![a, b])),
        (select(&["p", "q", "even"][..]), vec(fol_term(), 0..=2)).prop_map(|(p, args)| Formula::atom(p, args)),
    ];
    atom.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            vec(inner.clone(), 2..=3).prop_map(Formula::And),
            vec(inner.clone(), 2..=3).prop_map(Formula::Or),
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(c, a)| Formula::implied_by(c, a)),
            (select(VARS), inner.clone()).prop_map(|(x, b)| Formula::exists(x, b)),
            (select(VARS), inner).prop_map(|(x, b)| Formula::forall(x, b)),
        ]
    })
}

pub fn fol_value() -> impl Strategy<Value = DomainValue> {
    prop_oneof![(0u64..30).prop_map(DomainValue::Nat), Just(DomainValue::Top), Just(DomainValue::Atom("a".into()))]
}

pub fn with_list() -> impl Strategy<Value = Vec<(String, DomainValue)>> {
    vec((select(VARS).prop_map(String::from), fol_value()), 0..=2)
}

pub fn fol_statement() -> impl Strategy<Value = FolStatement> {
    prop_oneof![
        (1u64..40).prop_map(|b| FolStatement::Domain(DomainDecl::Nat(b))),
        (select(&["e", "r"][..]), 0usize..=2, vec(fol_value(), 0..=6)).prop_map(|(n, arity, vals)| {
            let rows = if arity == 0 { vec![vec![]] } else { vals.chunks_exact(arity).map(<[_]>::to_vec).collect() };
            FolStatement::Pred { name: n.into(), arity, rows }
        }),
        (select(&["f", "g"][..]), order(3), fol_term())
            .prop_map(|(n, order, term)| FolStatement::Fun { name: n.into(), order, term }),
        (select(&["even", "odd"][..]), order(2), vec(fol_formula(), 1..=3))
            .prop_filter("a lone disjunction would be split", |(_, _, body)| {
                body.len() > 1 || !matches!(body[0], Formula::Or(_))
            })
            .prop_map(|(n, order, body)| FolStatement::Def(PredicateDef::new(n, order, body))),
        (fol_term(), with_list()).prop_map(|(term, with)| FolStatement::Eval { term, with }),
        (fol_formula(), with_list()).prop_map(|(formula, with)| FolStatement::Holds { formula, with }),
        fol_formula().prop_map(FolStatement::Denote),
    ]
}

pub const LOCS: &[&str] = &["X", "Y", "t", "u1"];
pub const NODES: &[&str] = &["s", "h", "n1", "n2", "n3", "loop"];

pub fn flow_expr() -> impl Strategy<Value = Expr> {
    prop_oneof![select(LOCS).prop_map(Expr::ident), (0u64..100).prop_map(Expr::Num)].prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::add(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::sub(a, b)),
        ]
    })
}

pub fn flow_bool() -> impl Strategy<Value = BoolExpr> {
    prop_oneof![
        (flow_expr(), flow_expr()).prop_map(|(a, b)| BoolExpr::Eq(a, b)),
        (flow_expr(), flow_expr()).prop_map(|(a, b)| BoolExpr::Lt(a, b)),
    ]
    .prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(BoolExpr::not),
            (inner.clone(), inner).prop_map(|(a, b)| BoolExpr::and(a, b)),
        ]
    })
}

pub fn node() -> impl Strategy<Value = NodeId> {
    select(NODES).prop_map(NodeId::from)
}

pub fn flow_body() -> impl Strategy<Value = Body> {
    let stmt = prop_oneof![
        (select(LOCS), flow_expr()).prop_map(|(l, e)| Stmt::assign(l, e)),
        (select(&["p", "q"][..]), vec(flow_expr(), 0..=3)).prop_map(|(p, a)| Stmt::call(p, a)),
    ];
    let boxes = vec((node(), stmt, node()).prop_map(|(entry, stmt, exit)| FlowBox { entry, stmt, exit }), 0..=4);
    let tests = vec(
        (node(), flow_bool(), node(), node()).prop_map(|(entry, cond, pos_exit, neg_exit)| Test {
            entry,
            cond,
            pos_exit,
            neg_exit,
        }),
        0..=3,
    );
    (node(), node(), boxes, tests, btree_set(node(), 0..=2)).prop_map(|(start, halt, boxes, tests, extra)| {
        let mut body = Body::new(start, halt, boxes, tests);
        body.nodes.extend(extra);
        body
    })
}

pub fn flow_procedure() -> impl Strategy<Value = Procedure> {
    let leaf = (btree_set(select(LOCS).prop_map(String::from), 0..=3), flow_body())
        .prop_map(|(locations, body)| Procedure { locations, procs: vec![], body });
    leaf.prop_recursive(2, 6, 2, |inner| {
        (
            btree_set(select(LOCS).prop_map(String::from), 0..=3),
            vec((select(&["p", "q", "gcd2"][..]), order(3), inner), 0..=2),
            flow_body(),
        )
            .prop_map(|(locations, procs, body)| Procedure {
                locations,
                procs: procs
                    .into_iter()
                    .map(|(n, formals, proc)| ProcDecl { name: n.into(), formals, proc })
                    .collect(),
                body,
            })
    })
}
