#![allow(dead_code)]

use std::collections::BTreeSet;

use lamech_flowchart::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn id(x: &str) -> Expr {
    Expr::ident(x)
}

pub fn assign(entry: &str, lhs: &str, rhs: Expr, exit: &str) -> FlowBox {
    FlowBox::new(entry, Stmt::assign(lhs, rhs), exit)
}

pub fn call(entry: &str, proc: &str, actuals: &[&str], exit: &str) -> FlowBox {
    FlowBox::new(entry, Stmt::call(proc, actuals.iter().map(|a| id(a)).collect()), exit)
}

/// Subtraction GCD. The start node repeats the loop head's test because the
/// loop head is the exit of the two subtraction boxes.
pub fn gcd_flowchart() -> Flowchart {
    let eq = || BoolExpr::Eq(id("x"), id("y"));
    let body = Body::new(
        "start",
        "halt",
        vec![
            assign("p", "z", id("x"), "halt"),
            assign("b", "x", Expr::sub(id("x"), id("y")), "loop"),
            assign("c", "y", Expr::sub(id("y"), id("x")), "loop"),
        ],
        vec![
            Test::new("start", eq(), "p", "a"),
            Test::new("loop", eq(), "p", "a"),
            Test::new("a", BoolExpr::Lt(id("x"), id("y")), "c", "b"),
        ],
    );
    Flowchart::new(["x", "y", "z"], body)
}

fn xyz() -> VarOrder {
    VarOrder::new(["x", "y", "z"]).unwrap()
}

fn no_locals(body: Body) -> Procedure {
    Procedure::new(Vec::<String>::new(), vec![], body)
}

/// gcd0 and gcd1 subtract and call gcd2; gcd2 dispatches on x == y and x < y.
pub fn gcd_procedures() -> Vec<ProcDecl> {
    let gcd0 = no_locals(Body::new(
        "s",
        "h",
        vec![assign("s", "x", Expr::sub(id("x"), id("y")), "m"), call("m", "gcd2", &["x", "y", "z"], "h")],
        vec![],
    ));
    let gcd1 = no_locals(Body::new(
        "s",
        "h",
        vec![assign("s", "y", Expr::sub(id("y"), id("x")), "m"), call("m", "gcd2", &["x", "y", "z"], "h")],
        vec![],
    ));
    let gcd2 = no_locals(Body::new(
        "s",
        "h",
        vec![
            assign("p", "z", id("x"), "h"),
            call("n", "gcd0", &["x", "y", "z"], "h"),
            call("q", "gcd1", &["x", "y", "z"], "h"),
        ],
        vec![
            Test::new("s", BoolExpr::Eq(id("x"), id("y")), "p", "a"),
            Test::new("a", BoolExpr::Lt(id("x"), id("y")), "q", "n"),
        ],
    ));
    vec![
        ProcDecl { name: "gcd0".into(), formals: xyz(), proc: gcd0 },
        ProcDecl { name: "gcd1".into(), formals: xyz(), proc: gcd1 },
        ProcDecl { name: "gcd2".into(), formals: xyz(), proc: gcd2 },
    ]
}

/// `X := x0; Y := y0; gcd2(X,Y,Z)`.
pub fn gcd_program(x0: u64, y0: u64) -> Procedure {
    Procedure::new(
        ["X", "Y", "Z"],
        gcd_procedures(),
        Body::new(
            "s",
            "h",
            vec![
                assign("s", "X", Expr::Num(x0), "a"),
                assign("a", "Y", Expr::Num(y0), "b"),
                call("b", "gcd2", &["X", "Y", "Z"], "h"),
            ],
            vec![],
        ),
    )
}

pub fn euclid(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn random_expr(rng: &mut StdRng, vars: &[&str], depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.5) {
        return if rng.gen_bool(0.6) {
            id(vars.choose(rng).unwrap())
        } else {
            Expr::Num(rng.gen_range(0..4))
        };
    }
    let (a, b) = (random_expr(rng, vars, depth - 1), random_expr(rng, vars, depth - 1));
    if rng.gen_bool(0.5) {
        Expr::add(a, b)
    } else {
        Expr::sub(a, b)
    }
}

pub fn random_bool(rng: &mut StdRng, vars: &[&str], depth: u32) -> BoolExpr {
    match rng.gen_range(0..if depth == 0 { 2 } else { 4 }) {
        0 => BoolExpr::Eq(random_expr(rng, vars, 1), random_expr(rng, vars, 1)),
        1 => BoolExpr::Lt(random_expr(rng, vars, 1), random_expr(rng, vars, 1)),
        2 => BoolExpr::not(random_bool(rng, vars, depth - 1)),
        _ => BoolExpr::and(random_bool(rng, vars, depth - 1), random_bool(rng, vars, depth - 1)),
    }
}

/// A valid procedure-free flowchart with up to `max_nodes` nodes over one
/// or two of the locations `u`, `v`. Some non-halt nodes may have no
/// outgoing box or test.
pub fn random_flowchart(rng: &mut StdRng, max_nodes: usize) -> Flowchart {
    let n = rng.gen_range(2..=max_nodes);
    let names: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
    let vars: Vec<&str> = if rng.gen_bool(0.5) { vec!["u"] } else { vec!["u", "v"] };
    let targets = &names[1..];
    let (mut boxes, mut tests) = (Vec::new(), Vec::new());
    for node in &names[..n - 1] {
        if rng.gen_bool(0.1) {
            continue;
        }
        if rng.gen_bool(0.55) {
            let lhs = *vars.choose(rng).unwrap();
            let rhs = random_expr(rng, &vars, 2);
            let to = targets.choose(rng).unwrap();
            boxes.push(assign(node, lhs, rhs, to));
        } else {
            let cond = random_bool(rng, &vars, 2);
            let (p, q) = (targets.choose(rng).unwrap(), targets.choose(rng).unwrap());
            tests.push(Test::new(node.as_str(), cond, p.as_str(), q.as_str()));
        }
    }
    let mut body = Body::new(names[0].as_str(), names[n - 1].as_str(), boxes, tests);
    body.nodes = names.iter().map(|s| NodeId::new(s.clone())).collect::<BTreeSet<_>>();
    let fc = Flowchart::new(vars, body);
    validate(&fc).expect("generator yields valid flowcharts");
    fc
}
