//! `.flow`: a procedure as declarations, nested procedures, and a body of
//! labelled boxes and tests.
//!
//! ```text
//! nat X, Y, Z;
//! inc = \(a). { box s: a := a + 1 -> h; start s; halt h; }
//! start s; halt h;
//! box s: inc(X) -> h;
//! test t: X == Y & ~(X < 1) ? h : s;
//! ```

use std::collections::BTreeSet;

use lamech_flowchart::{Body, BoolExpr, Expr, FlowBox, Flowchart, NodeId, ProcDecl, Procedure, Stmt, Test, VarOrder};

use crate::lex::{Cursor, Tok};
use crate::ParseError;

const RESERVED: &[&str] = &["nat", "start", "halt", "node", "box", "test"];

pub fn parse_flow(text: &str, file: &str) -> Result<Procedure, ParseError> {
    let mut c = Cursor::new(text, file, false)?;
    let p = procedure(&mut c, true)?;
    if *c.peek() != Tok::Eof {
        return Err(c.unexpected(&["end of input"]));
    }
    Ok(p)
}

/// A procedure without nested procedures, as a flowchart.
pub fn as_flowchart(p: &Procedure) -> Option<Flowchart> {
    p.procs.is_empty().then(|| Flowchart { decls: p.locations.clone(), body: p.body.clone() })
}

fn name(c: &mut Cursor, what: &str) -> Result<String, ParseError> {
    let at = c.pos;
    let x = c.expect_ident(what)?;
    if RESERVED.contains(&x.as_str()) {
        return Err(c.error_at(at, format!("{x} is a reserved word")));
    }
    Ok(x)
}

fn procedure(c: &mut Cursor, top: bool) -> Result<Procedure, ParseError> {
    let mut locations = BTreeSet::new();
    let mut procs = Vec::new();
    let (mut boxes, mut tests) = (Vec::new(), Vec::new());
    let mut extra_nodes = BTreeSet::new();
    let (mut start, mut halt): (Option<NodeId>, Option<NodeId>) = (None, None);
    loop {
        let at = c.pos;
        match c.peek().clone() {
            Tok::Eof if top => break,
            Tok::Sym("}") if !top => break,
            Tok::Ident(w) if w == "nat" => {
                c.bump();
                loop {
                    locations.insert(name(c, "location")?);
                    if !c.eat_sym(",") {
                        break;
                    }
                }
            }
            Tok::Ident(w) if w == "start" || w == "halt" => {
                c.bump();
                let n = NodeId::new(name(c, "node")?);
                let slot = if w == "start" { &mut start } else { &mut halt };
                if slot.is_some() {
                    return Err(c.error_at(at, format!("second {w} declaration")));
                }
                *slot = Some(n);
            }
            Tok::Ident(w) if w == "node" => {
                c.bump();
                loop {
                    extra_nodes.insert(NodeId::new(name(c, "node")?));
                    if !c.eat_sym(",") {
                        break;
                    }
                }
            }
            Tok::Ident(w) if w == "box" => {
                c.bump();
                let entry = NodeId::new(name(c, "node")?);
                c.expect_sym(":")?;
                let stmt = statement(c)?;
                c.expect_sym("->")?;
                let exit = NodeId::new(name(c, "node")?);
                boxes.push(FlowBox { entry, stmt, exit });
            }
            Tok::Ident(w) if w == "test" => {
                c.bump();
                let entry = NodeId::new(name(c, "node")?);
                c.expect_sym(":")?;
                let cond = bool_expr(c)?;
                c.expect_sym("?")?;
                let pos_exit = NodeId::new(name(c, "node")?);
                c.expect_sym(":")?;
                let neg_exit = NodeId::new(name(c, "node")?);
                tests.push(Test { entry, cond, pos_exit, neg_exit });
            }
            Tok::Ident(_) if matches!(c.peek_at(1), Tok::Sym("=")) => {
                let pname = name(c, "procedure")?;
                c.bump();
                c.expect_sym("\\")?;
                let head = c.pos;
                c.expect_sym("(")?;
                let mut formals = Vec::new();
                while !c.eat_sym(")") {
                    formals.push(name(c, "formal parameter")?);
                    if !c.at_sym(")") {
                        c.expect_sym(",")?;
                    }
                }
                let formals = VarOrder::new(formals).map_err(|e| c.error_at(head, e.to_string()))?;
                c.expect_sym(".")?;
                c.expect_sym("{")?;
                let proc = procedure(c, false)?;
                c.expect_sym("}")?;
                procs.push(ProcDecl { name: pname, formals, proc });
                c.eat_sym(";");
                continue;
            }
            _ => {
                return Err(c.unexpected(&[
                    "nat", "start", "halt", "node", "box", "test", "procedure declaration",
                    if top { "end of input" } else { "'}'" },
                ]))
            }
        }
        c.expect_sym(";")?;
    }
    let Some(start) = start else {
        return Err(c.error("missing start declaration", &["start"]));
    };
    let Some(halt) = halt else {
        return Err(c.error("missing halt declaration", &["halt"]));
    };
    let mut body = Body::new(start, halt, boxes, tests);
    body.nodes.extend(extra_nodes);
    Ok(Procedure { locations, procs, body })
}

fn statement(c: &mut Cursor) -> Result<Stmt, ParseError> {
    let x = name(c, "location or procedure")?;
    if c.eat_sym(":=") {
        return Ok(Stmt::Assign { lhs: x, rhs: expr(c)? });
    }
    if c.eat_sym("(") {
        let mut actuals = Vec::new();
        while !c.eat_sym(")") {
            actuals.push(expr(c)?);
            if !c.at_sym(")") {
                c.expect_sym(",")?;
            }
        }
        return Ok(Stmt::Call { proc: x, actuals });
    }
    Err(c.unexpected(&["':='", "'('"]))
}

fn expr(c: &mut Cursor) -> Result<Expr, ParseError> {
    let mut acc = expr_atom(c)?;
    loop {
        if c.eat_sym("+") {
            acc = Expr::add(acc, expr_atom(c)?);
        } else if c.eat_sym("-") {
            acc = Expr::sub(acc, expr_atom(c)?);
        } else {
            return Ok(acc);
        }
    }
}

fn expr_atom(c: &mut Cursor) -> Result<Expr, ParseError> {
    match c.peek().clone() {
        Tok::Num(n) => {
            c.bump();
            Ok(Expr::Num(n))
        }
        Tok::Ident(_) => Ok(Expr::Ident(name(c, "location")?)),
        Tok::Sym("(") => {
            c.bump();
            let e = expr(c)?;
            c.expect_sym(")")?;
            Ok(e)
        }
        _ => Err(c.unexpected(&["expression"])),
    }
}

fn bool_expr(c: &mut Cursor) -> Result<BoolExpr, ParseError> {
    let mut acc = bool_unary(c)?;
    while c.eat_sym("&") {
        acc = BoolExpr::and(acc, bool_unary(c)?);
    }
    Ok(acc)
}

fn bool_unary(c: &mut Cursor) -> Result<BoolExpr, ParseError> {
    if c.eat_sym("~") {
        return Ok(BoolExpr::not(bool_unary(c)?));
    }
    let start = c.pos;
    if c.at_sym("(") {
        if let Ok(b) = comparison(c) {
            return Ok(b);
        }
        c.pos = start;
        c.bump();
        let b = bool_expr(c)?;
        c.expect_sym(")")?;
        return Ok(b);
    }
    comparison(c)
}

fn comparison(c: &mut Cursor) -> Result<BoolExpr, ParseError> {
    let lhs = expr(c)?;
    if c.eat_sym("==") {
        return Ok(BoolExpr::Eq(lhs, expr(c)?));
    }
    if c.eat_sym("<") {
        return Ok(BoolExpr::Lt(lhs, expr(c)?));
    }
    Err(c.unexpected(&["'=='", "'<'"]))
}

fn pp_expr(e: &Expr, right: bool, out: &mut String) {
    match e {
        Expr::Num(n) => out.push_str(&n.to_string()),
        Expr::Ident(x) => out.push_str(x),
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            if right {
                out.push('(');
            }
            pp_expr(a, false, out);
            out.push_str(if matches!(e, Expr::Add(..)) { " + " } else { " - " });
            pp_expr(b, true, out);
            if right {
                out.push(')');
            }
        }
    }
}

pub fn pretty_expr(e: &Expr) -> String {
    let mut out = String::new();
    pp_expr(e, false, &mut out);
    out
}

fn pp_bool(b: &BoolExpr, atomic: bool, out: &mut String) {
    match b {
        BoolExpr::Eq(x, y) | BoolExpr::Lt(x, y) => {
            pp_expr(x, false, out);
            out.push_str(if matches!(b, BoolExpr::Eq(..)) { " == " } else { " < " });
            pp_expr(y, false, out);
        }
        BoolExpr::Not(inner) => {
            out.push('~');
            let paren = !matches!(**inner, BoolExpr::Not(_));
            if paren {
                out.push('(');
            }
            pp_bool(inner, false, out);
            if paren {
                out.push(')');
            }
        }
        BoolExpr::And(x, y) => {
            if atomic {
                out.push('(');
            }
            pp_bool(x, false, out);
            out.push_str(" & ");
            pp_bool(y, true, out);
            if atomic {
                out.push(')');
            }
        }
    }
}

pub fn pretty_bool(b: &BoolExpr) -> String {
    let mut out = String::new();
    pp_bool(b, false, &mut out);
    out
}

pub fn pretty_stmt(s: &Stmt) -> String {
    match s {
        Stmt::Assign { lhs, rhs } => format!("{lhs} := {}", pretty_expr(rhs)),
        Stmt::Call { proc, actuals } => {
            format!("{proc}({})", actuals.iter().map(pretty_expr).collect::<Vec<_>>().join(", "))
        }
    }
}

pub fn pretty_flow(p: &Procedure) -> String {
    let mut out = String::new();
    pp_procedure(p, 0, &mut out);
    out
}

fn pp_procedure(p: &Procedure, indent: usize, out: &mut String) {
    let pad = "    ".repeat(indent);
    if !p.locations.is_empty() {
        out.push_str(&format!("{pad}nat {};\n", p.locations.iter().cloned().collect::<Vec<_>>().join(", ")));
    }
    for d in &p.procs {
        out.push_str(&format!("{pad}{} = \\({}). {{\n", d.name, d.formals.names().join(", ")));
        pp_procedure(&d.proc, indent + 1, out);
        out.push_str(&format!("{pad}}}\n"));
    }
    let b = &p.body;
    out.push_str(&format!("{pad}start {}; halt {};\n", b.start, b.halt));
    let mentioned = b.mentioned_nodes();
    let extra: Vec<String> = b.nodes.difference(&mentioned).map(|n| n.to_string()).collect();
    if !extra.is_empty() {
        out.push_str(&format!("{pad}node {};\n", extra.join(", ")));
    }
    for x in &b.boxes {
        out.push_str(&format!("{pad}box {}: {} -> {};\n", x.entry, pretty_stmt(&x.stmt), x.exit));
    }
    for t in &b.tests {
        out.push_str(&format!(
            "{pad}test {}: {} ? {} : {};\n",
            t.entry,
            pretty_bool(&t.cond),
            t.pos_exit,
            t.neg_exit
        ));
    }
}
