//! `.lam`: terms separated by `;`.
//!
//! `\x. M` and `\(x, y). M` abstract; juxtaposition applies, to the left;
//! `M (N0, N1)` applies `M` to a tuple, `(N,)` is a one-tuple and `()` the
//! empty one. Abstraction bodies extend as far right as possible.

use lamech_lambda::{LamTerm, VarOrder};

use crate::lex::{Cursor, Tok};
use crate::ParseError;

/// Parses a single term.
pub fn parse_lambda(text: &str) -> Result<LamTerm, ParseError> {
    let mut terms = parse_lambda_file(text, "<input>")?;
    if terms.len() != 1 {
        let c = Cursor::new(text, "<input>", false)?;
        let mut err = c.error(format!("expected one term, found {}", terms.len()), &[]);
        if let Some(t) = c.toks.first() {
            err.span.col_start = t.col;
            err.span.col_end = t.col + t.len;
        }
        return Err(err);
    }
    Ok(terms.remove(0))
}

/// Parses every term of a file.
pub fn parse_lambda_file(text: &str, file: &str) -> Result<Vec<LamTerm>, ParseError> {
    let mut c = Cursor::new(text, file, false)?;
    let mut terms = Vec::new();
    while *c.peek() != Tok::Eof {
        if c.eat_sym(";") {
            continue;
        }
        terms.push(term(&mut c)?);
        if *c.peek() != Tok::Eof {
            c.expect_sym(";")?;
        }
    }
    Ok(terms)
}

fn term(c: &mut Cursor) -> Result<LamTerm, ParseError> {
    if c.eat_sym("\\") {
        let at = c.pos;
        let t = if c.eat_sym("(") {
            let mut names = Vec::new();
            if !c.eat_sym(")") {
                loop {
                    names.push(c.expect_ident("variable")?);
                    if c.eat_sym(")") {
                        break;
                    }
                    c.expect_sym(",")?;
                }
            }
            let order = VarOrder::new(names).map_err(|e| c.error_at(at, e.to_string()))?;
            c.expect_sym(".")?;
            LamTerm::tuple_abs(order, term(c)?)
        } else {
            let x = c.expect_ident("variable or '('")?;
            c.expect_sym(".")?;
            LamTerm::abs(x, term(c)?)
        };
        return Ok(t);
    }
    let head_at = c.pos;
    let mut acc = match operand(c)? {
        Some(Operand::Term(t)) => t,
        Some(Operand::Tuple(_)) => return Err(c.error_at(head_at, "a tuple must follow the term it is applied to")),
        None => return Err(c.unexpected(&["term"])),
    };
    loop {
        if c.at_sym("\\") {
            return Ok(LamTerm::app(acc, term(c)?));
        }
        match operand(c)? {
            Some(Operand::Term(t)) => acc = LamTerm::app(acc, t),
            Some(Operand::Tuple(ts)) => acc = LamTerm::tuple_app(acc, ts),
            None => return Ok(acc),
        }
    }
}

enum Operand {
    Term(LamTerm),
    Tuple(Vec<LamTerm>),
}

fn operand(c: &mut Cursor) -> Result<Option<Operand>, ParseError> {
    match c.peek().clone() {
        Tok::Ident(x) => {
            c.bump();
            Ok(Some(Operand::Term(LamTerm::Var(x))))
        }
        Tok::Sym("(") => {
            c.bump();
            if c.eat_sym(")") {
                return Ok(Some(Operand::Tuple(vec![])));
            }
            let first = term(c)?;
            if c.eat_sym(")") {
                return Ok(Some(Operand::Term(first)));
            }
            let mut items = vec![first];
            c.expect_sym(",")?;
            while !c.eat_sym(")") {
                items.push(term(c)?);
                if !c.at_sym(")") {
                    c.expect_sym(",")?;
                }
            }
            Ok(Some(Operand::Tuple(items)))
        }
        _ => Ok(None),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Ctx {
    Top,
    Fun,
    Arg,
}

pub fn pretty_lambda(t: &LamTerm) -> String {
    let mut out = String::new();
    pp(t, Ctx::Top, &mut out);
    out
}

fn pp(t: &LamTerm, ctx: Ctx, out: &mut String) {
    let paren = match t {
        LamTerm::Var(_) => false,
        LamTerm::Abs(..) | LamTerm::TupleAbs(..) => ctx != Ctx::Top,
        LamTerm::App(..) | LamTerm::TupleApp(..) => ctx == Ctx::Arg,
    };
    if paren {
        out.push('(');
    }
    match t {
        LamTerm::Var(x) => out.push_str(x),
        LamTerm::Abs(x, body) => {
            out.push('\\');
            out.push_str(x);
            out.push_str(". ");
            pp(body, Ctx::Top, out);
        }
        LamTerm::TupleAbs(order, body) => {
            out.push_str("\\(");
            out.push_str(&order.names().join(", "));
            out.push_str("). ");
            pp(body, Ctx::Top, out);
        }
        LamTerm::App(f, a) => {
            pp(f, Ctx::Fun, out);
            out.push(' ');
            pp(a, Ctx::Arg, out);
        }
        LamTerm::TupleApp(f, args) => {
            pp(f, Ctx::Fun, out);
            out.push_str(" (");
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                pp(a, Ctx::Top, out);
            }
            if args.len() == 1 {
                out.push(',');
            }
            out.push(')');
        }
    }
    if paren {
        out.push(')');
    }
}
