//! `.fol`: interpretations, function and predicate extensions, and queries.
//!
//! Statements end at a newline (outside brackets) or `;`:
//!
//! ```text
//! domain nat 21
//! pred edge/2 = {(0, 1), (1, 2)}
//! fun f := \(x, y, z). x + y * z
//! even := \(x). x = 0 | exists y. x = s(y) & odd(y)
//! odd := \(x). exists y. x = s(y) & even(y)
//! eval f(1, 2, 3)
//! holds even(x) with x = 4
//! ```

use std::collections::BTreeSet;

use lamech_core::{Domain, DomainValue, OrdRelation, OrdTuple, VarOrder, VarTuple};
use lamech_logic::{extend_with_function, Formula, Interpretation, LogicError, PredicateDef, PredicateExtension, Term};

use crate::lex::{Cursor, Tok};
use crate::ParseError;

const RESERVED: &[&str] = &["domain", "const", "pred", "fun", "eval", "holds", "denote", "with", "exists", "forall", "top"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainDecl {
    Nat(u64),
    Atoms(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FolStatement {
    Domain(DomainDecl),
    Const { name: String, value: DomainValue },
    Pred { name: String, arity: usize, rows: Vec<Vec<DomainValue>> },
    Fun { name: String, order: VarOrder, term: Term },
    Def(PredicateDef),
    Eval { term: Term, with: Vec<(String, DomainValue)> },
    Holds { formula: Formula, with: Vec<(String, DomainValue)> },
    Denote(Formula),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FolDocument {
    pub statements: Vec<FolStatement>,
}

pub fn parse_fol(text: &str, file: &str) -> Result<FolDocument, ParseError> {
    let mut p = FolParser { c: Cursor::new(text, file, true)?, consts: BTreeSet::new(), bound: Vec::new() };
    let mut statements = Vec::new();
    loop {
        while *p.c.peek() == Tok::Newline || p.c.at_sym(";") {
            p.c.bump();
        }
        if *p.c.peek() == Tok::Eof {
            break;
        }
        statements.push(p.statement()?);
        match p.c.peek() {
            Tok::Newline | Tok::Eof | Tok::Sym(";") => {}
            _ => return Err(p.c.unexpected(&["end of statement"])),
        }
    }
    Ok(FolDocument { statements })
}

/// Parses one formula; `consts` are the identifiers read as constants.
pub fn parse_formula(text: &str, consts: &BTreeSet<String>) -> Result<Formula, ParseError> {
    let mut p = FolParser { c: Cursor::new(text, "<input>", true)?, consts: consts.clone(), bound: Vec::new() };
    let f = p.formula()?;
    p.c.skip_newlines();
    if *p.c.peek() != Tok::Eof {
        return Err(p.c.unexpected(&["end of input"]));
    }
    Ok(f)
}

/// Parses one term; `consts` are the identifiers read as constants.
pub fn parse_term(text: &str, consts: &BTreeSet<String>) -> Result<Term, ParseError> {
    let mut p = FolParser { c: Cursor::new(text, "<input>", true)?, consts: consts.clone(), bound: Vec::new() };
    let t = p.term()?;
    p.c.skip_newlines();
    if *p.c.peek() != Tok::Eof {
        return Err(p.c.unexpected(&["end of input"]));
    }
    Ok(t)
}

struct FolParser {
    c: Cursor,
    consts: BTreeSet<String>,
    bound: Vec<String>,
}

impl FolParser {
    fn name(&mut self, what: &str) -> Result<String, ParseError> {
        let at = self.c.pos;
        let x = self.c.expect_ident(what)?;
        if RESERVED.contains(&x.as_str()) {
            return Err(self.c.error_at(at, format!("{x} is a reserved word")));
        }
        Ok(x)
    }

    fn statement(&mut self) -> Result<FolStatement, ParseError> {
        if self.c.eat_word("domain") {
            if self.c.eat_word("nat") {
                return Ok(FolStatement::Domain(DomainDecl::Nat(self.c.expect_num()?)));
            }
            if self.c.eat_word("atoms") {
                let mut atoms = vec![self.name("atom")?];
                while self.c.eat_sym(",") {
                    atoms.push(self.name("atom")?);
                }
                self.consts.extend(atoms.iter().cloned());
                return Ok(FolStatement::Domain(DomainDecl::Atoms(atoms)));
            }
            return Err(self.c.unexpected(&["nat", "atoms"]));
        }
        if self.c.eat_word("const") {
            let name = self.name("constant name")?;
            self.c.expect_sym("=")?;
            let value = self.value()?;
            self.consts.insert(name.clone());
            return Ok(FolStatement::Const { name, value });
        }
        if self.c.eat_word("pred") {
            let name = self.name("predicate name")?;
            self.c.expect_sym("/")?;
            let arity = self.c.expect_num()? as usize;
            self.c.expect_sym("=")?;
            self.c.expect_sym("{")?;
            let mut rows = Vec::new();
            while !self.c.eat_sym("}") {
                let at = self.c.pos;
                self.c.expect_sym("(")?;
                let mut row = Vec::new();
                while !self.c.eat_sym(")") {
                    row.push(self.value()?);
                    if !self.c.at_sym(")") {
                        self.c.expect_sym(",")?;
                    }
                }
                if row.len() != arity {
                    return Err(self.c.error_at(at, format!("row has {} values, {name} has arity {arity}", row.len())));
                }
                rows.push(row);
                if !self.c.at_sym("}") {
                    self.c.expect_sym(",")?;
                }
            }
            return Ok(FolStatement::Pred { name, arity, rows });
        }
        if self.c.eat_word("fun") {
            let name = self.name("function name")?;
            self.c.expect_sym(":=")?;
            let order = self.lambda_head()?;
            let term = self.term()?;
            self.bound.clear();
            return Ok(FolStatement::Fun { name, order, term });
        }
        if self.c.eat_word("eval") {
            let term = self.term()?;
            let with = self.with()?;
            return Ok(FolStatement::Eval { term, with });
        }
        if self.c.eat_word("holds") {
            let formula = self.formula()?;
            let with = self.with()?;
            return Ok(FolStatement::Holds { formula, with });
        }
        if self.c.eat_word("denote") {
            return Ok(FolStatement::Denote(self.formula()?));
        }
        if matches!(self.c.peek(), Tok::Ident(_)) && matches!(self.c.peek_at(1), Tok::Sym(":=")) {
            let name = self.name("predicate name")?;
            self.c.bump();
            let order = self.lambda_head()?;
            let body = match self.formula()? {
                Formula::Or(disjuncts) => disjuncts,
                f => vec![f],
            };
            self.bound.clear();
            return Ok(FolStatement::Def(PredicateDef::new(name, order, body)));
        }
        Err(self.c.unexpected(&["statement"]))
    }

    fn lambda_head(&mut self) -> Result<VarOrder, ParseError> {
        self.c.expect_sym("\\")?;
        let at = self.c.pos;
        self.c.expect_sym("(")?;
        let mut names = Vec::new();
        while !self.c.eat_sym(")") {
            names.push(self.name("variable")?);
            if !self.c.at_sym(")") {
                self.c.expect_sym(",")?;
            }
        }
        self.c.expect_sym(".")?;
        let order = VarOrder::new(names).map_err(|e| self.c.error_at(at, e.to_string()))?;
        self.bound = order.names().to_vec();
        Ok(order)
    }

    fn with(&mut self) -> Result<Vec<(String, DomainValue)>, ParseError> {
        let mut out = Vec::new();
        if self.c.eat_word("with") {
            loop {
                let x = self.name("variable")?;
                self.c.expect_sym("=")?;
                out.push((x, self.value()?));
                if !self.c.eat_sym(",") {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn value(&mut self) -> Result<DomainValue, ParseError> {
        match self.c.peek().clone() {
            Tok::Num(n) => {
                self.c.bump();
                Ok(DomainValue::Nat(n))
            }
            Tok::Ident(x) if x == "top" => {
                self.c.bump();
                Ok(DomainValue::Top)
            }
            Tok::Ident(_) => Ok(DomainValue::Atom(self.name("value")?)),
            _ => Err(self.c.unexpected(&["numeral", "top", "atom"])),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.c.eat_sym("<-") {
            let rhs = self.disjunction()?;
            return Ok(Formula::implied_by(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut items = vec![self.conjunction()?];
        while self.c.eat_sym("|") {
            items.push(self.conjunction()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Formula::Or(items) })
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut items = vec![self.unary()?];
        while self.c.eat_sym("&") {
            items.push(self.unary()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Formula::And(items) })
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.c.eat_sym("~") {
            return Ok(Formula::not(self.unary()?));
        }
        for (word, exists) in [("exists", true), ("forall", false)] {
            if self.c.eat_word(word) {
                let x = self.name("variable")?;
                self.c.expect_sym(".")?;
                self.bound.push(x.clone());
                let body = self.formula();
                self.bound.pop();
                let body = body?;
                return Ok(if exists { Formula::exists(x, body) } else { Formula::forall(x, body) });
            }
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let start = self.c.pos;
        if self.c.at_sym("(") {
            if let Ok(Some(f)) = self.comparison() {
                return Ok(f);
            }
            self.c.pos = start;
            self.c.bump();
            let f = self.formula()?;
            self.c.expect_sym(")")?;
            return Ok(f);
        }
        if let Some(f) = self.comparison()? {
            return Ok(f);
        }
        self.c.pos = start;
        let t = self.term()?;
        match t {
            Term::FnApp(name, args) if name != "+" && name != "*" => Ok(Formula::atom(name, args)),
            Term::Var(name) => Ok(Formula::atom(name, vec![])),
            _ => Err(self.c.error_at(start, "expected a predicate or a comparison")),
        }
    }

    /// `t = u` or `t < u`, or `None` if a term is not followed by either.
    fn comparison(&mut self) -> Result<Option<Formula>, ParseError> {
        let lhs = self.term()?;
        for op in ["=", "<"] {
            if self.c.eat_sym(op) {
                let rhs = self.term()?;
                return Ok(Some(Formula::atom(op, vec![lhs, rhs])));
            }
        }
        Ok(None)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.product()?;
        while self.c.eat_sym("+") {
            acc = Term::app("+", vec![acc, self.product()?]);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.term_primary()?;
        while self.c.eat_sym("*") || self.c.eat_sym("×") {
            acc = Term::app("*", vec![acc, self.term_primary()?]);
        }
        Ok(acc)
    }

    fn term_primary(&mut self) -> Result<Term, ParseError> {
        match self.c.peek().clone() {
            Tok::Num(n) => {
                self.c.bump();
                Ok(Term::nat(n))
            }
            Tok::Ident(x) if x == "top" => {
                self.c.bump();
                Ok(Term::constant("top"))
            }
            Tok::Ident(_) => {
                let x = self.name("term")?;
                if self.c.eat_sym("(") {
                    let mut args = Vec::new();
                    while !self.c.eat_sym(")") {
                        args.push(self.term()?);
                        if !self.c.at_sym(")") {
                            self.c.expect_sym(",")?;
                        }
                    }
                    return Ok(Term::app(x, args));
                }
                if self.consts.contains(&x) && !self.bound.contains(&x) {
                    Ok(Term::constant(x))
                } else {
                    Ok(Term::var(x))
                }
            }
            Tok::Sym("(") => {
                self.c.bump();
                let t = self.term()?;
                self.c.expect_sym(")")?;
                Ok(t)
            }
            _ => Err(self.c.unexpected(&["term"])),
        }
    }
}

pub fn pretty_value(v: &DomainValue) -> String {
    match v {
        DomainValue::Nat(n) => n.to_string(),
        DomainValue::Top => "top".into(),
        DomainValue::Atom(a) => a.clone(),
    }
}

pub fn pretty_term(t: &Term) -> String {
    let mut out = String::new();
    pp_term(t, 0, &mut out);
    out
}

/// Levels: 0 sum, 1 product, 2 primary.
fn pp_term(t: &Term, level: u8, out: &mut String) {
    match t {
        Term::Var(x) | Term::Const(x) => out.push_str(x),
        Term::FnApp(op, args) if args.len() == 2 && (op == "+" || op == "*") => {
            let mine = if op == "+" { 0 } else { 1 };
            let paren = level > mine;
            if paren {
                out.push('(');
            }
            pp_term(&args[0], mine, out);
            out.push_str(if op == "+" { " + " } else { " * " });
            pp_term(&args[1], mine + 1, out);
            if paren {
                out.push(')');
            }
        }
        Term::FnApp(f, args) => {
            out.push_str(f);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                pp_term(a, 0, out);
            }
            out.push(')');
        }
    }
}

pub fn pretty_formula(f: &Formula) -> String {
    let mut out = String::new();
    pp_formula(f, 0, true, &mut out);
    out
}

/// Levels: 0 `<-`, 1 `|`, 2 `&`, 3 prefix. Quantifier bodies run to the
/// end, so a quantifier not in rightmost position gets parentheses.
fn pp_formula(f: &Formula, level: u8, rightmost: bool, out: &mut String) {
    let (mine, quantifier) = match f {
        Formula::If(..) => (0, false),
        Formula::Or(_) => (1, false),
        Formula::And(_) => (2, false),
        Formula::Exists(..) | Formula::Forall(..) => (3, true),
        Formula::Not(_) | Formula::Atom(..) => (3, false),
    };
    let paren = level > mine || (quantifier && !rightmost);
    let rightmost = rightmost || paren;
    if paren {
        out.push('(');
    }
    match f {
        Formula::Atom(p, args) if args.len() == 2 && (p == "=" || p == "<") => {
            pp_term(&args[0], 0, out);
            out.push_str(if p == "=" { " = " } else { " < " });
            pp_term(&args[1], 0, out);
        }
        Formula::Atom(p, args) => pp_term(&Term::FnApp(p.clone(), args.clone()), 0, out),
        Formula::And(items) | Formula::Or(items) => {
            let sep = if mine == 1 { " | " } else { " & " };
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(sep);
                }
                pp_formula(item, mine + 1, rightmost && i + 1 == items.len(), out);
            }
        }
        Formula::If(c, a) => {
            pp_formula(c, 1, false, out);
            out.push_str(" <- ");
            pp_formula(a, 1, rightmost, out);
        }
        Formula::Not(g) => {
            out.push('~');
            pp_formula(g, 3, rightmost, out);
        }
        Formula::Exists(x, body) | Formula::Forall(x, body) => {
            out.push_str(if matches!(f, Formula::Exists(..)) { "exists " } else { "forall " });
            out.push_str(x);
            out.push_str(". ");
            pp_formula(body, 0, true, out);
        }
    }
    if paren {
        out.push(')');
    }
}

fn pretty_with(with: &[(String, DomainValue)]) -> String {
    if with.is_empty() {
        return String::new();
    }
    let parts: Vec<String> = with.iter().map(|(x, v)| format!("{x} = {}", pretty_value(v))).collect();
    format!(" with {}", parts.join(", "))
}

pub fn pretty_statement(s: &FolStatement) -> String {
    match s {
        FolStatement::Domain(DomainDecl::Nat(b)) => format!("domain nat {b}"),
        FolStatement::Domain(DomainDecl::Atoms(atoms)) => format!("domain atoms {}", atoms.join(", ")),
        FolStatement::Const { name, value } => format!("const {name} = {}", pretty_value(value)),
        FolStatement::Pred { name, arity, rows } => {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| format!("({})", r.iter().map(pretty_value).collect::<Vec<_>>().join(", ")))
                .collect();
            format!("pred {name}/{arity} = {{{}}}", rows.join(", "))
        }
        FolStatement::Fun { name, order, term } => {
            format!("fun {name} := \\({}). {}", order.names().join(", "), pretty_term(term))
        }
        FolStatement::Def(def) => {
            let mut body = String::new();
            for (i, d) in def.body.iter().enumerate() {
                if i > 0 {
                    body.push_str(" | ");
                }
                pp_formula(d, 2, i + 1 == def.body.len(), &mut body);
            }
            format!("{} := \\({}). {body}", def.name, def.order.names().join(", "))
        }
        FolStatement::Eval { term, with } => format!("eval {}{}", pretty_term(term), pretty_with(with)),
        FolStatement::Holds { formula, with } => {
            let mut text = String::new();
            // `with` would otherwise continue a trailing quantifier body
            pp_formula(formula, 0, with.is_empty(), &mut text);
            format!("holds {text}{}", pretty_with(with))
        }
        FolStatement::Denote(f) => format!("denote {}", pretty_formula(f)),
    }
}

pub fn pretty_fol(doc: &FolDocument) -> String {
    doc.statements.iter().map(|s| pretty_statement(s) + "\n").collect()
}

#[derive(Debug, Clone)]
pub enum FolQuery {
    Eval { term: Term, with: VarTuple },
    Holds { formula: Formula, with: VarTuple },
    Denote(Formula),
}

/// A document turned into an interpretation, the extension it defines, and
/// its queries in order.
#[derive(Debug, Clone)]
pub struct FolSetup {
    pub interp: Interpretation,
    pub ext: PredicateExtension,
    pub queries: Vec<FolQuery>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FolBuildError {
    #[error("more than one domain declaration")]
    DuplicateDomain,
    #[error("statement {index}: {source}")]
    Logic { index: usize, source: LogicError },
}

/// The default carrier bound when a document declares no domain.
pub const DEFAULT_BOUND: u64 = 8;

/// Builds the interpretation statement by statement. `bound` overrides the
/// bound of a `domain nat` declaration, or supplies one if there is none.
pub fn build_fol(doc: &FolDocument, bound: Option<u64>) -> Result<FolSetup, FolBuildError> {
    let domains: Vec<&DomainDecl> = doc
        .statements
        .iter()
        .filter_map(|s| match s {
            FolStatement::Domain(d) => Some(d),
            _ => None,
        })
        .collect();
    if domains.len() > 1 {
        return Err(FolBuildError::DuplicateDomain);
    }
    let mut interp = match domains.first() {
        Some(DomainDecl::Atoms(atoms)) => {
            let domain = Domain::enumerated(atoms.iter().cloned())
                .map_err(|e| FolBuildError::Logic { index: 0, source: e.into() })?;
            let mut interp = Interpretation::new(domain);
            for a in atoms {
                interp
                    .define_constant(a.clone(), DomainValue::Atom(a.clone()))
                    .map_err(|source| FolBuildError::Logic { index: 0, source })?;
            }
            interp
        }
        Some(DomainDecl::Nat(b)) => nat_interpretation(bound.unwrap_or(*b)),
        None => nat_interpretation(bound.unwrap_or(DEFAULT_BOUND)),
    };
    let mut defs = Vec::new();
    let mut queries = Vec::new();
    for (i, s) in doc.statements.iter().enumerate() {
        let err = |source: LogicError| FolBuildError::Logic { index: i + 1, source };
        let assignment = |with: &[(String, DomainValue)]| -> VarTuple { with.iter().cloned().collect() };
        match s {
            FolStatement::Domain(_) => {}
            FolStatement::Const { name, value } => interp.define_constant(name.clone(), value.clone()).map_err(err)?,
            FolStatement::Pred { name, arity, rows } => {
                let rel = OrdRelation::from_rows(*arity, rows.iter().cloned().map(OrdTuple::new))
                    .map_err(|e| err(e.into()))?;
                interp.define_predicate(name.clone(), rel).map_err(err)?;
            }
            FolStatement::Fun { name, order, term } => {
                interp = extend_with_function(&interp, name, order, term).map_err(err)?;
            }
            FolStatement::Def(def) => defs.push(def.clone()),
            FolStatement::Eval { term, with } => {
                queries.push(FolQuery::Eval { term: term.clone(), with: assignment(with) })
            }
            FolStatement::Holds { formula, with } => {
                queries.push(FolQuery::Holds { formula: formula.clone(), with: assignment(with) })
            }
            FolStatement::Denote(f) => queries.push(FolQuery::Denote(f.clone())),
        }
    }
    Ok(FolSetup { interp, ext: PredicateExtension::new(defs), queries })
}

fn nat_interpretation(bound: u64) -> Interpretation {
    let mut interp = Interpretation::arithmetic(bound);
    interp.define_constant("top", DomainValue::Top).expect("top is in every bounded carrier");
    interp
}
