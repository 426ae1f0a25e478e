//! Abstract syntax of flowcharts and procedures.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use lamech_core::VarOrder;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub String);

impl NodeId {
    pub fn new(name: impl Into<String>) -> Self {
        NodeId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for NodeId {
    fn from(s: &str) -> Self {
        NodeId(s.to_string())
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Natural-number expressions. `Sub` truncates at zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr {
    Num(u64),
    Ident(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn ident(name: impl Into<String>) -> Self {
        Expr::Ident(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Expr, b: Expr) -> Self {
        Expr::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: Expr, b: Expr) -> Self {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn as_ident(&self) -> Option<&str> {
        match self {
            Expr::Ident(x) => Some(x),
            _ => None,
        }
    }

    pub fn idents(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Ident(x) => {
                out.insert(x.clone());
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.idents(out);
                b.idents(out);
            }
        }
    }

    /// Replaces identifiers through `map`, leaving unmapped ones alone.
    pub fn substitute(&self, map: &BTreeMap<String, Expr>) -> Expr {
        match self {
            Expr::Num(n) => Expr::Num(*n),
            Expr::Ident(x) => map.get(x).cloned().unwrap_or_else(|| self.clone()),
            Expr::Add(a, b) => Expr::add(a.substitute(map), b.substitute(map)),
            Expr::Sub(a, b) => Expr::sub(a.substitute(map), b.substitute(map)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolExpr {
    Eq(Expr, Expr),
    Lt(Expr, Expr),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    #[allow(clippy::should_implement_trait)]
    pub fn not(b: BoolExpr) -> Self {
        BoolExpr::Not(Box::new(b))
    }

    pub fn and(a: BoolExpr, b: BoolExpr) -> Self {
        BoolExpr::And(Box::new(a), Box::new(b))
    }

    pub fn idents(&self, out: &mut BTreeSet<String>) {
        match self {
            BoolExpr::Eq(a, b) | BoolExpr::Lt(a, b) => {
                a.idents(out);
                b.idents(out);
            }
            BoolExpr::Not(b) => b.idents(out),
            BoolExpr::And(a, b) => {
                a.idents(out);
                b.idents(out);
            }
        }
    }

    pub fn substitute(&self, map: &BTreeMap<String, Expr>) -> BoolExpr {
        match self {
            BoolExpr::Eq(a, b) => BoolExpr::Eq(a.substitute(map), b.substitute(map)),
            BoolExpr::Lt(a, b) => BoolExpr::Lt(a.substitute(map), b.substitute(map)),
            BoolExpr::Not(b) => BoolExpr::not(b.substitute(map)),
            BoolExpr::And(a, b) => BoolExpr::and(a.substitute(map), b.substitute(map)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stmt {
    Assign { lhs: String, rhs: Expr },
    Call { proc: String, actuals: Vec<Expr> },
}

impl Stmt {
    pub fn assign(lhs: impl Into<String>, rhs: Expr) -> Self {
        Stmt::Assign { lhs: lhs.into(), rhs }
    }

    pub fn call(proc: impl Into<String>, actuals: Vec<Expr>) -> Self {
        Stmt::Call { proc: proc.into(), actuals }
    }

    /// Location identifiers, not procedure names.
    pub fn idents(&self, out: &mut BTreeSet<String>) {
        match self {
            Stmt::Assign { lhs, rhs } => {
                out.insert(lhs.clone());
                rhs.idents(out);
            }
            Stmt::Call { actuals, .. } => actuals.iter().for_each(|a| a.idents(out)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlowBox {
    pub entry: NodeId,
    pub stmt: Stmt,
    pub exit: NodeId,
}

impl FlowBox {
    pub fn new(entry: impl Into<NodeId>, stmt: Stmt, exit: impl Into<NodeId>) -> Self {
        FlowBox { entry: entry.into(), stmt, exit: exit.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Test {
    pub entry: NodeId,
    pub cond: BoolExpr,
    pub pos_exit: NodeId,
    pub neg_exit: NodeId,
}

impl Test {
    pub fn new(
        entry: impl Into<NodeId>,
        cond: BoolExpr,
        pos_exit: impl Into<NodeId>,
        neg_exit: impl Into<NodeId>,
    ) -> Self {
        Test { entry: entry.into(), cond, pos_exit: pos_exit.into(), neg_exit: neg_exit.into() }
    }
}

impl From<String> for NodeId {
    fn from(s: String) -> Self {
        NodeId(s)
    }
}

/// What leaves a node: at most one box or test.
#[derive(Debug, Clone, Copy)]
pub enum Outgoing<'a> {
    Box(&'a FlowBox),
    Test(&'a Test),
}

/// Nodes, boxes and tests with distinguished start and halt nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Body {
    pub nodes: BTreeSet<NodeId>,
    pub boxes: Vec<FlowBox>,
    pub tests: Vec<Test>,
    pub start: NodeId,
    pub halt: NodeId,
}

impl Body {
    /// A body whose node set is everything mentioned by its parts.
    pub fn new(start: impl Into<NodeId>, halt: impl Into<NodeId>, boxes: Vec<FlowBox>, tests: Vec<Test>) -> Self {
        let mut body = Body {
            nodes: BTreeSet::new(),
            boxes,
            tests,
            start: start.into(),
            halt: halt.into(),
        };
        body.nodes = body.mentioned_nodes();
        body
    }

    pub fn mentioned_nodes(&self) -> BTreeSet<NodeId> {
        let mut nodes = BTreeSet::from([self.start.clone(), self.halt.clone()]);
        for b in &self.boxes {
            nodes.insert(b.entry.clone());
            nodes.insert(b.exit.clone());
        }
        for t in &self.tests {
            nodes.insert(t.entry.clone());
            nodes.insert(t.pos_exit.clone());
            nodes.insert(t.neg_exit.clone());
        }
        nodes
    }

    pub fn outgoing(&self, node: &NodeId) -> Option<Outgoing<'_>> {
        if let Some(b) = self.boxes.iter().find(|b| &b.entry == node) {
            return Some(Outgoing::Box(b));
        }
        self.tests.iter().find(|t| &t.entry == node).map(Outgoing::Test)
    }

    /// Location identifiers used anywhere in the body.
    pub fn idents(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for b in &self.boxes {
            b.stmt.idents(&mut out);
        }
        for t in &self.tests {
            t.cond.idents(&mut out);
        }
        out
    }

    /// Identifiers on the left of an assignment.
    pub fn assigned(&self) -> BTreeSet<String> {
        self.boxes
            .iter()
            .filter_map(|b| match &b.stmt {
                Stmt::Assign { lhs, .. } => Some(lhs.clone()),
                Stmt::Call { .. } => None,
            })
            .collect()
    }

    pub fn called(&self) -> BTreeSet<String> {
        self.boxes
            .iter()
            .filter_map(|b| match &b.stmt {
                Stmt::Call { proc, .. } => Some(proc.clone()),
                Stmt::Assign { .. } => None,
            })
            .collect()
    }

    pub fn has_calls(&self) -> bool {
        self.boxes.iter().any(|b| matches!(b.stmt, Stmt::Call { .. }))
    }

    /// Rewrites every location identifier through `map`, including
    /// assignment targets. Targets must map to identifiers.
    pub fn substitute(&self, map: &BTreeMap<String, Expr>) -> Body {
        let boxes = self
            .boxes
            .iter()
            .map(|b| {
                let stmt = match &b.stmt {
                    Stmt::Assign { lhs, rhs } => Stmt::Assign {
                        lhs: match map.get(lhs) {
                            Some(Expr::Ident(y)) => y.clone(),
                            Some(other) => panic!("assignment target {lhs} mapped to {other:?}"),
                            None => lhs.clone(),
                        },
                        rhs: rhs.substitute(map),
                    },
                    Stmt::Call { proc, actuals } => Stmt::Call {
                        proc: proc.clone(),
                        actuals: actuals.iter().map(|a| a.substitute(map)).collect(),
                    },
                };
                FlowBox { entry: b.entry.clone(), stmt, exit: b.exit.clone() }
            })
            .collect();
        let tests = self
            .tests
            .iter()
            .map(|t| Test { cond: t.cond.substitute(map), ..t.clone() })
            .collect();
        Body { boxes, tests, ..self.clone() }
    }

    /// Renames called procedures through `map`.
    pub fn rename_calls(&self, map: &BTreeMap<String, String>) -> Body {
        let mut body = self.clone();
        for b in &mut body.boxes {
            if let Stmt::Call { proc, .. } = &mut b.stmt {
                if let Some(new) = map.get(proc) {
                    *proc = new.clone();
                }
            }
        }
        body
    }
}

/// A procedure-free flowchart over declared locations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flowchart {
    pub decls: BTreeSet<String>,
    pub body: Body,
}

impl Flowchart {
    pub fn new<I, S>(decls: I, body: Body) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Flowchart { decls: decls.into_iter().map(Into::into).collect(), body }
    }
}

/// `name = \(formals). proc`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcDecl {
    pub name: String,
    pub formals: VarOrder,
    pub proc: Procedure,
}

/// Location declarations, procedure declarations, and a body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Procedure {
    pub locations: BTreeSet<String>,
    pub procs: Vec<ProcDecl>,
    pub body: Body,
}

impl Procedure {
    pub fn new<I, S>(locations: I, procs: Vec<ProcDecl>, body: Body) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Procedure { locations: locations.into_iter().map(Into::into).collect(), procs, body }
    }

    /// Identifiers used in the body but not declared here.
    pub fn free_idents(&self) -> BTreeSet<String> {
        self.body.idents().difference(&self.locations).cloned().collect()
    }
}

impl From<Flowchart> for Procedure {
    fn from(fc: Flowchart) -> Self {
        Procedure { locations: fc.decls, procs: Vec::new(), body: fc.body }
    }
}
