use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(String),
    FnApp(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::Const(name.into())
    }

    pub fn nat(n: u64) -> Self {
        Term::Const(n.to_string())
    }

    pub fn app(symbol: impl Into<String>, args: Vec<Term>) -> Self {
        Term::FnApp(symbol.into(), args)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const(_) => {}
            Term::FnApp(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn mentions_symbol(&self, symbol: &str) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Const(c) => c == symbol,
            Term::FnApp(f, args) => f == symbol || args.iter().any(|a| a.mentions_symbol(symbol)),
        }
    }
}

/// A first-order formula. `If(a, b)` reads "a if b".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String, Vec<Term>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
    If(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn atom(pred: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom(pred.into(), args)
    }

    pub fn eq(lhs: Term, rhs: Term) -> Self {
        Formula::Atom(crate::EQUALITY.into(), vec![lhs, rhs])
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn implied_by(consequent: Formula, antecedent: Formula) -> Self {
        Formula::If(Box::new(consequent), Box::new(antecedent))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Self {
        Formula::Forall(var.into(), Box::new(body))
    }

    /// The closed atom `0 = 0`, used for the empty conjunction.
    pub fn truth() -> Self {
        Formula::eq(Term::nat(0), Term::nat(0))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => {
                for v in args.iter().flat_map(Term::free_vars) {
                    if !bound.contains(&v.as_str()) {
                        out.insert(v);
                    }
                }
            }
            Formula::And(fs) | Formula::Or(fs) => {
                fs.iter().for_each(|f| f.collect_free(bound, out));
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::If(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                bound.push(x);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Predicate symbols with the argument count of each occurrence.
    pub fn predicate_uses(&self) -> Vec<(&str, usize)> {
        let mut out = Vec::new();
        self.visit_atoms(&mut |p, args| out.push((p, args.len())));
        out
    }

    pub fn visit_atoms<'a>(&'a self, visit: &mut impl FnMut(&'a str, &'a [Term])) {
        match self {
            Formula::Atom(p, args) => visit(p, args),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.visit_atoms(visit)),
            Formula::Not(f) | Formula::Exists(_, f) | Formula::Forall(_, f) => f.visit_atoms(visit),
            Formula::If(a, b) => {
                a.visit_atoms(visit);
                b.visit_atoms(visit);
            }
        }
    }
}
