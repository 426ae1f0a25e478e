use std::collections::BTreeSet;

use lamech_core::VarOrder;

/// A lambda term. `TupleAbs` binds every name of its order simultaneously;
/// `TupleApp` supplies one argument per bound name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LamTerm {
    Var(String),
    App(Box<LamTerm>, Box<LamTerm>),
    Abs(String, Box<LamTerm>),
    TupleAbs(VarOrder, Box<LamTerm>),
    TupleApp(Box<LamTerm>, Vec<LamTerm>),
}

impl LamTerm {
    pub fn var(name: impl Into<String>) -> Self {
        LamTerm::Var(name.into())
    }

    pub fn app(fun: LamTerm, arg: LamTerm) -> Self {
        LamTerm::App(Box::new(fun), Box::new(arg))
    }

    /// Left-nested application `f a0 a1 ..`.
    pub fn apps(fun: LamTerm, args: impl IntoIterator<Item = LamTerm>) -> Self {
        args.into_iter().fold(fun, LamTerm::app)
    }

    pub fn abs(var: impl Into<String>, body: LamTerm) -> Self {
        LamTerm::Abs(var.into(), Box::new(body))
    }

    pub fn tuple_abs(order: VarOrder, body: LamTerm) -> Self {
        LamTerm::TupleAbs(order, Box::new(body))
    }

    pub fn tuple_app(fun: LamTerm, args: Vec<LamTerm>) -> Self {
        LamTerm::TupleApp(Box::new(fun), args)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    pub fn is_free(&self, name: &str) -> bool {
        match self {
            LamTerm::Var(v) => v == name,
            LamTerm::App(f, a) => f.is_free(name) || a.is_free(name),
            LamTerm::Abs(x, body) => x != name && body.is_free(name),
            LamTerm::TupleAbs(order, body) => !order.contains(name) && body.is_free(name),
            LamTerm::TupleApp(f, args) => f.is_free(name) || args.iter().any(|a| a.is_free(name)),
        }
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            LamTerm::Var(v) => {
                if !bound.contains(&v.as_str()) {
                    out.insert(v.clone());
                }
            }
            LamTerm::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
            LamTerm::Abs(x, body) => {
                bound.push(x);
                body.collect_free(bound, out);
                bound.pop();
            }
            LamTerm::TupleAbs(order, body) => {
                let depth = bound.len();
                bound.extend(order.iter());
                body.collect_free(bound, out);
                bound.truncate(depth);
            }
            LamTerm::TupleApp(f, args) => {
                f.collect_free(bound, out);
                for a in args {
                    a.collect_free(bound, out);
                }
            }
        }
    }

    /// Every name occurring in the term, free or bound.
    pub fn all_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            LamTerm::Var(v) => {
                out.insert(v.clone());
            }
            LamTerm::App(f, a) => {
                f.collect_names(out);
                a.collect_names(out);
            }
            LamTerm::Abs(x, body) => {
                out.insert(x.clone());
                body.collect_names(out);
            }
            LamTerm::TupleAbs(order, body) => {
                out.extend(order.iter().map(str::to_string));
                body.collect_names(out);
            }
            LamTerm::TupleApp(f, args) => {
                f.collect_names(out);
                for a in args {
                    a.collect_names(out);
                }
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            LamTerm::Var(_) => 1,
            LamTerm::App(f, a) => 1 + f.size() + a.size(),
            LamTerm::Abs(_, body) | LamTerm::TupleAbs(_, body) => 1 + body.size(),
            LamTerm::TupleApp(f, args) => 1 + f.size() + args.iter().map(LamTerm::size).sum::<usize>(),
        }
    }
}
