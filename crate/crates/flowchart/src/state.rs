use std::collections::BTreeMap;
use std::fmt;

use crate::{BoolExpr, Expr, FlowError, NodeId};

/// Values of locations, by identifier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DataState(BTreeMap<String, u64>);

impl DataState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<u64> {
        self.0.get(name).copied()
    }

    pub fn set(&mut self, name: impl Into<String>, value: u64) {
        self.0.insert(name.into(), value);
    }

    pub fn with(mut self, name: impl Into<String>, value: u64) -> Self {
        self.set(name, value);
        self
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_map(&self) -> &BTreeMap<String, u64> {
        &self.0
    }
}

impl<K: Into<String>> FromIterator<(K, u64)> for DataState {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        DataState(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

impl fmt::Display for DataState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MachineState {
    pub control: NodeId,
    pub data: DataState,
}

pub fn eval_expr(e: &Expr, lookup: &dyn Fn(&str) -> Option<u64>) -> Result<u64, FlowError> {
    Ok(match e {
        Expr::Num(n) => *n,
        Expr::Ident(x) => lookup(x).ok_or_else(|| FlowError::UnboundIdentifier(x.clone()))?,
        Expr::Add(a, b) => eval_expr(a, lookup)?.saturating_add(eval_expr(b, lookup)?),
        Expr::Sub(a, b) => eval_expr(a, lookup)?.saturating_sub(eval_expr(b, lookup)?),
    })
}

pub fn eval_bool(b: &BoolExpr, lookup: &dyn Fn(&str) -> Option<u64>) -> Result<bool, FlowError> {
    Ok(match b {
        BoolExpr::Eq(x, y) => eval_expr(x, lookup)? == eval_expr(y, lookup)?,
        BoolExpr::Lt(x, y) => eval_expr(x, lookup)? < eval_expr(y, lookup)?,
        BoolExpr::Not(c) => !eval_bool(c, lookup)?,
        BoolExpr::And(c, d) => eval_bool(c, lookup)? && eval_bool(d, lookup)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monus_truncates() {
        let d = DataState::new().with("x", 3).with("y", 5);
        let look = |n: &str| d.get(n);
        let e = Expr::sub(Expr::ident("x"), Expr::ident("y"));
        assert_eq!(eval_expr(&e, &look).unwrap(), 0);
        let e = Expr::sub(Expr::ident("y"), Expr::ident("x"));
        assert_eq!(eval_expr(&e, &look).unwrap(), 2);
    }

    #[test]
    fn unbound_identifier() {
        let look = |_: &str| None;
        assert_eq!(
            eval_expr(&Expr::ident("q"), &look),
            Err(FlowError::UnboundIdentifier("q".into()))
        );
    }

    #[test]
    fn boolean_connectives() {
        let d = DataState::new().with("x", 1).with("y", 2);
        let look = |n: &str| d.get(n);
        let lt = BoolExpr::Lt(Expr::ident("x"), Expr::ident("y"));
        let eq = BoolExpr::Eq(Expr::ident("x"), Expr::Num(1));
        assert!(eval_bool(&BoolExpr::and(lt.clone(), eq.clone()), &look).unwrap());
        assert!(!eval_bool(&BoolExpr::and(BoolExpr::not(lt), eq), &look).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(DataState::new().with("Y", 2).with("X", 1).to_string(), "{X=1, Y=2}");
    }
}
