use std::collections::BTreeSet;

use crate::{Domain, OrdTuple, TupleError, VarTuple};

/// A set of tuples over a fixed set of variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarRelation {
    vars: BTreeSet<String>,
    rows: BTreeSet<VarTuple>,
}

impl VarRelation {
    pub fn empty(vars: BTreeSet<String>) -> Self {
        VarRelation {
            vars,
            rows: BTreeSet::new(),
        }
    }

    pub fn from_rows<I>(vars: BTreeSet<String>, rows: I) -> Result<Self, TupleError>
    where
        I: IntoIterator<Item = VarTuple>,
    {
        let mut rel = VarRelation::empty(vars);
        for row in rows {
            rel.insert(row)?;
        }
        Ok(rel)
    }

    pub fn insert(&mut self, row: VarTuple) -> Result<bool, TupleError> {
        if row.names() != self.vars {
            return Err(TupleError::RowIndexMismatch);
        }
        Ok(self.rows.insert(row))
    }

    pub fn vars(&self) -> &BTreeSet<String> {
        &self.vars
    }

    pub fn rows(&self) -> &BTreeSet<VarTuple> {
        &self.rows
    }

    pub fn contains(&self, row: &VarTuple) -> bool {
        self.rows.contains(row)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// A set of ordinal-indexed tuples of one arity: a subset of `D^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrdRelation {
    arity: usize,
    rows: BTreeSet<OrdTuple>,
}

impl OrdRelation {
    pub fn empty(arity: usize) -> Self {
        OrdRelation {
            arity,
            rows: BTreeSet::new(),
        }
    }

    /// `carrier^arity`.
    pub fn full(domain: &Domain, arity: usize) -> Self {
        OrdRelation {
            arity,
            rows: domain.tuples(arity).map(OrdTuple::new).collect(),
        }
    }

    /// `{(d, d) | d in carrier}`.
    pub fn identity(domain: &Domain) -> Self {
        OrdRelation {
            arity: 2,
            rows: domain
                .carrier()
                .iter()
                .map(|d| OrdTuple::new(vec![d.clone(), d.clone()]))
                .collect(),
        }
    }

    pub fn from_rows<I>(arity: usize, rows: I) -> Result<Self, TupleError>
    where
        I: IntoIterator<Item = OrdTuple>,
    {
        let mut rel = OrdRelation::empty(arity);
        for row in rows {
            rel.insert(row)?;
        }
        Ok(rel)
    }

    pub fn insert(&mut self, row: OrdTuple) -> Result<bool, TupleError> {
        if row.len() != self.arity {
            return Err(TupleError::LengthMismatch {
                expected: self.arity,
                found: row.len(),
            });
        }
        Ok(self.rows.insert(row))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rows(&self) -> &BTreeSet<OrdTuple> {
        &self.rows
    }

    pub fn contains(&self, row: &OrdTuple) -> bool {
        self.rows.contains(row)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_subset(&self, other: &OrdRelation) -> bool {
        self.arity == other.arity && self.rows.is_subset(&other.rows)
    }

    /// Every row's values lie in `domain`.
    pub fn within(&self, domain: &Domain) -> bool {
        self.rows
            .iter()
            .all(|row| row.values().iter().all(|v| domain.contains(v)))
    }
}
