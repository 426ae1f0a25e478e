use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{DomainValue, TupleError};

/// A tuple indexed by variable names: an element of `X -> D`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarTuple(BTreeMap<String, DomainValue>);

impl VarTuple {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&DomainValue> {
        self.0.get(name)
    }

    pub fn insert(&mut self, name: impl Into<String>, value: DomainValue) -> Option<DomainValue> {
        self.0.insert(name.into(), value)
    }

    /// `alpha_{x|d}`: a copy with `name` rebound to `value`.
    pub fn updated(&self, name: &str, value: DomainValue) -> Self {
        let mut next = self.clone();
        next.insert(name, value);
        next
    }

    pub fn remove(&mut self, name: &str) -> Option<DomainValue> {
        self.0.remove(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn names(&self) -> BTreeSet<String> {
        self.0.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &DomainValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// The restriction of this tuple to `names`. Missing names are skipped.
    pub fn restrict(&self, names: &BTreeSet<String>) -> Self {
        VarTuple(
            self.0
                .iter()
                .filter(|(k, _)| names.contains(*k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        )
    }
}

impl<K: Into<String>> FromIterator<(K, DomainValue)> for VarTuple {
    fn from_iter<T: IntoIterator<Item = (K, DomainValue)>>(iter: T) -> Self {
        VarTuple(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

impl fmt::Display for VarTuple {
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

/// A tuple indexed by the ordinal `n = {0, .., n-1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrdTuple(Vec<DomainValue>);

impl OrdTuple {
    pub fn new(values: Vec<DomainValue>) -> Self {
        OrdTuple(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&DomainValue> {
        self.0.get(index)
    }

    pub fn values(&self) -> &[DomainValue] {
        &self.0
    }

    pub fn into_values(self) -> Vec<DomainValue> {
        self.0
    }
}

impl From<Vec<DomainValue>> for OrdTuple {
    fn from(values: Vec<DomainValue>) -> Self {
        OrdTuple(values)
    }
}

impl FromIterator<DomainValue> for OrdTuple {
    fn from_iter<T: IntoIterator<Item = DomainValue>>(iter: T) -> Self {
        OrdTuple(iter.into_iter().collect())
    }
}

impl fmt::Display for OrdTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// An enumeration `x: n -> X` of pairwise distinct variable names.
///
/// Distinctness is what makes `x` invertible, so it is checked on
/// construction and every `VarOrder` value is a bijection onto its names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarOrder(Vec<String>);

impl VarOrder {
    pub fn new<I, S>(names: I) -> Result<Self, TupleError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(TupleError::RepeatedVariable(name.clone()));
            }
        }
        Ok(VarOrder(names))
    }

    pub fn empty() -> Self {
        VarOrder(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name_set(&self) -> BTreeSet<String> {
        self.0.iter().cloned().collect()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.iter().any(|n| n == name)
    }

    /// Fails with `NameMismatch` unless this order enumerates exactly `names`.
    pub fn check_enumerates(&self, names: &BTreeSet<String>) -> Result<(), TupleError> {
        let own = self.name_set();
        if &own == names {
            Ok(())
        } else {
            Err(TupleError::NameMismatch {
                expected: own,
                found: names.clone(),
            })
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

impl fmt::Display for VarOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}
