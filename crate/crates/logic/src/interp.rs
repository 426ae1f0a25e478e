use std::collections::BTreeMap;

use lamech_core::{Domain, DomainValue, OrdFunction, OrdRelation};

use crate::LogicError;

pub const EQUALITY: &str = "=";
pub const LESS: &str = "<";
pub const SUCC: &str = "s";
pub const PLUS: &str = "+";
pub const TIMES: &str = "*";

/// A finite interpretation: a domain and meanings for constant, function,
/// and predicate symbols.
///
/// On bounded-natural domains every numeral `0`, `1`, .. is implicitly a
/// constant denoting itself, or the sink once it reaches the bound.
#[derive(Debug, Clone)]
pub struct Interpretation {
    domain: Domain,
    consts: BTreeMap<String, DomainValue>,
    fns: BTreeMap<String, OrdFunction>,
    preds: BTreeMap<String, OrdRelation>,
}

impl Interpretation {
    /// An interpretation with no symbols except `=`, the identity relation.
    pub fn new(domain: Domain) -> Self {
        let identity = OrdRelation::identity(&domain);
        let mut preds = BTreeMap::new();
        preds.insert(EQUALITY.to_string(), identity);
        Interpretation {
            domain,
            consts: BTreeMap::new(),
            fns: BTreeMap::new(),
            preds,
        }
    }

    /// Bounded naturals `{0..bound-1} ∪ {Top}` with successor `s`, `+`, `*`,
    /// `<` and `=`. Arithmetic saturates to `Top`; `Top` absorbs every
    /// function and is below or above nothing.
    pub fn arithmetic(bound: u64) -> Self {
        let domain = Domain::bounded_nat(bound);
        let mut interp = Interpretation::new(domain.clone());

        let sat = move |n: Option<u64>| match n {
            Some(n) if n < bound => DomainValue::Nat(n),
            _ => DomainValue::Top,
        };
        interp.fns.insert(
            SUCC.into(),
            OrdFunction::new(1, move |args| sat(args[0].as_nat().and_then(|n| n.checked_add(1)))),
        );
        interp.fns.insert(
            PLUS.into(),
            OrdFunction::new(2, move |args| match (args[0].as_nat(), args[1].as_nat()) {
                (Some(a), Some(b)) => sat(a.checked_add(b)),
                _ => DomainValue::Top,
            }),
        );
        interp.fns.insert(
            TIMES.into(),
            OrdFunction::new(2, move |args| match (args[0].as_nat(), args[1].as_nat()) {
                (Some(a), Some(b)) => sat(a.checked_mul(b)),
                _ => DomainValue::Top,
            }),
        );
        let less = domain
            .tuples(2)
            .filter(|row| matches!((&row[0], &row[1]), (DomainValue::Nat(a), DomainValue::Nat(b)) if a < b))
            .map(Into::into);
        interp.preds.insert(
            LESS.into(),
            OrdRelation::from_rows(2, less).expect("rows have arity 2"),
        );
        interp
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn define_constant(&mut self, name: impl Into<String>, value: DomainValue) -> Result<(), LogicError> {
        if !self.domain.contains(&value) {
            return Err(LogicError::ValueOutsideCarrier(value.to_string()));
        }
        self.consts.insert(name.into(), value);
        Ok(())
    }

    pub fn define_function(&mut self, name: impl Into<String>, f: OrdFunction) {
        self.fns.insert(name.into(), f);
    }

    pub fn define_predicate(&mut self, name: impl Into<String>, rel: OrdRelation) -> Result<(), LogicError> {
        if let Some(bad) = rel
            .rows()
            .iter()
            .flat_map(|row| row.values())
            .find(|v| !self.domain.contains(v))
        {
            return Err(LogicError::ValueOutsideCarrier(bad.to_string()));
        }
        self.preds.insert(name.into(), rel);
        Ok(())
    }

    pub fn constant(&self, name: &str) -> Option<DomainValue> {
        if let Some(v) = self.consts.get(name) {
            return Some(v.clone());
        }
        if !name.is_empty() && name.bytes().all(|b| b.is_ascii_digit()) {
            // numerals too long for u64 are past any bound
            return self.domain.nat(name.parse().unwrap_or(u64::MAX));
        }
        None
    }

    pub fn function(&self, name: &str) -> Option<&OrdFunction> {
        self.fns.get(name)
    }

    pub fn predicate(&self, name: &str) -> Option<&OrdRelation> {
        self.preds.get(name)
    }

    pub fn interprets(&self, symbol: &str) -> bool {
        self.fns.contains_key(symbol) || self.preds.contains_key(symbol) || self.consts.contains_key(symbol)
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, &OrdRelation)> {
        self.preds.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn functions(&self) -> impl Iterator<Item = (&str, &OrdFunction)> {
        self.fns.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn constants(&self) -> impl Iterator<Item = (&str, &DomainValue)> {
        self.consts.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// A copy with the given predicate meanings added or replaced.
    pub fn with_predicates<'a, I>(&self, overlay: I) -> Interpretation
    where
        I: IntoIterator<Item = (&'a String, &'a OrdRelation)>,
    {
        let mut next = self.clone();
        for (name, rel) in overlay {
            next.preds.insert(name.clone(), rel.clone());
        }
        next
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lamech_core::OrdTuple;

    fn nat(n: u64) -> DomainValue {
        DomainValue::Nat(n)
    }

    #[test]
    fn arithmetic_saturates() {
        let i = Interpretation::arithmetic(4);
        let s = i.function(SUCC).unwrap();
        assert_eq!(s.apply(&[nat(2)]).unwrap(), nat(3));
        assert_eq!(s.apply(&[nat(3)]).unwrap(), DomainValue::Top);
        assert_eq!(s.apply(&[DomainValue::Top]).unwrap(), DomainValue::Top);
        let plus = i.function(PLUS).unwrap();
        assert_eq!(plus.apply(&[nat(1), nat(2)]).unwrap(), nat(3));
        assert_eq!(plus.apply(&[nat(2), nat(2)]).unwrap(), DomainValue::Top);
        let times = i.function(TIMES).unwrap();
        assert_eq!(times.apply(&[nat(0), DomainValue::Top]).unwrap(), DomainValue::Top);
    }

    #[test]
    fn comparisons_exclude_top() {
        let i = Interpretation::arithmetic(3);
        let less = i.predicate(LESS).unwrap();
        assert_eq!(less.len(), 3);
        assert!(!less.contains(&OrdTuple::new(vec![nat(0), DomainValue::Top])));
        let eq = i.predicate(EQUALITY).unwrap();
        assert!(eq.contains(&OrdTuple::new(vec![DomainValue::Top, DomainValue::Top])));
        assert_eq!(eq.len(), 4);
    }

    #[test]
    fn numerals_are_builtin_constants() {
        let i = Interpretation::arithmetic(3);
        assert_eq!(i.constant("2"), Some(nat(2)));
        assert_eq!(i.constant("3"), Some(DomainValue::Top));
        assert_eq!(i.constant("99999999999999999999999"), Some(DomainValue::Top));
        assert_eq!(i.constant("c"), None);
        let atoms = Interpretation::new(Domain::enumerated(["a"]).unwrap());
        assert_eq!(atoms.constant("0"), None);
    }

    #[test]
    fn predicates_must_stay_in_carrier() {
        let mut i = Interpretation::arithmetic(2);
        let bad = OrdRelation::from_rows(1, [OrdTuple::new(vec![nat(5)])]).unwrap();
        assert_eq!(
            i.define_predicate("p", bad),
            Err(LogicError::ValueOutsideCarrier("5".into()))
        );
    }
}
