use std::collections::BTreeSet;
use std::fmt;

use crate::TupleError;

/// An element of a finite domain of discourse.
///
/// `Top` is the sink of bounded-natural domains: arithmetic that leaves
/// `{0..B-1}` lands there and stays there. It equals only itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DomainValue {
    Nat(u64),
    Top,
    Atom(String),
}

impl DomainValue {
    pub fn as_nat(&self) -> Option<u64> {
        match self {
            DomainValue::Nat(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, DomainValue::Top)
    }
}

impl fmt::Display for DomainValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainValue::Nat(n) => write!(f, "{n}"),
            DomainValue::Top => f.write_str("top"),
            DomainValue::Atom(a) => f.write_str(a),
        }
    }
}

impl From<u64> for DomainValue {
    fn from(n: u64) -> Self {
        DomainValue::Nat(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainKind {
    /// `{0..bound-1}` plus the sink.
    BoundedNat { bound: u64 },
    Enumerated,
}

/// A finite, non-empty carrier together with how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    kind: DomainKind,
    carrier: Vec<DomainValue>,
}

impl Domain {
    /// The carrier `{0, .., bound-1} ∪ {Top}`.
    pub fn bounded_nat(bound: u64) -> Self {
        let mut carrier: Vec<DomainValue> = (0..bound).map(DomainValue::Nat).collect();
        carrier.push(DomainValue::Top);
        Domain {
            kind: DomainKind::BoundedNat { bound },
            carrier,
        }
    }

    pub fn enumerated<I, S>(atoms: I) -> Result<Self, TupleError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut seen = BTreeSet::new();
        let mut carrier = Vec::new();
        for atom in atoms {
            let atom = atom.into();
            if atom.is_empty() || !seen.insert(atom.clone()) {
                return Err(TupleError::InvalidAtom(atom));
            }
            carrier.push(DomainValue::Atom(atom));
        }
        if carrier.is_empty() {
            return Err(TupleError::EmptyDomain);
        }
        Ok(Domain {
            kind: DomainKind::Enumerated,
            carrier,
        })
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn carrier(&self) -> &[DomainValue] {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn bound(&self) -> Option<u64> {
        match self.kind {
            DomainKind::BoundedNat { bound } => Some(bound),
            DomainKind::Enumerated => None,
        }
    }

    pub fn contains(&self, value: &DomainValue) -> bool {
        match (&self.kind, value) {
            (DomainKind::BoundedNat { bound }, DomainValue::Nat(n)) => n < bound,
            (DomainKind::BoundedNat { .. }, DomainValue::Top) => true,
            (DomainKind::Enumerated, DomainValue::Atom(_)) => self.carrier.contains(value),
            _ => false,
        }
    }

    /// Embeds a natural number, saturating to `Top` outside the bound.
    /// Returns `None` for enumerated domains.
    pub fn nat(&self, n: u64) -> Option<DomainValue> {
        self.bound()
            .map(|bound| if n < bound { DomainValue::Nat(n) } else { DomainValue::Top })
    }

    /// Every tuple in `carrier^arity`, in lexicographic carrier order.
    pub fn tuples(&self, arity: usize) -> impl Iterator<Item = Vec<DomainValue>> + '_ {
        let size = self.carrier.len();
        let total = size.checked_pow(arity as u32).unwrap_or(usize::MAX);
        (0..total).map(move |mut code| {
            let mut row = vec![DomainValue::Top; arity];
            for slot in row.iter_mut().rev() {
                *slot = self.carrier[code % size].clone();
                code /= size;
            }
            row
        })
    }
}
