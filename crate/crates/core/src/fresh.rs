//! Deterministic fresh-name generation.

use std::collections::BTreeSet;

/// Hands out names that are not in its avoid set.
///
/// A fresh name is the base name with trailing digits stripped, followed by
/// the smallest positive counter that yields an unused name: `y` gives `y1`,
/// then `y2`; `y1` also gives `y2` once `y1` is taken. Every returned name is
/// added to the avoid set.
#[derive(Debug, Clone, Default)]
pub struct FreshNameSupply {
    used: BTreeSet<String>,
    issued: usize,
}

impl FreshNameSupply {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn avoiding<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut supply = Self::new();
        supply.reserve_all(names);
        supply
    }

    pub fn reserve(&mut self, name: impl Into<String>) {
        self.used.insert(name.into());
    }

    pub fn reserve_all<I, S>(&mut self, names: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.used.extend(names.into_iter().map(Into::into));
    }

    pub fn is_reserved(&self, name: &str) -> bool {
        self.used.contains(name)
    }

    /// Number of names handed out so far.
    pub fn issued(&self) -> usize {
        self.issued
    }

    pub fn fresh(&mut self, base: &str) -> String {
        let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
        let stem = if stem.is_empty() { "v" } else { stem };
        let name = (1u64..)
            .map(|n| format!("{stem}{n}"))
            .find(|candidate| !self.used.contains(candidate))
            .expect("unbounded counter");
        self.used.insert(name.clone());
        self.issued += 1;
        name
    }
}
