//! Additive subcategories as bit sets over the indecomposable list of an algebra.

use std::fmt;

use crate::algebra::{Algebra, ModuleSum, Uniserial};
use crate::error::{Error, Result};

/// Largest number of indecomposables an [`IndecSet`] can index.
pub const MAX_INDECOMPOSABLES: usize = 128;

/// A set of indecomposables, bit `k` standing for `algebra.indecomposable(k)`.
/// The empty set is `add{0}`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndecSet(pub u128);

impl IndecSet {
    pub const EMPTY: IndecSet = IndecSet(0);

    pub fn full(count: usize) -> Self {
        if count >= 128 {
            IndecSet(u128::MAX)
        } else {
            IndecSet((1u128 << count) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        IndecSet(1u128 << index)
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u128 << index;
    }

    pub fn union(self, other: IndecSet) -> IndecSet {
        IndecSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndecSet) -> IndecSet {
        IndecSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndecSet) -> IndecSet {
        IndecSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: IndecSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(k)
        })
    }

    /// Fails when the algebra has too many indecomposables to index.
    pub fn check_capacity(alg: &Algebra) -> Result<()> {
        let count = alg.indecomposable_count();
        if count > MAX_INDECOMPOSABLES {
            Err(Error::Refused(format!(
                "{count} indecomposables exceed the set capacity of {MAX_INDECOMPOSABLES}"
            )))
        } else {
            Ok(())
        }
    }

    pub fn all(alg: &Algebra) -> Result<Self> {
        Self::check_capacity(alg)?;
        Ok(Self::full(alg.indecomposable_count()))
    }

    pub fn from_uniserials<'a>(
        alg: &Algebra,
        items: impl IntoIterator<Item = &'a Uniserial>,
    ) -> Result<Self> {
        Self::check_capacity(alg)?;
        let mut set = IndecSet::EMPTY;
        for u in items {
            set.insert(alg.index_of(u).ok_or(Error::NotAModule(*u))?);
        }
        Ok(set)
    }

    /// The summand set of a module; multiplicities are forgotten because `add M` ignores them.
    pub fn from_module(alg: &Algebra, m: &ModuleSum) -> Result<Self> {
        Self::from_uniserials(alg, m.summands())
    }

    pub fn uniserials(self, alg: &Algebra) -> Vec<Uniserial> {
        self.iter().map(|k| alg.indecomposable(k)).collect()
    }

    /// The multiplicity-free module with these summands.
    pub fn to_module(self, alg: &Algebra) -> ModuleSum {
        ModuleSum::new(self.uniserials(alg))
    }
}

impl fmt::Display for IndecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, k) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}
