//! Symbolic results of hypersums.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::oag::Cut;

/// The value of `x + y` in some hyperfield.
///
/// `AboveValue(ρ)` denotes `{ t | v(t) ∉ ρ }` for the backend's canonical
/// valuation `v`; it always contains zero since `v(0) = ∞`.
/// `Ball { center, radius }` denotes `{ t | v(t - center) ∉ radius }`. Balls
/// are only produced when a finite set would be too large to materialize,
/// and their radius always contains `v(center)`, so every member has the
/// same value as the center.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HyperSet<E> {
    Singleton { elem: E },
    Finite { elems: Vec<E> },
    AboveValue { cut: Cut },
    Ball { center: E, radius: Cut },
}

impl<E: Ord + Clone> HyperSet<E> {
    pub fn singleton(e: E) -> Self {
        HyperSet::Singleton { elem: e }
    }

    pub fn above(cut: Cut) -> Self {
        HyperSet::AboveValue { cut }
    }

    /// Sorts and deduplicates; a one-element list collapses to a singleton.
    ///
    /// Panics on an empty list, since hypersums are never empty.
    pub fn from_vec(mut elems: Vec<E>) -> Self {
        elems.sort();
        elems.dedup();
        assert!(!elems.is_empty(), "hypersums are non-empty");
        if elems.len() == 1 {
            HyperSet::Singleton { elem: elems.pop().unwrap() }
        } else {
            HyperSet::Finite { elems }
        }
    }

    /// Members of an explicitly listed set.
    pub fn explicit(&self) -> Option<&[E]> {
        match self {
            HyperSet::Singleton { elem } => Some(std::slice::from_ref(elem)),
            HyperSet::Finite { elems } => Some(elems),
            _ => None,
        }
    }

    pub fn as_singleton(&self) -> Option<&E> {
        match self {
            HyperSet::Singleton { elem } => Some(elem),
            _ => None,
        }
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, HyperSet::Singleton { .. })
    }

    pub fn map<F, T: Ord + Clone>(&self, f: F) -> Option<HyperSet<T>>
    where
        F: Fn(&E) -> T,
    {
        self.explicit().map(|xs| HyperSet::from_vec(xs.iter().map(f).collect()))
    }
}

impl<E: fmt::Display> fmt::Display for HyperSet<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperSet::Singleton { elem } => write!(f, "{{{elem}}}"),
            HyperSet::Finite { elems } => {
                write!(f, "{{")?;
                for (i, e) in elems.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "}}")
            }
            HyperSet::AboveValue { cut } => write!(f, "{{t | v(t) > {cut}}}"),
            HyperSet::Ball { center, radius } => write!(f, "{{t | v(t - {center}) > {radius}}}"),
        }
    }
}
