//! Valuation theory over any [`Hyperfield`](crate::backend::Hyperfield)
//! backend.
//!
//! Every quantified check runs over a [`Domain`]: all elements of a finite
//! carrier (reports say "proof by exhaustion"), or a window of an infinite
//! one ("bounded verification", with the window recorded).

pub mod coarsen;
pub mod finite;
pub mod krasner;
pub mod residue;
pub mod valuation;

pub use coarsen::{check_coarsening_theorem, coarsening, CoarseningVerdict};
pub use krasner::{check_krasner, check_superiorly_canonical, Ultrametric};
pub use residue::{residue_embedding_check, residue_hyperfield};
pub use valuation::{
    equivalent, induced_ring, is_valuation, is_valuation_hyperring, maximal_ideal, units, valuation_ring, Valuation,
    ValuationRing,
};

use crate::hcore::table::FiniteHyperfield;
use crate::report::{ValidationReport, Window};

/// The elements a check quantifies over.
#[derive(Clone, Debug)]
pub struct Domain<E> {
    pub elems: Vec<E>,
    /// `None` when `elems` is the whole carrier.
    pub window: Option<Window>,
}

impl<E> Domain<E> {
    pub fn exhaustive(elems: Vec<E>) -> Self {
        Domain { elems, window: None }
    }

    pub fn bounded(elems: Vec<E>, bound: i64, coeff_bound: Option<i64>) -> Self {
        let window = Window { bound, coeff_bound, elements: elems.len() };
        Domain { elems, window: Some(window) }
    }

    pub fn report(&self, subject: impl Into<String>) -> ValidationReport {
        match &self.window {
            None => ValidationReport::exhaustive(subject),
            Some(w) => ValidationReport::bounded(subject, w.clone()),
        }
    }
}

impl Domain<usize> {
    pub fn of_table(f: &FiniteHyperfield) -> Self {
        Domain::exhaustive((0..f.size()).collect())
    }
}
