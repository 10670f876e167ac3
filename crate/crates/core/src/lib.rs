//! Krasner hyperfields and their valuation theory.
//!
//! Finite hyperfields are explicit tables ([`hcore`]); the infinite examples
//! (generalized tropical hyperfields, leading-term quotients of valued fields)
//! are symbolic backends whose hypersums are [`HyperSet`]s. Valuation checks
//! in [`valn`] run over any backend implementing [`Hyperfield`], exhaustively
//! on finite carriers and on bounded windows otherwise.

pub mod axioms;
pub mod backend;
pub mod error;
pub mod hcore;
pub mod hyperset;
pub mod ltfield;
pub mod oag;
pub mod report;
pub mod scenarios;
pub mod tropical;
pub mod valn;

pub use backend::Hyperfield;
pub use error::{Error, Result};
pub use hyperset::HyperSet;
pub use oag::{ConvexSubgroup, Cut, GroupElem, Value};
pub use report::ValidationReport;
