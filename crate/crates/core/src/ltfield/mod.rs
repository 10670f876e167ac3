//! Leading-term hyperfields of valued fields.

pub mod composite;
pub mod lt;
pub mod oracle;
pub mod unit_class;

pub use composite::{CompElem, Composite};
pub use lt::{LtContext, LtElem};
pub use unit_class::UnitClassField;
