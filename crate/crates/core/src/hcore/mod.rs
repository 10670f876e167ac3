//! Finite hyperfields as explicit tables: validation, classification,
//! morphisms, factor hyperfields and enumeration.

pub mod classify;
pub mod enumerate;
pub mod gf;
pub mod morphism;
pub mod quotient;
pub mod table;
pub mod validate;

pub use classify::{classify, is_field, Classification};
pub use enumerate::{enumerate_hyperfields, GroupDescriptor};
pub use gf::{build_finite_field, GaloisField};
pub use morphism::{are_isomorphic, find_isomorphism, Morphism};
pub use quotient::{quotient_hyperfield, subgroup_generators, SubgroupSpec};
pub use table::{build_k, build_s, build_w, FiniteHyperfield};
pub use validate::validate;
