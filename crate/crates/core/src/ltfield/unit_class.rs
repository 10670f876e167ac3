//! `Q(X)` modulo the units of the `X`-adic valuation ring: the leading-term
//! construction with the full unit group.
//!
//! A nonzero class is determined by its `X`-adic value alone, so classes of
//! equal value add to everything of at least that value. The valuation is
//! not Krasner: the residue hyperfield collapses to `K`.

use crate::backend::Hyperfield;
use crate::hyperset::HyperSet;
use crate::oag::{Cut, Value};
use crate::tropical::Tropical;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UnitClassField;

const INNER: Tropical = Tropical { rank: 1, strict: false };

impl UnitClassField {
    /// Classes with value in `[-bound, bound]`, and zero.
    pub fn enumerate_window(&self, bound: i64) -> Vec<Value> {
        std::iter::once(Value::Inf).chain((-bound..=bound).map(Value::scalar)).collect()
    }
}

impl Hyperfield for UnitClassField {
    type Elem = Value;

    fn name(&self) -> String {
        "Q(X)/O_v^x".into()
    }

    fn value_rank(&self) -> usize {
        1
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn zero(&self) -> Value {
        INNER.zero()
    }

    fn one(&self) -> Value {
        INNER.one()
    }

    fn mul(&self, x: &Value, y: &Value) -> Value {
        INNER.mul(x, y)
    }

    fn neg(&self, x: &Value) -> Value {
        INNER.neg(x)
    }

    fn inv(&self, x: &Value) -> Option<Value> {
        INNER.inv(x)
    }

    fn add(&self, x: &Value, y: &Value) -> HyperSet<Value> {
        INNER.add(x, y)
    }

    fn value(&self, x: &Value) -> Value {
        x.clone()
    }

    fn add_above(&self, cut: &Cut, z: &Value) -> Option<HyperSet<Value>> {
        INNER.add_above(cut, z)
    }
}
