//! Valuations, valuation hyperrings and their comparison.

use std::fmt;
use std::sync::Arc;

use crate::backend::{all_above, is_subset, members, Hyperfield};
use crate::oag::{quotient_value, ConvexSubgroup, Cut, GroupElem, Value};
use crate::report::{AxiomVerdict, ValidationReport};
use crate::tropical::t_add;
use crate::valn::Domain;

pub type ValueFn<E> = Arc<dyn Fn(&E) -> Value + Send + Sync>;
pub type MemberFn<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;

enum Base<E> {
    /// The backend's own valuation.
    Canonical,
    /// `0 ↦ ∞`, everything else `↦ 0` in the rank-0 group.
    Trivial,
    Map(ValueFn<E>),
}

/// Post-composition with an order-preserving group map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Projection `Γ → Γ/Δ`.
    Coarsen(ConvexSubgroup),
    /// `γ ↦ kγ`, `k > 0`.
    Scale(i64),
}

/// A map `F → Z^rank ∪ {∞}`, not yet known to satisfy V1–V3.
pub struct Valuation<E> {
    pub label: String,
    rank: usize,
    base: Base<E>,
    transforms: Vec<Transform>,
}

impl<E> Clone for Base<E> {
    fn clone(&self) -> Self {
        match self {
            Base::Canonical => Base::Canonical,
            Base::Trivial => Base::Trivial,
            Base::Map(m) => Base::Map(Arc::clone(m)),
        }
    }
}

impl<E> Clone for Valuation<E> {
    fn clone(&self) -> Self {
        Valuation {
            label: self.label.clone(),
            rank: self.rank,
            base: self.base.clone(),
            transforms: self.transforms.clone(),
        }
    }
}

impl<E> fmt::Debug for Valuation<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Valuation").field("label", &self.label).field("rank", &self.rank).finish()
    }
}

impl<E> Valuation<E> {
    pub fn canonical<F: Hyperfield<Elem = E> + ?Sized>(f: &F) -> Self {
        Valuation { label: "v".into(), rank: f.value_rank(), base: Base::Canonical, transforms: vec![] }
    }

    pub fn trivial() -> Self {
        Valuation { label: "trivial".into(), rank: 0, base: Base::Trivial, transforms: vec![] }
    }

    pub fn from_fn(label: impl Into<String>, rank: usize, map: impl Fn(&E) -> Value + Send + Sync + 'static) -> Self {
        Valuation { label: label.into(), rank, base: Base::Map(Arc::new(map)), transforms: vec![] }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether values are those of the backend, so that symbolic sets can be
    /// compared against cuts directly.
    pub fn is_canonical(&self) -> bool {
        matches!(self.base, Base::Canonical) && self.transforms.is_empty()
    }

    /// `v_Δ = π_Δ ∘ v`.
    pub fn coarsen(mut self, delta: ConvexSubgroup) -> Self {
        assert_eq!(delta.rank, self.rank, "convex subgroup of the value group");
        self.rank = delta.quotient_rank();
        self.transforms.push(Transform::Coarsen(delta));
        self
    }

    /// `k·v` for `k > 0`.
    pub fn scale(mut self, k: i64) -> Self {
        assert!(k > 0, "scaling must preserve the order");
        self.transforms.push(Transform::Scale(k));
        self
    }

    pub fn value<F: Hyperfield<Elem = E> + ?Sized>(&self, f: &F, x: &E) -> Value {
        let mut v = match &self.base {
            Base::Canonical => f.value(x),
            Base::Trivial => {
                if f.is_zero(x) {
                    Value::Inf
                } else {
                    Value::Fin(GroupElem::zero(0))
                }
            }
            Base::Map(m) => m(x),
        };
        for t in &self.transforms {
            v = match t {
                Transform::Coarsen(d) => quotient_value(&v, d),
                Transform::Scale(k) => match v {
                    Value::Fin(g) => Value::Fin(g.scale(*k)),
                    Value::Inf => Value::Inf,
                },
            };
        }
        v
    }

    pub fn zero_value(&self) -> Value {
        Value::Fin(GroupElem::zero(self.rank))
    }

    /// Every member `s` of `set` has `v(s) ∉ cut`, symbolically when `v` is
    /// canonical and on the domain otherwise.
    pub fn set_above<F: Hyperfield<Elem = E> + ?Sized>(&self, f: &F, set: &crate::HyperSet<E>, cut: &Cut, dom: &[E]) -> bool
    where
        E: Clone + Ord,
    {
        if self.is_canonical() {
            return all_above(f, set, cut);
        }
        members(f, set, dom).iter().all(|s| !cut.contains_value(&self.value(f, s)))
    }
}

fn w<E: fmt::Display>(xs: &[&E]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// V1–V3 and, independently, HH1–HH5 for `v: F → T(vF)`. The verdict
/// `V⇔HH` records that the two characterizations agree.
pub fn is_valuation<F: Hyperfield + ?Sized>(f: &F, v: &Valuation<F::Elem>, dom: &Domain<F::Elem>) -> ValidationReport {
    let mut report = dom.report(format!("{} on {}", v.label, f.name()));
    let zero = f.zero();
    let one = f.one();
    let val = |x: &F::Elem| v.value(f, x);

    let mut v1 = AxiomVerdict::new("V1");
    for x in &dom.elems {
        v1.record(val(x).is_inf() == (*x == zero), || w(&[x]));
    }
    let mut v2 = AxiomVerdict::new("V2");
    let mut v3 = AxiomVerdict::new("V3");
    for x in &dom.elems {
        for y in &dom.elems {
            v2.record(val(&f.mul(x, y)) == val(x).add(&val(y)), || w(&[x, y]));
            let lo = std::cmp::min(val(x), val(y));
            let ok = match &lo {
                Value::Inf => true,
                Value::Fin(g) => v.set_above(f, &f.add(x, y), &Cut::below(g), &dom.elems),
            };
            v3.record(ok, || w(&[x, y]));
        }
    }

    let mut hh1 = AxiomVerdict::new("HH1");
    hh1.record(val(&zero).is_inf(), || w(&[&zero]));
    let mut hh2 = AxiomVerdict::new("HH2");
    let mut hh3 = AxiomVerdict::new("HH3");
    for x in &dom.elems {
        for y in &dom.elems {
            hh2.record(val(&f.mul(x, y)) == crate::tropical::t_mul(&val(x), &val(y)), || w(&[x, y]));
            let image: crate::HyperSet<Value> = t_add(&val(x), &val(y), false).into();
            let t = crate::tropical::Tropical::new(v.rank(), false);
            for z in members(f, &f.add(x, y), &dom.elems) {
                let ok = crate::backend::contains(&t, &image, &val(&z));
                hh3.record(ok, || w(&[x, y, &z]));
            }
        }
    }
    let mut hh4 = AxiomVerdict::new("HH4");
    hh4.record(val(&one) == v.zero_value(), || w(&[&one]));
    let mut hh5 = AxiomVerdict::new("HH5");
    for x in dom.elems.iter().filter(|x| **x != zero) {
        let ok = match (f.inv(x), val(x)) {
            (Some(xi), Value::Fin(g)) => val(&xi) == Value::Fin(g.neg()),
            _ => false,
        };
        hh5.record(ok, || w(&[x]));
    }
    let v_ok = v1.holds && v2.holds && v3.holds;
    let hh_ok = [&hh1, &hh2, &hh3, &hh4, &hh5].iter().all(|h| h.holds);
    let mut agree = AxiomVerdict::new("V<=>HH");
    agree.record(v_ok == hh_ok, || vec![format!("V: {v_ok}"), format!("HH: {hh_ok}")]);
    for verdict in [v1, v2, v3, hh1, hh2, hh3, hh4, hh5, agree] {
        report.push(verdict);
    }
    report
}

/// A subset of `F` given by a membership test.
#[derive(Clone)]
pub struct ValuationRing<E> {
    pub label: String,
    kind: RingKind<E>,
}

#[derive(Clone)]
enum RingKind<E> {
    /// `{x | vx ≥ 0}`.
    Valuation(Valuation<E>),
    /// `{x | vx > 0}`.
    MaximalIdeal(Valuation<E>),
    /// `{x | vx = 0}`.
    Units(Valuation<E>),
    /// `{x | x - x ⊆ 1 - 1}`.
    Induced,
    Predicate(MemberFn<E>),
}

impl<E> fmt::Debug for ValuationRing<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ValuationRing").field("label", &self.label).finish()
    }
}

impl<E: Clone + Ord> ValuationRing<E> {
    pub fn from_predicate(label: impl Into<String>, p: impl Fn(&E) -> bool + Send + Sync + 'static) -> Self {
        ValuationRing { label: label.into(), kind: RingKind::Predicate(Arc::new(p)) }
    }

    pub fn contains<F: Hyperfield<Elem = E> + ?Sized>(&self, f: &F, x: &E) -> bool {
        match &self.kind {
            RingKind::Valuation(v) => v.value(f, x) >= v.zero_value(),
            RingKind::MaximalIdeal(v) => v.value(f, x) > v.zero_value(),
            RingKind::Units(v) => v.value(f, x) == v.zero_value(),
            RingKind::Induced => is_subset(f, &f.sub(x, x), &f.sub(&f.one(), &f.one())),
            RingKind::Predicate(p) => p(x),
        }
    }
}

/// `O_v = {x | vx ≥ 0}`.
pub fn valuation_ring<E>(v: &Valuation<E>) -> ValuationRing<E> {
    ValuationRing { label: format!("O_{}", v.label), kind: RingKind::Valuation(v.clone()) }
}

/// `M_v = {x | vx > 0}`.
pub fn maximal_ideal<E>(v: &Valuation<E>) -> ValuationRing<E> {
    ValuationRing { label: format!("M_{}", v.label), kind: RingKind::MaximalIdeal(v.clone()) }
}

/// `O_v^× = {x | vx = 0}`.
pub fn units<E>(v: &Valuation<E>) -> ValuationRing<E> {
    ValuationRing { label: format!("O_{}^x", v.label), kind: RingKind::Units(v.clone()) }
}

/// `O = {x | x - x ⊆ 1 - 1}`.
pub fn induced_ring<E>() -> ValuationRing<E> {
    ValuationRing { label: "O_induced".into(), kind: RingKind::Induced }
}

/// `O_v = v⁻¹(v(1) ⊞ v(1))` on the domain.
pub fn descr_ov_check<F: Hyperfield + ?Sized>(f: &F, v: &Valuation<F::Elem>, dom: &Domain<F::Elem>) -> AxiomVerdict {
    let t = crate::tropical::Tropical::new(v.rank(), false);
    let one = v.value(f, &f.one());
    let unit_sum: crate::HyperSet<Value> = t_add(&one, &one, false).into();
    let o = valuation_ring(v);
    let mut verdict = AxiomVerdict::new("descrOv");
    for x in &dom.elems {
        let ok = o.contains(f, x) == crate::backend::contains(&t, &unit_sum, &v.value(f, x));
        verdict.record(ok, || w(&[x]));
    }
    verdict
}

/// VR1 (`0, 1 ∈ O`, `O·O ⊆ O`), VR2 (`x ∉ O ⟹ x⁻¹ ∈ O`) and VR3
/// (`x - y ⊆ O` for `x, y ∈ O`) on the domain.
pub fn is_valuation_hyperring<F: Hyperfield + ?Sized>(f: &F, o: &ValuationRing<F::Elem>, dom: &Domain<F::Elem>) -> ValidationReport {
    let mut report = dom.report(format!("{} in {}", o.label, f.name()));
    let inside: Vec<&F::Elem> = dom.elems.iter().filter(|x| o.contains(f, x)).collect();
    let mut vr1 = AxiomVerdict::new("VR1");
    vr1.record(o.contains(f, &f.zero()), || vec![f.zero().to_string()]);
    vr1.record(o.contains(f, &f.one()), || vec![f.one().to_string()]);
    for x in &inside {
        for y in &inside {
            vr1.record(o.contains(f, &f.mul(x, y)), || w(&[*x, *y]));
        }
    }
    let mut vr2 = AxiomVerdict::new("VR2");
    for x in dom.elems.iter().filter(|x| !f.is_zero(x) && !o.contains(f, x)) {
        let ok = f.inv(x).is_some_and(|xi| o.contains(f, &xi));
        vr2.record(ok, || w(&[x]));
    }
    let mut vr3 = AxiomVerdict::new("VR3");
    for x in &inside {
        for y in &inside {
            let ok = members(f, &f.sub(x, y), &dom.elems).iter().all(|z| o.contains(f, z));
            vr3.record(ok, || w(&[*x, *y]));
        }
    }
    for v in [vr1, vr2, vr3] {
        report.push(v);
    }
    report
}

/// The first domain element in exactly one of the two rings.
pub fn ring_difference<F: Hyperfield + ?Sized>(
    f: &F,
    a: &ValuationRing<F::Elem>,
    b: &ValuationRing<F::Elem>,
    dom: &Domain<F::Elem>,
) -> Option<F::Elem> {
    dom.elems.iter().find(|x| a.contains(f, x) != b.contains(f, x)).cloned()
}

/// Equivalence of valuations is equality of their rings; compared on the domain.
pub fn equivalent<F: Hyperfield + ?Sized>(
    f: &F,
    v1: &Valuation<F::Elem>,
    v2: &Valuation<F::Elem>,
    dom: &Domain<F::Elem>,
) -> bool {
    ring_difference(f, &valuation_ring(v1), &valuation_ring(v2), dom).is_none()
}

/// `A ⊆ B` on the domain, with the first element of `A \ B` otherwise.
pub fn ring_inclusion<F: Hyperfield + ?Sized>(
    f: &F,
    a: &ValuationRing<F::Elem>,
    b: &ValuationRing<F::Elem>,
    dom: &Domain<F::Elem>,
) -> std::result::Result<(), F::Elem> {
    match dom.elems.iter().find(|x| a.contains(f, x) && !b.contains(f, x)) {
        Some(x) => Err(x.clone()),
        None => Ok(()),
    }
}
