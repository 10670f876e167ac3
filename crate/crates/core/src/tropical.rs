//! Generalized tropical hyperfields `T(Γ)` and `T'(Γ)` over `Γ = Z^n`
//! (lexicographic).
//!
//! Index conventions: the carrier is `Γ ∪ {∞}`, the additive zero is `∞`
//! and the multiplicative unit is `0_Γ`; multiplication is group addition.

use serde::{Deserialize, Serialize};

use crate::axioms;
use crate::backend::{contains, is_subset, Hyperfield};
use crate::hcore::table::FiniteHyperfield;
use crate::hyperset::HyperSet;
use crate::oag::{box_window, quotient_value, ConvexSubgroup, Cut, GroupElem, Value};
use crate::report::{AxiomVerdict, ValidationReport, Window};

/// `T(Z^rank)`, or `T'(Z^rank)` when `strict`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tropical {
    pub rank: usize,
    pub strict: bool,
}

/// `{z | z ≥ bound} ∪ {∞}` when inclusive, `{z | z > bound} ∪ {∞}` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ray {
    pub bound: GroupElem,
    pub inclusive: bool,
}

impl Ray {
    pub fn contains(&self, z: &Value) -> bool {
        match z {
            Value::Inf => true,
            Value::Fin(g) => g > &self.bound || (self.inclusive && g == &self.bound),
        }
    }

    /// The cut below the ray.
    pub fn cut(&self) -> Cut {
        if self.inclusive {
            Cut::below(&self.bound)
        } else {
            Cut::at_most(&self.bound)
        }
    }
}

/// A tropical hypersum: a single element or a ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TropSum {
    Singleton(Value),
    Ray(Ray),
}

impl From<TropSum> for HyperSet<Value> {
    fn from(s: TropSum) -> Self {
        match s {
            TropSum::Singleton(v) => HyperSet::singleton(v),
            TropSum::Ray(r) => HyperSet::above(r.cut()),
        }
    }
}

/// `x ⊞ y`: `{min(x, y)}` if `x ≠ y`, `[x, ∞]` (or `(x, ∞]` when strict) if
/// `x = y ≠ ∞`, and `{∞}` for `∞ ⊞ ∞`.
pub fn t_add(x: &Value, y: &Value, strict: bool) -> TropSum {
    match (x, y) {
        (Value::Fin(g), Value::Fin(h)) if g == h => TropSum::Ray(Ray { bound: g.clone(), inclusive: !strict }),
        _ => TropSum::Singleton(x.min(y).clone()),
    }
}

pub fn t_mul(x: &Value, y: &Value) -> Value {
    x.add(y)
}

impl Tropical {
    pub fn new(rank: usize, strict: bool) -> Self {
        Tropical { rank, strict }
    }
}

impl Hyperfield for Tropical {
    type Elem = Value;

    fn name(&self) -> String {
        let g = if self.rank == 1 { "Z".to_string() } else { format!("Z^{}", self.rank) };
        if self.strict {
            format!("T'({g})")
        } else {
            format!("T({g})")
        }
    }

    fn value_rank(&self) -> usize {
        self.rank
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn zero(&self) -> Value {
        Value::Inf
    }

    fn one(&self) -> Value {
        Value::Fin(GroupElem::zero(self.rank))
    }

    fn mul(&self, x: &Value, y: &Value) -> Value {
        t_mul(x, y)
    }

    fn neg(&self, x: &Value) -> Value {
        x.clone()
    }

    fn inv(&self, x: &Value) -> Option<Value> {
        x.finite().map(|g| Value::Fin(g.neg()))
    }

    fn add(&self, x: &Value, y: &Value) -> HyperSet<Value> {
        t_add(x, y, self.strict).into()
    }

    /// The identity valuation `T(Γ) → Γ ∪ {∞}`.
    fn value(&self, x: &Value) -> Value {
        x.clone()
    }

    fn add_above(&self, cut: &Cut, z: &Value) -> Option<HyperSet<Value>> {
        // Every element of an upper set lies above z or is absorbed by it.
        if cut.contains_value(z) {
            Some(HyperSet::singleton(z.clone()))
        } else {
            Some(HyperSet::above(cut.clone()))
        }
    }
}

/// `Γ`-box of radius `bound` plus `∞`, ordered from the unit outward:
/// `∞` first, then by sup-norm, then lexicographically.
pub fn tropical_window(rank: usize, bound: i64) -> Vec<Value> {
    let mut gs = box_window(rank, bound);
    gs.sort_by_key(|g| (g.coords().iter().map(|c| c.abs()).max().unwrap_or(0), g.clone()));
    std::iter::once(Value::Inf).chain(gs.into_iter().map(Value::Fin)).collect()
}

fn window_info(window: &[Value], bound: i64) -> Window {
    Window { bound, coeff_bound: None, elements: window.len() }
}

/// CH1–CH4, HR2 and HR3 for `T(Z^rank)` (or `T'`) on the box of radius `bound`.
pub fn tropical_axiom_suite(rank: usize, strict: bool, bound: i64) -> ValidationReport {
    let t = Tropical::new(rank, strict);
    let window = tropical_window(rank, bound);
    let mut report = ValidationReport::bounded(t.name(), window_info(&window, bound));
    axioms::window_axioms(&t, &window, &mut report);
    report
}

/// Classification predicates of a tropical hyperfield on a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalClassification {
    /// `∞ ∈ 0 ⊞ 0`.
    pub char2: bool,
    /// `0 ∈ 0 ⊞ 0`.
    pub cchar1: bool,
    pub stringent: AxiomVerdict,
    pub sch1: AxiomVerdict,
}

pub fn tropical_classification(rank: usize, strict: bool, bound: i64) -> TropicalClassification {
    let t = Tropical::new(rank, strict);
    let window = tropical_window(rank, bound);
    let mut sch = ValidationReport::bounded(t.name(), window_info(&window, bound));
    axioms::superiorly_canonical(&t, &window, &mut sch);
    TropicalClassification {
        char2: axioms::char2(&t),
        cchar1: axioms::cchar1(&t),
        stringent: axioms::stringent(&t, &window),
        sch1: sch.get("SCH1").cloned().expect("SCH1 checked"),
    }
}

/// `π_Δ: T(Γ) → T(Γ/Δ)`.
pub fn pi_delta(x: &Value, delta: &ConvexSubgroup) -> Value {
    quotient_value(x, delta)
}

/// Image of the ray `{t | t ∉ cut}` under `π_Δ`, as a ray of `Γ/Δ`.
pub fn project_ray(cut: &Cut, delta: &ConvexSubgroup) -> Cut {
    let k = delta.quotient_rank();
    if cut.is_total() || cut.is_empty() || cut.prefix_len() <= k {
        return cut.clone();
    }
    // Some t above the cut projects to u exactly when u ≥ the truncated bound.
    Cut::below(&GroupElem::new(cut.bound()[..k].to_vec()))
}

fn project_set(s: &HyperSet<Value>, delta: &ConvexSubgroup) -> HyperSet<Value> {
    match s {
        HyperSet::AboveValue { cut } => HyperSet::above(project_ray(cut, delta)),
        other => other.map(|x| pi_delta(x, delta)).expect("tropical sums are singletons or rays"),
    }
}

/// HH1–HH5 for `π_Δ: T(Z^rank) → T(Z^rank / Δ)` on the box of radius `bound`,
/// plus surjectivity onto the image window.
pub fn pi_delta_report(rank: usize, delta: &ConvexSubgroup, bound: i64) -> ValidationReport {
    let src = Tropical::new(rank, false);
    let dst = Tropical::new(delta.quotient_rank(), false);
    let window = tropical_window(rank, bound);
    let subject = format!("pi_delta: {} -> {}", src.name(), dst.name());
    let mut report = ValidationReport::bounded(subject, window_info(&window, bound));
    let p = |x: &Value| pi_delta(x, delta);
    let w = |xs: &[&Value]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();

    let mut hh1 = AxiomVerdict::new("HH1");
    hh1.record(p(&src.zero()) == dst.zero(), || w(&[&src.zero()]));
    let mut hh2 = AxiomVerdict::new("HH2");
    let mut hh3 = AxiomVerdict::new("HH3");
    for x in &window {
        for y in &window {
            hh2.record(p(&src.mul(x, y)) == dst.mul(&p(x), &p(y)), || w(&[x, y]));
            let image = project_set(&src.add(x, y), delta);
            hh3.record(is_subset(&dst, &image, &dst.add(&p(x), &p(y))), || w(&[x, y]));
        }
    }
    let mut hh4 = AxiomVerdict::new("HH4");
    hh4.record(p(&src.one()) == dst.one(), || w(&[&src.one()]));
    let mut hh5 = AxiomVerdict::new("HH5");
    for x in window.iter().filter(|x| !x.is_inf()) {
        let ok = src.inv(x).map(|xi| p(&xi)) == dst.inv(&p(x));
        hh5.record(ok, || w(&[x]));
    }
    let mut surj = AxiomVerdict::new("surjective");
    for u in tropical_window(dst.rank, bound) {
        surj.record(window.iter().any(|x| p(x) == u), || vec![u.to_string()]);
    }
    for v in [hh1, hh2, hh3, hh4, hh5, surj] {
        report.push(v);
    }
    report
}

/// `O_Δ = {γ | γ ∈ Δ or γ > Δ} ∪ {∞}`.
pub fn valuation_ring_of_pi_delta(x: &Value, delta: &ConvexSubgroup) -> bool {
    match x {
        Value::Inf => true,
        Value::Fin(g) => delta.contains(g) || delta.is_above(g),
    }
}

/// `x ∈ O_Δ` computed as the preimage of `0 ⊞ 0` under `π_Δ`.
pub fn valuation_ring_by_preimage(x: &Value, delta: &ConvexSubgroup) -> bool {
    let dst = Tropical::new(delta.quotient_rank(), false);
    contains(&dst, &dst.add(&dst.one(), &dst.one()), &pi_delta(x, delta))
}

/// The induced table on `{∞, 0_Γ}`: sums are intersected with the subset.
pub fn unit_subhyperfield(t: &Tropical) -> FiniteHyperfield {
    let elems = [t.zero(), t.one()];
    let add = elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| (0..2).filter(|&k| contains(t, &t.add(x, y), &elems[k])).collect())
                .collect()
        })
        .collect();
    let mul = vec![vec![0, 0], vec![0, 1]];
    FiniteHyperfield::from_tables(vec!["∞".into(), "0".into()], mul, add)
        .expect("two-element table is well formed")
        .with_meta("name", format!("{{∞,0}} ⊆ {}", t.name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Value {
        Value::Fin(GroupElem::new(c.to_vec()))
    }

    #[test]
    fn sums() {
        assert_eq!(t_add(&v(&[2]), &v(&[5]), false), TropSum::Singleton(v(&[2])));
        assert_eq!(t_add(&v(&[3]), &v(&[3]), false), TropSum::Ray(Ray { bound: GroupElem::scalar(3), inclusive: true }));
        assert_eq!(t_add(&v(&[3]), &v(&[3]), true), TropSum::Ray(Ray { bound: GroupElem::scalar(3), inclusive: false }));
        assert_eq!(t_add(&Value::Inf, &v(&[3]), true), TropSum::Singleton(v(&[3])));
        assert_eq!(t_add(&Value::Inf, &Value::Inf, false), TropSum::Singleton(Value::Inf));
    }

    #[test]
    fn products() {
        assert_eq!(t_mul(&v(&[2]), &v(&[5])), v(&[7]));
        assert_eq!(t_mul(&v(&[2]), &Value::Inf), Value::Inf);
        assert_eq!(t_mul(&v(&[1, 0]), &v(&[0, 3])), v(&[1, 3]));
    }

    #[test]
    fn ray_semantics_match_hyperset() {
        let t = Tropical::new(1, false);
        for strict in [false, true] {
            let r = Ray { bound: GroupElem::scalar(3), inclusive: !strict };
            let s: HyperSet<Value> = TropSum::Ray(r.clone()).into();
            for x in tropical_window(1, 6) {
                assert_eq!(r.contains(&x), contains(&t, &s, &x), "{x}");
            }
        }
    }

    #[test]
    fn serde_forms() {
        let r = Ray { bound: GroupElem::new(vec![1, 2]), inclusive: true };
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"bound":[1,2],"inclusive":true}"#);
        assert_eq!(serde_json::to_string(&Value::Inf).unwrap(), "null");
    }

    #[test]
    fn projection() {
        let delta = ConvexSubgroup::new(2, 1).unwrap();
        assert_eq!(pi_delta(&v(&[1, -4]), &delta), v(&[1]));
        assert_eq!(pi_delta(&Value::Inf, &delta), Value::Inf);
        assert!(valuation_ring_of_pi_delta(&v(&[0, -5]), &delta));
        assert!(!valuation_ring_of_pi_delta(&v(&[-1, 100]), &delta));
        assert!(valuation_ring_of_pi_delta(&v(&[2, 0]), &delta));
    }

    #[test]
    fn unit_subhyperfield_is_k_only_for_t() {
        use crate::hcore::morphism::are_isomorphic;
        use crate::hcore::table::build_k;
        let t = Tropical::new(1, false);
        assert!(are_isomorphic(&unit_subhyperfield(&t), &build_k()));
        // 0 ⊞ 0 is not inside {∞, 0}.
        assert!(!is_subset(&t, &t.add(&t.one(), &t.one()), &HyperSet::from_vec(vec![t.zero(), t.one()])));
        assert!(!are_isomorphic(&unit_subhyperfield(&Tropical::new(1, true)), &build_k()));
    }
}
