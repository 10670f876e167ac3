//! A common interface over every hyperfield representation in the crate,
//! together with the set algebra on [`HyperSet`] results that the generic
//! checkers need.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::hyperset::HyperSet;
use crate::oag::{Cut, Value};

/// A hyperfield with a distinguished ("canonical") valuation into a
/// lexicographic `Z^n`.
///
/// The canonical valuation gives meaning to [`HyperSet::AboveValue`] and
/// [`HyperSet::Ball`] results. Finite tables use the trivial valuation
/// (rank 0), so they never produce symbolic sets.
pub trait Hyperfield {
    type Elem: Clone + Eq + Ord + Hash + Debug + Display;

    fn name(&self) -> String;

    /// Rank of the canonical value group.
    fn value_rank(&self) -> usize;

    /// True when the carrier is finite and quantifiers can be exhausted.
    fn is_finite(&self) -> bool;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> HyperSet<Self::Elem>;

    /// The canonical valuation.
    fn value(&self, x: &Self::Elem) -> Value;

    /// `AboveValue(cut) + z`, when representable.
    fn add_above(&self, _cut: &Cut, _z: &Self::Elem) -> Option<HyperSet<Self::Elem>> {
        None
    }

    /// Membership in `Ball { center, radius }`.
    fn ball_contains(&self, center: &Self::Elem, radius: &Cut, t: &Self::Elem) -> bool {
        let diff = self.add(t, &self.neg(center));
        all_above(self, &diff, radius)
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> HyperSet<Self::Elem> {
        self.add(x, &self.neg(y))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }
}

pub fn contains<F: Hyperfield + ?Sized>(f: &F, set: &HyperSet<F::Elem>, z: &F::Elem) -> bool {
    match set {
        HyperSet::Singleton { elem } => elem == z,
        HyperSet::Finite { elems } => elems.binary_search(z).is_ok(),
        HyperSet::AboveValue { cut } => !cut.contains_value(&f.value(z)),
        HyperSet::Ball { center, radius } => f.ball_contains(center, radius, z),
    }
}

/// Whether every member `s` of `set` satisfies `v(s) ∉ cut` for the
/// canonical valuation.
pub fn all_above<F: Hyperfield + ?Sized>(f: &F, set: &HyperSet<F::Elem>, cut: &Cut) -> bool {
    match set {
        HyperSet::Singleton { elem } => !cut.contains_value(&f.value(elem)),
        HyperSet::Finite { elems } => elems.iter().all(|e| !cut.contains_value(&f.value(e))),
        HyperSet::AboveValue { cut: c } => cut.is_subset(c),
        HyperSet::Ball { center, .. } => !cut.contains_value(&f.value(center)),
    }
}

/// Set inclusion. On infinite carriers a value ray is never inside an
/// explicit finite set.
pub fn is_subset<F: Hyperfield + ?Sized>(f: &F, a: &HyperSet<F::Elem>, b: &HyperSet<F::Elem>) -> bool {
    if let Some(xs) = a.explicit() {
        return xs.iter().all(|x| contains(f, b, x));
    }
    match (a, b) {
        (HyperSet::AboveValue { cut: c1 }, HyperSet::AboveValue { cut: c2 }) => c2.is_subset(c1),
        (HyperSet::Ball { center, .. }, HyperSet::AboveValue { cut }) => !cut.contains_value(&f.value(center)),
        (HyperSet::Ball { center: c1, radius: r1 }, HyperSet::Ball { radius: r2, .. }) => {
            contains(f, b, c1) && r2.is_subset(r1)
        }
        _ => false,
    }
}

pub fn set_eq<F: Hyperfield + ?Sized>(f: &F, a: &HyperSet<F::Elem>, b: &HyperSet<F::Elem>) -> bool {
    match (a.explicit(), b.explicit()) {
        (Some(xs), Some(ys)) => xs == ys,
        _ => is_subset(f, a, b) && is_subset(f, b, a),
    }
}

pub fn intersects<F: Hyperfield + ?Sized>(f: &F, a: &HyperSet<F::Elem>, b: &HyperSet<F::Elem>) -> bool {
    if let Some(xs) = a.explicit() {
        return xs.iter().any(|x| contains(f, b, x));
    }
    if let Some(ys) = b.explicit() {
        return ys.iter().any(|y| contains(f, a, y));
    }
    match (a, b) {
        (HyperSet::AboveValue { .. }, HyperSet::AboveValue { .. }) => true,
        (HyperSet::AboveValue { cut }, HyperSet::Ball { center, .. })
        | (HyperSet::Ball { center, .. }, HyperSet::AboveValue { cut }) => !cut.contains_value(&f.value(center)),
        (HyperSet::Ball { center: c1, .. }, HyperSet::Ball { center: c2, .. }) => {
            contains(f, b, c1) || contains(f, a, c2)
        }
        _ => unreachable!("explicit sets handled above"),
    }
}

/// Union of hypersum results, or `None` if it has no [`HyperSet`] form.
pub fn union<F: Hyperfield + ?Sized>(f: &F, sets: Vec<HyperSet<F::Elem>>) -> Option<HyperSet<F::Elem>> {
    let mut ray: Option<Cut> = None;
    let mut balls = Vec::new();
    let mut elems = Vec::new();
    for s in sets {
        match s {
            HyperSet::Singleton { elem } => elems.push(elem),
            HyperSet::Finite { elems: xs } => elems.extend(xs),
            HyperSet::AboveValue { cut } => {
                // Initial segments are totally ordered; the smaller cut is the larger ray.
                ray = Some(match ray {
                    Some(c) if c.is_subset(&cut) => c,
                    _ => cut,
                });
            }
            ball @ HyperSet::Ball { .. } => balls.push(ball),
        }
    }
    if let Some(cut) = ray {
        let r = HyperSet::above(cut);
        let loose = elems.iter().any(|e| !contains(f, &r, e)) || balls.iter().any(|b| !is_subset(f, b, &r));
        return if loose { None } else { Some(r) };
    }
    if !balls.is_empty() {
        let mut maximal: Vec<HyperSet<F::Elem>> = Vec::new();
        for b in balls {
            if maximal.iter().any(|m| is_subset(f, &b, m)) {
                continue;
            }
            maximal.retain(|m| !is_subset(f, m, &b));
            maximal.push(b);
        }
        if maximal.len() != 1 || elems.iter().any(|e| !contains(f, &maximal[0], e)) {
            return None;
        }
        return maximal.pop();
    }
    Some(HyperSet::from_vec(elems))
}

/// `S + z = ⋃_{s ∈ S} (s + z)`.
pub fn add_set<F: Hyperfield + ?Sized>(f: &F, set: &HyperSet<F::Elem>, z: &F::Elem) -> Option<HyperSet<F::Elem>> {
    match set {
        HyperSet::Singleton { elem } => Some(f.add(elem, z)),
        HyperSet::Finite { elems } => union(f, elems.iter().map(|e| f.add(e, z)).collect()),
        HyperSet::AboveValue { cut } => f.add_above(cut, z),
        HyperSet::Ball { .. } => None,
    }
}

/// `xS = { xs | s ∈ S }`.
pub fn scale<F: Hyperfield + ?Sized>(f: &F, set: &HyperSet<F::Elem>, x: &F::Elem) -> HyperSet<F::Elem> {
    if f.is_zero(x) {
        return HyperSet::singleton(f.zero());
    }
    match set {
        HyperSet::Singleton { elem } => HyperSet::singleton(f.mul(x, elem)),
        HyperSet::Finite { elems } => HyperSet::from_vec(elems.iter().map(|e| f.mul(x, e)).collect()),
        HyperSet::AboveValue { cut } => HyperSet::above(cut.shift_value(&f.value(x))),
        HyperSet::Ball { center, radius } => HyperSet::Ball {
            center: f.mul(x, center),
            radius: radius.shift_value(&f.value(x)),
        },
    }
}

/// Members of `set`: all of them when listed explicitly, otherwise those in
/// `window`.
pub fn members<F: Hyperfield + ?Sized>(f: &F, set: &HyperSet<F::Elem>, window: &[F::Elem]) -> Vec<F::Elem> {
    match set.explicit() {
        Some(xs) => xs.to_vec(),
        None => window.iter().filter(|t| contains(f, set, t)).cloned().collect(),
    }
}
