//! Residue hyperfields `O_v / M_v` and the embedding of the residue field of
//! a leading-term quotient.

use crate::backend::{contains, intersects, members, Hyperfield};
use crate::error::{Error, Result};
use crate::hcore::table::FiniteHyperfield;
use crate::hcore::{build_finite_field, validate};
use crate::hyperset::HyperSet;
use crate::ltfield::{LtContext, LtElem};
use crate::oag::{Cut, GroupElem, Value};
use crate::report::{AxiomVerdict, ValidationReport};
use crate::valn::valuation::Valuation;
use crate::valn::Domain;

/// Largest number of residue classes materialized.
pub const MAX_CLASSES: usize = 128;

struct Classes<'a, F: Hyperfield + ?Sized> {
    f: &'a F,
    v: &'a Valuation<F::Elem>,
    dom: &'a [F::Elem],
    zero: Value,
    /// `reps[0]` is zero, `reps[1]` is one.
    reps: Vec<F::Elem>,
}

impl<F: Hyperfield + ?Sized> Classes<'_, F> {
    fn maximal_ideal(&self) -> HyperSet<F::Elem> {
        HyperSet::above(Cut::at_most(&GroupElem::zero(self.v.rank())))
    }

    /// `x - y` meets `M_v`.
    fn equivalent(&self, x: &F::Elem, y: &F::Elem) -> bool {
        let d = self.f.sub(x, y);
        if self.v.is_canonical() {
            return intersects(self.f, &d, &self.maximal_ideal());
        }
        members(self.f, &d, self.dom).iter().any(|s| self.v.value(self.f, s) > self.zero)
    }

    fn class_of(&self, x: &F::Elem) -> Option<usize> {
        let vx = self.v.value(self.f, x);
        if vx > self.zero {
            return Some(0);
        }
        if vx < self.zero {
            return None;
        }
        (1..self.reps.len()).find(|&i| self.equivalent(&self.reps[i], x))
    }

    fn classes_of_set(&self, set: &HyperSet<F::Elem>) -> Result<Vec<usize>> {
        let unplaced = |x: &F::Elem| Error::ContextMismatch(format!("{x} has no residue class in the domain"));
        let mut out = Vec::new();
        match set {
            HyperSet::AboveValue { cut } if self.v.is_canonical() => {
                out.push(0);
                if !cut.contains_value(&self.zero) {
                    out.extend(1..self.reps.len());
                }
            }
            HyperSet::Ball { center, .. } if self.v.is_canonical() => {
                out.push(self.class_of(center).ok_or_else(|| unplaced(center))?);
            }
            _ => {
                for s in members(self.f, set, self.dom) {
                    out.push(self.class_of(&s).ok_or_else(|| unplaced(&s))?);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// `O_v / M_v` with `(x + M) ⊕ (y + M) = {z + M | z ∈ x + y}`.
///
/// Class representatives are drawn from the domain, zero and one first. The
/// result is validated as a hyperfield.
pub fn residue_hyperfield<F: Hyperfield + ?Sized>(
    f: &F,
    v: &Valuation<F::Elem>,
    dom: &Domain<F::Elem>,
) -> Result<FiniteHyperfield> {
    let zero_value = v.zero_value();
    let mut classes = Classes { f, v, dom: &dom.elems, zero: zero_value.clone(), reps: vec![f.zero(), f.one()] };
    let candidates = dom.elems.iter().filter(|x| v.value(f, x) == zero_value);
    for x in candidates {
        if classes.class_of(x).is_none() {
            if classes.reps.len() == MAX_CLASSES {
                return Err(Error::TooLarge(MAX_CLASSES + 1, MAX_CLASSES));
            }
            classes.reps.push(x.clone());
        }
    }
    let n = classes.reps.len();
    let mut mul = vec![vec![0; n]; n];
    let mut add = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (&classes.reps[i], &classes.reps[j]);
            let p = f.mul(x, y);
            mul[i][j] = classes
                .class_of(&p)
                .ok_or_else(|| Error::ContextMismatch(format!("{p} has no residue class in the domain")))?;
            add[i][j] = classes.classes_of_set(&f.add(x, y))?;
        }
    }
    let names = classes.reps.iter().map(|r| format!("[{r}]")).collect();
    let k = FiniteHyperfield::from_tables(names, mul, add)?
        .with_meta("name", format!("residue of {} under {}", f.name(), v.label));
    let report = validate(&k);
    if let Some(bad) = report.failures().next() {
        return Err(Error::MalformedTable(format!("residue tables fail {}", bad.axiom)));
    }
    Ok(k)
}

/// The candidate embedding `F_q → K_γ(F_q)`, `c ↦ [c]`, of the residue field
/// into the leading-term quotient. It is well defined as `[x v] ↦ [x]` only
/// when each residue class holds a single element of value 0; the map is
/// then checked to be injective, HH2, HH3 and EM1 on the window. Holds
/// exactly when `γ = 0`.
pub fn residue_embedding_report(k: &LtContext, bound: i64) -> Result<ValidationReport> {
    let elems = k.enumerate_window(bound)?;
    let dom = Domain::bounded(elems, bound, None);
    let mut report = dom.report(format!("F_{} -> {}", k.q(), k.name()));

    let mut well_defined = AxiomVerdict::new("well-defined");
    let units: Vec<&LtElem> = dom.elems.iter().filter(|x| x.value() == Some(0)).collect();
    for (i, x) in units.iter().enumerate() {
        for y in &units[i + 1..] {
            let same_residue = x.coeffs()[0] == y.coeffs()[0];
            well_defined.record(!same_residue, || vec![x.to_string(), y.to_string()]);
        }
    }
    report.push(well_defined);

    let fq = build_finite_field(k.q(), Some(k.field().modulus()))?;
    let sigma = |c: usize| -> LtElem {
        if c == 0 {
            return LtElem::Zero;
        }
        let mut coeffs = vec![0; k.gamma() + 1];
        coeffs[0] = c as u32;
        LtElem::new(0, coeffs)
    };
    let n = fq.size();
    let image: Vec<LtElem> = (0..n).map(sigma).collect();
    let name = |c: usize| fq.name_of(c).to_string();
    let mut injective = AxiomVerdict::new("injective");
    let mut hh2 = AxiomVerdict::new("HH2");
    let mut hh3 = AxiomVerdict::new("HH3");
    let mut em1 = AxiomVerdict::new("EM1");
    for a in 0..n {
        for b in 0..n {
            injective.record(a == b || image[a] != image[b], || vec![name(a), name(b)]);
            hh2.record(image[fq.times(a, b)] == k.mul(&image[a], &image[b]), || vec![name(a), name(b)]);
            let s = k.add(&image[a], &image[b]);
            let left: Vec<usize> = fq.sum(a, b);
            let right: Vec<usize> = (0..n).filter(|&c| contains(k, &s, &image[c])).collect();
            hh3.record(left.iter().all(|c| right.contains(c)), || vec![name(a), name(b)]);
            em1.record(left == right, || vec![name(a), name(b)]);
        }
    }
    for v in [injective, hh2, hh3, em1] {
        report.push(v);
    }
    Ok(report)
}

/// Whether `[x v] ↦ [x]` embeds the residue field into `K_γ(F_q)`.
pub fn residue_embedding_check(k: &LtContext, bound: i64) -> Result<bool> {
    Ok(residue_embedding_report(k, bound)?.passed())
}
