//! Coarsenings `v_Δ = π_Δ ∘ v` and the coarsening theorem for the
//! additively induced valuation ring.

use serde::{Deserialize, Serialize};

use crate::backend::Hyperfield;
use crate::oag::{ConvexSubgroup, Cut};
use crate::report::{AxiomVerdict, ValidationReport};
use crate::valn::valuation::{induced_ring, is_valuation, ring_difference, valuation_ring, Valuation};
use crate::valn::Domain;

/// `v_Δ`.
pub fn coarsening<E>(v: &Valuation<E>, delta: ConvexSubgroup) -> Valuation<E> {
    let label = format!("{}_{}", v.label, delta.suffix_index);
    v.clone().coarsen(delta).with_label(label)
}

/// `v_Δ` is a valuation and `O_v ⊆ O_{v_Δ}` on the domain.
pub fn coarsening_report<F: Hyperfield + ?Sized>(
    f: &F,
    v: &Valuation<F::Elem>,
    delta: ConvexSubgroup,
    dom: &Domain<F::Elem>,
) -> ValidationReport {
    let coarse = coarsening(v, delta);
    let mut report = is_valuation(f, &coarse, dom);
    let mut inclusion = AxiomVerdict::new("O_v ⊆ O_vΔ");
    let (fine, wide) = (valuation_ring(v), valuation_ring(&coarse));
    for x in &dom.elems {
        inclusion.record(!fine.contains(f, x) || wide.contains(f, x), || vec![x.to_string()]);
    }
    report.push(inclusion);
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoarseningVerdict {
    /// `ig(ρ)`.
    pub delta: ConvexSubgroup,
    /// `O_{v_Δ}` equals the induced ring on the domain.
    pub holds: bool,
    /// When `ig(ρ)` is trivial: `O_v` itself equals the induced ring.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trivial_invariance: Option<bool>,
    /// First domain element on which the rings disagree.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// With `Δ = ig(ρ)`, compares `O_{v_Δ}` against `{x | x - x ⊆ 1 - 1}`.
pub fn check_coarsening_theorem<F: Hyperfield + ?Sized>(
    f: &F,
    v: &Valuation<F::Elem>,
    rho: &Cut,
    dom: &Domain<F::Elem>,
) -> CoarseningVerdict {
    let delta = rho.invariance_group(v.rank());
    let coarse = coarsening(v, delta);
    let induced = induced_ring();
    let diff = ring_difference(f, &valuation_ring(&coarse), &induced, dom);
    let trivial_invariance = (delta == ConvexSubgroup::trivial(v.rank()))
        .then(|| ring_difference(f, &valuation_ring(v), &induced, dom).is_none());
    CoarseningVerdict { delta, holds: diff.is_none(), trivial_invariance, witness: diff.map(|x| x.to_string()) }
}

/// Two Krasner valuations `v` and `k·v` whose norms have trivial invariance
/// groups define the same ring on the domain.
pub fn uniqueness_check<F: Hyperfield + ?Sized>(
    f: &F,
    v: &Valuation<F::Elem>,
    k: i64,
    dom: &Domain<F::Elem>,
) -> AxiomVerdict {
    let scaled = v.clone().scale(k).with_label(format!("{k}{}", v.label));
    let mut verdict = AxiomVerdict::new("unique ring");
    let diff = ring_difference(f, &valuation_ring(v), &valuation_ring(&scaled), dom);
    verdict.record(diff.is_none(), || diff.iter().map(|x| x.to_string()).collect());
    verdict
}
