//! Valuation theory on finite tables: the valuation of a valuation hyperring
//! read off the ordered coset group `F^× / O^×`, and the maximal ideal.

use serde::{Deserialize, Serialize};

use crate::backend::Hyperfield;
use crate::error::{Error, Result};
use crate::hcore::classify::hyperideals_within;
use crate::hcore::table::{bit, FiniteHyperfield, Mask};
use crate::report::{AxiomVerdict, ValidationReport};
use crate::valn::valuation::{maximal_ideal, units, valuation_ring, Valuation};
use crate::valn::Domain;

/// `F^× / O^×` under `aO^× ≤ bO^× ⟺ b a⁻¹ ∈ O`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetOrder {
    /// Cosets as sorted element lists, in order of their least element.
    pub cosets: Vec<Vec<String>>,
    pub report: ValidationReport,
}

fn coset_index(cosets: &[Vec<usize>], x: usize) -> usize {
    cosets.iter().position(|c| c.contains(&x)).expect("units are partitioned into cosets")
}

/// Builds the ordered coset group of `O` and the valuation `π: F → F^×/O^×`.
///
/// A finite ordered group is trivial, so a valuation hyperring of a finite
/// hyperfield is all of `F` and `π` is the trivial valuation. Any other
/// subset fails one of the order axioms.
pub fn canonical_valuation_from_ring(f: &FiniteHyperfield, o: Mask) -> Result<(CosetOrder, Valuation<usize>)> {
    let inside = |x: usize| o & bit(x) != 0;
    if !inside(0) || !inside(1) {
        return Err(Error::InconsistentRing("O must contain 0 and 1".into()));
    }
    let inv = |x: usize| f.inverse(x).expect("nonzero elements are invertible");
    let o_units: Vec<usize> = f.units().filter(|&x| inside(x) && inside(inv(x))).collect();
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for a in f.units() {
        if cosets.iter().any(|c| c.contains(&a)) {
            continue;
        }
        let mut c: Vec<usize> = o_units.iter().map(|&u| f.times(a, u)).collect();
        c.sort_unstable();
        c.dedup();
        cosets.push(c);
    }
    let n = cosets.len();
    let le_elem = |a: usize, b: usize| inside(f.times(b, inv(a)));
    let le = |i: usize, j: usize| le_elem(cosets[i][0], cosets[j][0]);
    let name = |i: usize| f.name_of(cosets[i][0]).to_string();

    let mut report = ValidationReport::exhaustive(format!("F^x/O^x of {}", f.name()));
    let mut well_defined = AxiomVerdict::new("well-defined");
    for i in 0..n {
        for j in 0..n {
            for &a in &cosets[i] {
                for &b in &cosets[j] {
                    well_defined.record(le_elem(a, b) == le(i, j), || vec![f.name_of(a).into(), f.name_of(b).into()]);
                }
            }
        }
    }
    let mut total = AxiomVerdict::new("total");
    let mut antisymmetric = AxiomVerdict::new("antisymmetric");
    let mut transitive = AxiomVerdict::new("transitive");
    let mut compatible = AxiomVerdict::new("compatible");
    for i in 0..n {
        for j in 0..n {
            total.record(le(i, j) || le(j, i), || vec![name(i), name(j)]);
            antisymmetric.record(!(le(i, j) && le(j, i)) || i == j, || vec![name(i), name(j)]);
            for k in 0..n {
                transitive.record(!(le(i, j) && le(j, k)) || le(i, k), || vec![name(i), name(j), name(k)]);
                let c = cosets[k][0];
                let (ic, jc) = (
                    coset_index(&cosets, f.times(cosets[i][0], c)),
                    coset_index(&cosets, f.times(cosets[j][0], c)),
                );
                compatible.record(!le(i, j) || le(ic, jc), || vec![name(i), name(j), name(k)]);
            }
        }
    }
    for v in [well_defined, total, antisymmetric, transitive, compatible] {
        report.push(v);
    }
    if let Some(bad) = report.failures().next() {
        let witness = bad.witness.clone().unwrap_or_default().join(", ");
        return Err(Error::InconsistentRing(format!("the coset order fails {} at [{witness}]", bad.axiom)));
    }
    if n != 1 {
        return Err(Error::InconsistentRing(format!("a finite ordered group with {n} elements")));
    }
    let pi = Valuation::trivial().with_label("pi");
    let mut same_ring = AxiomVerdict::new("O_pi = O");
    let ring = valuation_ring(&pi);
    for x in 0..f.size() {
        same_ring.record(ring.contains(f, &x) == inside(x), || vec![f.name_of(x).into()]);
    }
    report.push(same_ring);
    if !report.passed() {
        return Err(Error::InconsistentRing("O_pi differs from O".into()));
    }
    let names = cosets.iter().map(|c| c.iter().map(|&x| f.name_of(x).to_string()).collect()).collect();
    Ok((CosetOrder { cosets: names, report }, pi))
}

fn mask_where(f: &FiniteHyperfield, p: impl Fn(usize) -> bool) -> Mask {
    (0..f.size()).filter(|&x| p(x)).fold(0, |m, x| m | bit(x))
}

/// `M_v = O_v \ O_v^×` is a hyperideal of `O_v` and contains every proper
/// hyperideal of `O_v`.
pub fn maximal_ideal_check(f: &FiniteHyperfield, v: &Valuation<usize>) -> ValidationReport {
    let dom = Domain::of_table(f);
    let mut report = dom.report(format!("{} in {}", maximal_ideal(v).label, f.name()));
    let (o, m, u) = (valuation_ring(v), maximal_ideal(v), units(v));
    let o_mask = mask_where(f, |x| o.contains(f, &x));
    let m_mask = mask_where(f, |x| m.contains(f, &x));
    let u_mask = mask_where(f, |x| u.contains(f, &x));

    let mut complement = AxiomVerdict::new("M = O \\ O^x");
    complement.record(m_mask == o_mask & !u_mask, || vec![f.mask_names(m_mask)]);
    report.push(complement);

    let mut ideal = AxiomVerdict::new("hyperideal");
    let mut maximal = AxiomVerdict::new("unique maximal");
    match hyperideals_within(f, o_mask) {
        None => {
            ideal.record(false, || vec!["carrier too large to search".into()]);
        }
        Some(ideals) => {
            ideal.record(ideals.contains(&m_mask), || vec![f.mask_names(m_mask)]);
            for i in ideals.into_iter().filter(|&i| i & bit(1) == 0) {
                maximal.record(i & !m_mask == 0, || vec![f.mask_names(i)]);
            }
        }
    }
    report.push(ideal);
    report.push(maximal);
    report
}
