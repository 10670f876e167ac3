//! Classification predicates, hyperideals and factor-hyperfield questions
//! for finite tables.

use serde::{Deserialize, Serialize};

use crate::hcore::gf::{prime_power, GaloisField};
use crate::hcore::morphism::find_isomorphism;
use crate::hcore::quotient::{quotient_hyperfield, subgroup_generators, SubgroupSpec};
use crate::hcore::table::{bit, bits, FiniteHyperfield, Mask};
use crate::report::{AxiomVerdict, ValidationReport};

/// `1 - 1 = {0}`.
pub fn is_field(f: &FiniteHyperfield) -> bool {
    f.diff_mask(1, 1) == bit(0)
}

/// Every cell of the addition table is a singleton.
pub fn all_sums_singletons(f: &FiniteHyperfield) -> bool {
    (0..f.size()).all(|x| (0..f.size()).all(|y| f.add_mask(x, y).count_ones() == 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub is_field: bool,
    /// `0 ∈ 1 + 1`.
    pub char2: bool,
    /// `1 ∈ 1 + 1`.
    pub cchar1: bool,
    /// `x + y` is a singleton whenever `0 ∉ x + y`.
    pub stringent: bool,
    pub superiorly_canonical: bool,
}

pub fn classify(f: &FiniteHyperfield) -> Classification {
    let one_one = f.add_mask(1, 1);
    let n = f.size();
    let stringent = (0..n).all(|x| (0..n).all(|y| {
        let s = f.add_mask(x, y);
        s & 1 != 0 || s.count_ones() == 1
    }));
    Classification {
        is_field: is_field(f),
        char2: one_one & bit(0) != 0,
        cchar1: one_one & bit(1) != 0,
        stringent,
        superiorly_canonical: superiorly_canonical_report(f).passed(),
    }
}

fn w(xs: &[usize]) -> Vec<String> {
    xs.iter().map(usize::to_string).collect()
}

/// SCH1–SCH4 over all tuples of the carrier.
pub fn superiorly_canonical_report(f: &FiniteHyperfield) -> ValidationReport {
    let n = f.size();
    let mut report = ValidationReport::exhaustive(crate::backend::Hyperfield::name(f));

    let mut sch1 = AxiomVerdict::new("SCH1");
    for x in 0..n {
        for y in 0..n {
            let s = f.add_mask(x, y);
            sch1.record(s & bit(x) == 0 || s == bit(x), || w(&[x, y]));
        }
    }
    report.push(sch1);

    // Distinct sums with a representative pair each, in first-seen order.
    let mut sums: Vec<(Mask, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in x..n {
            let s = f.add_mask(x, y);
            if !sums.iter().any(|&(m, _, _)| m == s) {
                sums.push((s, x, y));
            }
        }
    }
    let mut sch2 = AxiomVerdict::new("SCH2");
    for (i, &(a, x, y)) in sums.iter().enumerate() {
        for &(b, z, t) in &sums[i + 1..] {
            let ok = a & b == 0 || a & !b == 0 || b & !a == 0;
            sch2.record(ok, || w(&[x, y, z, t]));
        }
    }
    report.push(sch2);

    let self_diff: Vec<Mask> = (0..n).map(|z| f.diff_mask(z, z)).collect();
    let mut sch3 = AxiomVerdict::new("SCH3");
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let d: Vec<usize> = bits(f.diff_mask(x, y)).collect();
            for &z in &d {
                for &t in &d {
                    sch3.record(self_diff[z] == self_diff[t], || w(&[x, y, z, t]));
                }
            }
        }
    }
    report.push(sch3);

    let mut sch4 = AxiomVerdict::new("SCH4");
    for z in 0..n {
        for x in bits(self_diff[z]) {
            for y in 0..n {
                if self_diff[z] & bit(y) != 0 {
                    continue;
                }
                sch4.record(self_diff[x] & !self_diff[y] == 0, || w(&[x, y, z]));
            }
        }
    }
    report.push(sch4);
    report
}

/// `I` is a (traditional) subhyperring closed under multiplication by `F`.
pub fn is_hyperideal(f: &FiniteHyperfield, i: Mask) -> bool {
    if i & 1 == 0 {
        return false;
    }
    bits(i).all(|y| {
        (0..f.size()).all(|x| i & bit(f.times(x, y)) != 0) && bits(i).all(|x| f.diff_mask(x, y) & !i == 0)
    })
}

/// Scalars `{s | s - s = {0}}`, asserted to form a hyperideal.
pub fn scalar_hyperideal(f: &FiniteHyperfield) -> Mask {
    let s = (0..f.size()).filter(|&x| f.diff_mask(x, x) == 1).fold(0, |m, x| m | bit(x));
    debug_assert!(is_hyperideal(f, s), "scalars form a hyperideal");
    s
}

/// Largest carrier for which [`list_hyperideals`] enumerates subsets.
pub const MAX_IDEAL_SEARCH: usize = 20;

/// All hyperideals, by brute force over subsets containing `0`, sorted by
/// size then mask. `None` above [`MAX_IDEAL_SEARCH`] elements.
pub fn list_hyperideals(f: &FiniteHyperfield) -> Option<Vec<Mask>> {
    hyperideals_within(f, f.full_mask())
}

/// Hyperideals of the sub-structure on `carrier` (which must contain `0`
/// and be closed under `·` and `-`), for valuation hyperrings.
pub fn hyperideals_within(f: &FiniteHyperfield, carrier: Mask) -> Option<Vec<Mask>> {
    let elems: Vec<usize> = bits(carrier).filter(|&x| x != 0).collect();
    if elems.len() >= MAX_IDEAL_SEARCH {
        return None;
    }
    let mut out = Vec::new();
    for sel in 0u64..(1 << elems.len()) {
        let i = elems.iter().enumerate().filter(|(j, _)| sel >> j & 1 != 0).fold(1, |m, (_, &x)| m | bit(x));
        let ok = bits(i).all(|y| {
            bits(carrier).all(|x| i & bit(f.times(x, y)) != 0) && bits(i).all(|x| f.diff_mask(x, y) & !i == 0)
        });
        if ok {
            out.push(i);
        }
    }
    out.sort_by_key(|&m| (m.count_ones(), m));
    Some(out)
}

/// Evidence that `F` is not a factor hyperfield, by the criterion that a
/// finite hyperfield with `1 ∉ 1 + 1` in which `0` lies in no iterated sum
/// `1 + 1 + … + 1` is not a quotient of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonQuotientCertificate {
    pub criterion: String,
    /// The distinct iterated sums `1 + … + 1` (two or more terms).
    pub iterated_sums: Vec<Vec<usize>>,
}

pub fn non_quotient_certificate(f: &FiniteHyperfield) -> Option<NonQuotientCertificate> {
    if f.add_mask(1, 1) & bit(1) != 0 {
        return None;
    }
    // S_{k+1} = S_k + 1 is a deterministic walk on subsets; stop at a repeat.
    let mut seen: Vec<Mask> = Vec::new();
    let mut s = f.add_mask(1, 1);
    while !seen.contains(&s) {
        if s & 1 != 0 {
            return None;
        }
        seen.push(s);
        s = f.mask_plus(s, 1);
    }
    Some(NonQuotientCertificate {
        criterion: "1 ∉ 1+1 and 0 ∉ 1+…+1 (finite hyperfield non-quotient criterion)".into(),
        iterated_sums: seen.into_iter().map(|m| bits(m).collect()).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientWitness {
    pub q: u64,
    /// Generators of `T ≤ F_q^×`, as field element codes.
    pub generators: Vec<usize>,
    /// The isomorphism `(F_q)_T → F`.
    pub map: Vec<usize>,
}

/// Searches `F_q`, `q ≤ q_max`, for `T` with `(F_q)_T ≅ F`. A miss is not a
/// proof that `F` is not a factor hyperfield.
pub fn quotient_search(f: &FiniteHyperfield, q_max: u64) -> Option<QuotientWitness> {
    let units = f.size() - 1;
    for q in 2..=q_max {
        if prime_power(q).is_none() || !(q as usize - 1).is_multiple_of(units) {
            continue;
        }
        let Ok(k) = GaloisField::new(q, None).and_then(|g| g.to_hyperfield()) else {
            continue;
        };
        let Ok(gens) = subgroup_generators(&k, &SubgroupSpec::Index(units)) else {
            continue;
        };
        let Ok(kt) = quotient_hyperfield(&k, &gens) else {
            continue;
        };
        if let Some(sigma) = find_isomorphism(&kt, f) {
            return Some(QuotientWitness { q, generators: gens, map: sigma.map });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::gf::build_finite_field;
    use crate::hcore::table::{build_k, build_s, build_w};

    #[test]
    fn classify_builtins() {
        let k = classify(&build_k());
        assert!(k.char2 && k.cchar1 && k.stringent && !k.superiorly_canonical && !k.is_field);
        let s = superiorly_canonical_report(&build_s());
        assert_eq!(s.get("SCH1").unwrap().witness.as_deref(), Some(&["1".to_string(), "2".to_string()][..]));
        let w = superiorly_canonical_report(&build_w());
        assert_eq!(w.get("SCH1").unwrap().witness.as_deref(), Some(&["1".to_string(), "1".to_string()][..]));
        let f7 = classify(&build_finite_field(7, None).unwrap());
        assert!(f7.is_field && f7.superiorly_canonical && f7.stringent);
    }

    #[test]
    fn scalars() {
        assert_eq!(scalar_hyperideal(&build_w()), 1);
        assert_eq!(scalar_hyperideal(&build_k()), 1);
        let f5 = build_finite_field(5, None).unwrap();
        assert_eq!(scalar_hyperideal(&f5), f5.full_mask());
    }

    #[test]
    fn hyperideals_of_hyperfields() {
        for f in [build_k(), build_w(), build_finite_field(3, None).unwrap()] {
            assert_eq!(list_hyperideals(&f).unwrap(), vec![1, f.full_mask()]);
        }
    }

    #[test]
    fn certificates() {
        assert!(non_quotient_certificate(&build_w()).is_none());
        assert!(non_quotient_certificate(&build_finite_field(2, None).unwrap()).is_none());
    }

    #[test]
    fn quotient_witnesses() {
        let w = quotient_search(&build_w(), 23).unwrap();
        assert_eq!(w.q, 7);
        assert_eq!(w.generators, vec![2]);
        let k = quotient_search(&build_k(), 5).unwrap();
        assert_eq!(k.q, 3);
        let f2 = quotient_search(&build_finite_field(2, None).unwrap(), 2).unwrap();
        assert_eq!((f2.q, f2.generators.clone()), (2, vec![1]));
    }
}
