//! Exhaustive axiom checks for finite tables.

use crate::hcore::table::{bit, bits, FiniteHyperfield, Mask};
use crate::report::{AxiomVerdict, ValidationReport};

fn w(xs: &[usize]) -> Vec<String> {
    xs.iter().map(usize::to_string).collect()
}

/// Checks CH1–CH4, HR2, HR3 and that the nonzero elements form an abelian
/// group (`MG`). Witnesses are element indices.
pub fn validate(f: &FiniteHyperfield) -> ValidationReport {
    let n = f.size();
    let mut report = ValidationReport::exhaustive(crate::backend::Hyperfield::name(f));

    let mut ch1 = AxiomVerdict::new("CH1");
    'ch1: for x in 0..n {
        for y in 0..n {
            let xy = f.add_mask(x, y);
            for z in 0..n {
                let left = f.mask_plus(xy, z);
                let right = bits(f.add_mask(y, z)).fold(0, |m, s| m | f.add_mask(x, s));
                ch1.record(left == right, || w(&[x, y, z]));
                if ch1.failed() {
                    break 'ch1;
                }
            }
        }
    }
    report.push(ch1);

    let mut ch2 = AxiomVerdict::new("CH2");
    for x in 0..n {
        for y in x + 1..n {
            ch2.record(f.add_mask(x, y) == f.add_mask(y, x), || w(&[x, y]));
        }
    }
    report.push(ch2);

    let mut ch3 = AxiomVerdict::new("CH3");
    for x in 0..n {
        let inverses = (0..n).filter(|&y| f.add_mask(x, y) & 1 != 0).count();
        ch3.record(inverses == 1, || w(&[x]));
    }
    report.push(ch3);

    let mut ch4 = AxiomVerdict::new("CH4");
    for x in 0..n {
        for y in 0..n {
            for z in bits(f.add_mask(x, y)) {
                ch4.record(f.diff_mask(z, x) & bit(y) != 0, || w(&[x, y, z]));
            }
        }
    }
    report.push(ch4);

    let mut hr2 = AxiomVerdict::new("HR2");
    for x in 0..n {
        hr2.record(f.times(0, x) == 0 && f.times(x, 0) == 0, || w(&[x]));
        for y in 0..n {
            hr2.record(f.times(x, y) == f.times(y, x), || w(&[x, y]));
            for z in 0..n {
                let ok = f.times(f.times(x, y), z) == f.times(x, f.times(y, z));
                hr2.record(ok, || w(&[x, y, z]));
            }
        }
    }
    report.push(hr2);

    let mut hr3 = AxiomVerdict::new("HR3");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left: Mask = f.mask_scale(f.add_mask(y, z), x);
                let right = f.add_mask(f.times(x, y), f.times(x, z));
                hr3.record(left == right, || w(&[x, y, z]));
            }
        }
    }
    report.push(hr3);

    let mut mg = AxiomVerdict::new("MG");
    for x in 1..n {
        mg.record(f.times(1, x) == x, || w(&[x]));
        mg.record(f.inverse(x).is_some(), || w(&[x]));
        for y in 1..n {
            mg.record(f.times(x, y) != 0, || w(&[x, y]));
        }
    }
    report.push(mg);

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::gf::build_finite_field;
    use crate::hcore::table::{build_k, build_s, build_w};

    #[test]
    fn builtins_pass() {
        for f in [build_k(), build_s(), build_w(), build_finite_field(5, None).unwrap()] {
            let r = validate(&f);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_inverse_detected() {
        // K with 1 + 1 = {1}: nothing cancels 1.
        let names = vec!["0".into(), "1".into()];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let add = vec![vec![vec![0], vec![1]], vec![vec![1], vec![1]]];
        let f = FiniteHyperfield::from_tables(names, mul, add).unwrap();
        let r = validate(&f);
        assert!(!r.holds("CH3"));
        assert_eq!(r.get("CH3").unwrap().witness.as_deref(), Some(&["1".to_string()][..]));
    }
}
