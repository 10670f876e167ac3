//! Hyperfield axioms and classification predicates checked over a finite
//! window of any backend.
//!
//! Set comparisons are symbolic where the backend can represent both sides;
//! otherwise membership is compared on the window, using
//! `t ∈ S + z ⟺ S ∩ (t - z) ≠ ∅`.

use crate::backend::{add_set, contains, intersects, is_subset, members, scale, set_eq, Hyperfield};
use crate::hyperset::HyperSet;
use crate::report::{AxiomVerdict, ValidationReport};

fn w<E: ToString>(xs: &[&E]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// `(x + y) + z = x + (y + z)`.
fn assoc_holds<F: Hyperfield + ?Sized>(f: &F, xy: &HyperSet<F::Elem>, yz: &HyperSet<F::Elem>, x: &F::Elem, z: &F::Elem, window: &[F::Elem]) -> bool {
    if let (Some(l), Some(r)) = (add_set(f, xy, z), add_set(f, yz, x)) {
        return set_eq(f, &l, &r);
    }
    window
        .iter()
        .all(|t| intersects(f, xy, &f.sub(t, z)) == intersects(f, yz, &f.sub(t, x)))
}

/// CH1–CH4, HR2 and HR3 on all window tuples.
pub fn window_axioms<F: Hyperfield + ?Sized>(f: &F, window: &[F::Elem], report: &mut ValidationReport) {
    let zero = f.zero();
    let sums: Vec<Vec<HyperSet<F::Elem>>> = window.iter().map(|x| window.iter().map(|y| f.add(x, y)).collect()).collect();

    let mut ch1 = AxiomVerdict::new("CH1");
    'ch1: for (i, x) in window.iter().enumerate() {
        for (j, y) in window.iter().enumerate() {
            for (k, z) in window.iter().enumerate() {
                ch1.record(assoc_holds(f, &sums[i][j], &sums[j][k], x, z, window), || w(&[x, y, z]));
                if ch1.failed() {
                    break 'ch1;
                }
            }
        }
    }
    report.push(ch1);

    let mut ch2 = AxiomVerdict::new("CH2");
    for (i, x) in window.iter().enumerate() {
        for (j, y) in window.iter().enumerate().skip(i + 1) {
            ch2.record(set_eq(f, &sums[i][j], &sums[j][i]), || w(&[x, y]));
        }
    }
    report.push(ch2);

    let mut ch3 = AxiomVerdict::new("CH3");
    for (i, x) in window.iter().enumerate() {
        let nx = f.neg(x);
        ch3.record(contains(f, &f.add(x, &nx), &zero), || w(&[x]));
        for (j, y) in window.iter().enumerate() {
            if *y != nx {
                ch3.record(!contains(f, &sums[i][j], &zero), || w(&[x, y]));
            }
        }
    }
    report.push(ch3);

    let mut ch4 = AxiomVerdict::new("CH4");
    for (i, x) in window.iter().enumerate() {
        for (j, y) in window.iter().enumerate() {
            for z in members(f, &sums[i][j], window) {
                ch4.record(contains(f, &f.sub(&z, x), y), || w(&[x, y, &z]));
            }
        }
    }
    report.push(ch4);

    let mut hr2 = AxiomVerdict::new("HR2");
    for x in window {
        hr2.record(f.mul(x, &zero) == zero && f.mul(x, &f.one()) == *x, || w(&[x]));
        if *x != zero {
            let ok = f.inv(x).is_some_and(|xi| f.mul(x, &xi) == f.one());
            hr2.record(ok, || w(&[x]));
        }
        for y in window {
            hr2.record(f.mul(x, y) == f.mul(y, x), || w(&[x, y]));
            for z in window {
                hr2.record(f.mul(&f.mul(x, y), z) == f.mul(x, &f.mul(y, z)), || w(&[x, y, z]));
            }
        }
    }
    report.push(hr2);

    let mut hr3 = AxiomVerdict::new("HR3");
    for (i, x) in window.iter().enumerate() {
        for (j, y) in window.iter().enumerate() {
            for z in window {
                let left = scale(f, &sums[i][j], z);
                let right = f.add(&f.mul(z, x), &f.mul(z, y));
                hr3.record(set_eq(f, &left, &right), || w(&[z, x, y]));
            }
        }
    }
    report.push(hr3);
}

/// `0 ∈ 1 + 1`.
pub fn char2<F: Hyperfield + ?Sized>(f: &F) -> bool {
    contains(f, &f.add(&f.one(), &f.one()), &f.zero())
}

/// `1 ∈ 1 + 1`.
pub fn cchar1<F: Hyperfield + ?Sized>(f: &F) -> bool {
    contains(f, &f.add(&f.one(), &f.one()), &f.one())
}

/// `x + y` is a singleton unless it contains `0`.
pub fn stringent<F: Hyperfield + ?Sized>(f: &F, window: &[F::Elem]) -> AxiomVerdict {
    let zero = f.zero();
    let mut v = AxiomVerdict::new("stringent");
    for x in window {
        for y in window {
            let s = f.add(x, y);
            v.record(s.is_singleton() || contains(f, &s, &zero), || w(&[x, y]));
        }
    }
    v
}

/// SCH1–SCH4 on all window tuples.
pub fn superiorly_canonical<F: Hyperfield + ?Sized>(f: &F, window: &[F::Elem], report: &mut ValidationReport) {
    let mut sch1 = AxiomVerdict::new("SCH1");
    for x in window {
        for y in window {
            let s = f.add(x, y);
            let ok = !contains(f, &s, x) || s.as_singleton() == Some(x);
            sch1.record(ok, || w(&[x, y]));
        }
    }
    report.push(sch1);

    // Distinct sums with a representative pair, in first-seen order.
    type Rep<'a, E> = (HyperSet<E>, &'a E, &'a E);
    let mut sums: Vec<Rep<F::Elem>> = Vec::new();
    for (i, x) in window.iter().enumerate() {
        for y in &window[i..] {
            let s = f.add(x, y);
            if !sums.iter().any(|(t, _, _)| set_eq(f, t, &s)) {
                sums.push((s, x, y));
            }
        }
    }
    let mut sch2 = AxiomVerdict::new("SCH2");
    for (i, (a, x, y)) in sums.iter().enumerate() {
        for (b, z, t) in &sums[i + 1..] {
            let ok = !intersects(f, a, b) || is_subset(f, a, b) || is_subset(f, b, a);
            sch2.record(ok, || w(&[*x, *y, *z, *t]));
        }
    }
    report.push(sch2);

    let self_diff: Vec<HyperSet<F::Elem>> = window.iter().map(|z| f.sub(z, z)).collect();
    let self_diff_of = |z: &F::Elem| -> HyperSet<F::Elem> {
        match window.iter().position(|u| u == z) {
            Some(i) => self_diff[i].clone(),
            None => f.sub(z, z),
        }
    };
    let mut sch3 = AxiomVerdict::new("SCH3");
    for x in window {
        for y in window {
            if x == y {
                continue;
            }
            let d = members(f, &f.sub(x, y), window);
            for (i, z) in d.iter().enumerate() {
                let zz = self_diff_of(z);
                for t in &d[i + 1..] {
                    sch3.record(set_eq(f, &zz, &self_diff_of(t)), || w(&[x, y, z, t]));
                }
            }
        }
    }
    report.push(sch3);

    let mut sch4 = AxiomVerdict::new("SCH4");
    for (k, z) in window.iter().enumerate() {
        let zz = &self_diff[k];
        let inside = members(f, zz, window);
        for y in window.iter().enumerate().filter(|(_, y)| !contains(f, zz, y)) {
            for x in &inside {
                sch4.record(is_subset(f, &self_diff_of(x), &self_diff[y.0]), || w(&[x, y.1, z]));
            }
        }
    }
    report.push(sch4);
}
