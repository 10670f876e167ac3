use hyperval_core::backend::{contains, Hyperfield};
use hyperval_core::ltfield::composite::CompElem;
use hyperval_core::ltfield::oracle::agrees;
use hyperval_core::ltfield::{Composite, LtContext, LtElem};
use hyperval_core::oag::{Cut, GroupElem};
use hyperval_core::HyperSet;
use proptest::prelude::*;

#[test]
fn lt_add_matches_lift_oracle() {
    for q in [2, 3] {
        for gamma in 0..=2 {
            let k = LtContext::new(q, None, gamma).unwrap();
            let window = k.enumerate_window(2).unwrap();
            for x in &window {
                for y in &window {
                    assert!(agrees(&k, &window, x, y), "q={q} γ={gamma}: {x} + {y} = {}", k.lt_add(x, y));
                }
            }
        }
    }
}

#[test]
fn lt_add_matches_lift_oracle_over_extension_fields() {
    for q in [4, 5] {
        let k = LtContext::new(q, None, 1).unwrap();
        let window = k.enumerate_window(1).unwrap();
        for x in &window {
            for y in &window {
                assert!(agrees(&k, &window, x, y), "q={q}: {x} + {y}");
            }
        }
    }
}

#[test]
fn values_of_sums() {
    let k = LtContext::new(3, None, 2).unwrap();
    let window = k.enumerate_window(2).unwrap();
    for x in &window {
        for y in &window {
            let s = k.lt_add(x, y);
            let lo = std::cmp::min(k.value(x), k.value(y));
            let members: Vec<&LtElem> = window.iter().filter(|t| contains(&k, &s, t)).collect();
            assert!(members.iter().all(|z| k.value(z) >= lo));
            if k.value(x) != k.value(y) {
                assert!(members.iter().all(|z| k.value(z) == lo));
            }
        }
    }
}

#[test]
fn add_above_matches_pointwise_union() {
    let k = LtContext::new(2, None, 2).unwrap();
    let window = k.enumerate_window(2).unwrap();
    // Differences of window elements have value at most 2 + γ, or are zero.
    let wide = k.enumerate_window(5).unwrap();
    for b in -1..=2 {
        let cut = Cut::at_most(&GroupElem::scalar(b));
        let ray: Vec<&LtElem> = wide.iter().filter(|t| !cut.contains_value(&k.value(t))).collect();
        for z in &window {
            let s = k.add_above(&cut, z).unwrap();
            for t in &window {
                let direct = ray.iter().any(|r| contains(&k, &k.lt_add(r, z), t));
                assert_eq!(contains(&k, &s, t), direct, "b={b} z={z} t={t}");
            }
        }
    }
}

#[test]
fn composite_examples() {
    let f = Composite::default();
    let half = CompElem::ratio(0, 1, 2);
    assert_eq!(f.add(&half, &f.neg(&half)), HyperSet::above(Cut::prefix_at_most(vec![0])));
    let s = f.add(&CompElem::ratio(0, 1, 1), &CompElem::ratio(0, -1, 1));
    assert!(contains(&f, &s, &CompElem::Zero));
}

proptest! {
    #[test]
    fn mul_inverse_roundtrip(v in -5i64..5, c0 in 1u32..3, c1 in 0u32..3, c2 in 0u32..3) {
        let k = LtContext::new(3, None, 2).unwrap();
        let x = LtElem::new(v, vec![c0, c1, c2]);
        let xi = k.inv(&x).unwrap();
        prop_assert_eq!(k.mul(&x, &xi), k.one());
        prop_assert_eq!(k.neg(&k.neg(&x)), x);
    }
}
