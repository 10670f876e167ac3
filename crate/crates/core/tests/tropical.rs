use hyperval_core::oag::{ConvexSubgroup, GroupElem, Value};
use hyperval_core::tropical::*;

#[test]
fn t_z_axioms_and_classification() {
    let r = tropical_axiom_suite(1, false, 3);
    assert!(r.passed(), "{r}");
    let c = tropical_classification(1, false, 3);
    assert!(c.char2 && c.cchar1 && c.stringent.holds);
    assert!(!c.sch1.holds);
    assert_eq!(c.sch1.witness, Some(vec!["0".to_string(), "0".to_string()]));
}

#[test]
fn t_prime_z_axioms_without_cchar1() {
    let r = tropical_axiom_suite(1, true, 3);
    assert!(r.passed(), "{r}");
    let c = tropical_classification(1, true, 3);
    assert!(c.char2 && !c.cchar1 && c.stringent.holds);
}

#[test]
fn t_z2_axioms() {
    let r = tropical_axiom_suite(2, false, 3);
    assert!(r.passed(), "{r}");
    assert_eq!(r.window.as_ref().unwrap().elements, 50);
}

#[test]
fn pi_delta_is_a_surjective_homomorphism() {
    for k in 0..=2 {
        let delta = ConvexSubgroup::new(2, k).unwrap();
        let r = pi_delta_report(2, &delta, 2);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn valuation_ring_matches_preimage_of_unit_sum() {
    for k in 0..=2 {
        let delta = ConvexSubgroup::new(2, k).unwrap();
        for x in tropical_window(2, 3) {
            assert_eq!(valuation_ring_of_pi_delta(&x, &delta), valuation_ring_by_preimage(&x, &delta), "{x}");
        }
    }
    let delta = ConvexSubgroup::new(2, 1).unwrap();
    assert!(valuation_ring_by_preimage(&Value::Fin(GroupElem::new(vec![0, -5])), &delta));
}
