use hyperval_core::backend::Hyperfield;
use hyperval_core::hcore::table::mask_of;
use hyperval_core::hcore::{are_isomorphic, build_finite_field, build_k, build_s, build_w, enumerate_hyperfields, is_field, GroupDescriptor};
use hyperval_core::ltfield::{CompElem, Composite, LtContext, LtElem, UnitClassField};
use hyperval_core::tropical::{tropical_window, Tropical};
use hyperval_core::valn::coarsen::{coarsening_report, uniqueness_check};
use hyperval_core::valn::residue::residue_embedding_report;
use hyperval_core::valn::finite::{canonical_valuation_from_ring, maximal_ideal_check};
use hyperval_core::valn::valuation::{descr_ov_check, ring_difference, ring_inclusion};
use hyperval_core::valn::*;
use hyperval_core::{ConvexSubgroup, Cut, GroupElem, Value};

fn lt(q: u64, gamma: usize) -> LtContext {
    LtContext::new(q, None, gamma).unwrap()
}

fn lt_domain(k: &LtContext, bound: i64) -> Domain<LtElem> {
    Domain::bounded(k.enumerate_window(bound).unwrap(), bound, None)
}

fn composite_domain(f: &Composite) -> Domain<CompElem> {
    Domain::bounded(f.enumerate_window(3, 4).unwrap(), 3, Some(4))
}

#[test]
fn valuation_axioms_on_backends() {
    let w = build_w();
    assert!(is_valuation(&w, &Valuation::trivial(), &Domain::of_table(&w)).passed());
    let k = lt(3, 1);
    let dom = lt_domain(&k, 2);
    let report = is_valuation(&k, &Valuation::canonical(&k), &dom);
    assert!(report.passed(), "{report}");
    assert!(descr_ov_check(&k, &Valuation::canonical(&k), &dom).holds);
}

#[test]
fn mutated_valuation_fails_v2() {
    let f = build_finite_field(5, None).unwrap();
    // 2 has order 4 in F_5; sending it to 1 breaks multiplicativity.
    let v = Valuation::from_fn("bad", 1, |x: &usize| match x {
        0 => Value::Inf,
        2 => Value::scalar(1),
        _ => Value::scalar(0),
    });
    let report = is_valuation(&f, &v, &Domain::of_table(&f));
    assert!(!report.holds("V2"));
    assert!(report.get("V2").unwrap().witness.is_some());
    assert!(report.holds("V<=>HH"));
}

#[test]
fn valuation_hyperrings() {
    let s = build_s();
    let v = Valuation::trivial();
    assert!((0..3).all(|x| valuation_ring(&v).contains(&s, &x)));
    assert!((0..3).all(|x| maximal_ideal(&v).contains(&s, &x) == (x == 0)));

    let f5 = build_finite_field(5, None).unwrap();
    let small = ValuationRing::from_predicate("{0,1}", |x: &usize| *x <= 1);
    assert!(!is_valuation_hyperring(&f5, &small, &Domain::of_table(&f5)).passed());
    let whole = ValuationRing::from_predicate("F", |_: &usize| true);
    assert!(is_valuation_hyperring(&f5, &whole, &Domain::of_table(&f5)).passed());

    let k = lt(3, 1);
    let kd = lt_domain(&k, 2);
    assert!(is_valuation_hyperring(&k, &valuation_ring(&Valuation::canonical(&k)), &kd).passed());
    let o = valuation_ring(&Valuation::canonical(&k));
    assert!(kd.elems.iter().all(|x| o.contains(&k, x) == (x.value().is_none_or(|v| v >= 0))));

    let c = Composite::default();
    let ow = valuation_ring(&Valuation::canonical(&c));
    assert!(!ow.contains(&c, &CompElem::ratio(0, 1, 2)));
}

#[test]
fn rings_recover_trivial_valuations() {
    let w = build_w();
    let (order, pi) = canonical_valuation_from_ring(&w, w.full_mask()).unwrap();
    assert_eq!(order.cosets.len(), 1);
    assert_eq!(pi.rank(), 0);
    let f7 = build_finite_field(7, None).unwrap();
    assert!(canonical_valuation_from_ring(&f7, f7.full_mask()).is_ok());
    let f5 = build_finite_field(5, None).unwrap();
    assert!(canonical_valuation_from_ring(&f5, mask_of(&[0, 1])).is_err());
}

#[test]
fn no_proper_valuation_ring_in_small_hyperfields() {
    for order in 2..=4 {
        for f in enumerate_hyperfields(order, &GroupDescriptor::All, 6).unwrap() {
            let full = f.full_mask();
            for o in (0..=full).filter(|o| o & 0b11 == 0b11 && *o != full) {
                assert!(canonical_valuation_from_ring(&f, o).is_err(), "{} {o:b}", f.name());
            }
        }
    }
}

#[test]
fn maximal_ideal_of_trivial_valuation() {
    for f in [build_k(), build_s(), build_w(), build_finite_field(4, None).unwrap()] {
        let report = maximal_ideal_check(&f, &Valuation::trivial());
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn equivalence() {
    let c = Composite::default();
    let dom = composite_domain(&c);
    let w = Valuation::canonical(&c);
    let u = coarsening(&w, ConvexSubgroup::new(2, 1).unwrap());
    assert!(!equivalent(&c, &w, &u, &dom));
    let k = lt(3, 1);
    let v = Valuation::canonical(&k);
    assert!(equivalent(&k, &v, &v.clone().scale(2), &lt_domain(&k, 2)));
    let wf = build_w();
    assert!(equivalent(&wf, &Valuation::trivial(), &Valuation::trivial(), &Domain::of_table(&wf)));
}

#[test]
fn residue_hyperfields() {
    for gamma in 0..=2 {
        let k = lt(3, gamma);
        let r = residue_hyperfield(&k, &Valuation::canonical(&k), &lt_domain(&k, 1)).unwrap();
        assert_eq!(r.size(), 3);
        assert!(is_field(&r));
    }
    let n = UnitClassField;
    let dom = Domain::bounded(n.enumerate_window(3), 3, None);
    let r = residue_hyperfield(&n, &Valuation::canonical(&n), &dom).unwrap();
    assert!(are_isomorphic(&r, &build_k()));
    assert!(!is_field(&r));
    let w = build_w();
    let r = residue_hyperfield(&w, &Valuation::trivial(), &Domain::of_table(&w)).unwrap();
    assert!(are_isomorphic(&r, &w));
}

#[test]
fn residue_embedding() {
    for q in [2, 3] {
        assert!(residue_embedding_check(&lt(q, 0), 2).unwrap());
        assert!(!residue_embedding_check(&lt(q, 1), 2).unwrap());
        let report = residue_embedding_report(&lt(q, 1), 2).unwrap();
        let verdict = report.get("well-defined").unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.as_deref(), Some(&["(0,(1,0))".to_string(), "(0,(1,1))".to_string()][..]));
    }
}

#[test]
fn krasner_examples() {
    let k2 = build_k();
    let report = check_krasner(&k2, &Valuation::trivial(), &Cut::total(), &Domain::of_table(&k2));
    assert!(!report.holds("KVH2"));

    let k = lt(3, 1);
    let dom = lt_domain(&k, 2);
    let report = check_krasner(&k, &Valuation::canonical(&k), &k.norm(), &dom);
    assert!(report.passed(), "{report}");

    let t = Tropical::new(1, false);
    let tdom = Domain::bounded(tropical_window(1, 3), 3, None);
    for rho in [Cut::at_most(&GroupElem::scalar(0)), Cut::at_most(&GroupElem::scalar(2)), Cut::total()] {
        let report = check_krasner(&t, &Valuation::canonical(&t), &rho, &tdom);
        assert!(!report.holds("KVH2"));
    }
}

#[test]
fn ultrametric() {
    let k = lt(3, 1);
    let dom = lt_domain(&k, 1);
    let d = Ultrametric::new(&k, Valuation::canonical(&k), k.norm(), &dom).unwrap();
    let x = LtElem::new(0, vec![1, 1]);
    assert_eq!(d.distance(&x, &x), Value::Inf);
    assert_eq!(d.distance(&x, &LtElem::new(0, vec![1, 2])), Value::scalar(1));
    let report = d.check();
    assert!(report.passed(), "{report}");

    let t = Tropical::new(1, false);
    let tdom = Domain::bounded(tropical_window(1, 2), 2, None);
    assert!(Ultrametric::new(&t, Valuation::canonical(&t), Cut::total(), &tdom).is_err());
}

#[test]
fn superiorly_canonical() {
    let k = lt(2, 1);
    assert!(check_superiorly_canonical(&k, &lt_domain(&k, 2)).passed());
    let w = build_w();
    let report = check_superiorly_canonical(&w, &Domain::of_table(&w));
    let sch1 = report.get("SCH1").unwrap();
    assert!(!sch1.holds);
    assert_eq!(sch1.witness.as_deref(), Some(&["1".to_string(), "1".to_string()][..]));
    let f5 = build_finite_field(5, None).unwrap();
    assert!(check_superiorly_canonical(&f5, &Domain::of_table(&f5)).passed());
}

#[test]
fn induced_ring_membership() {
    let c = Composite::default();
    let o = induced_ring();
    assert!(o.contains(&c, &CompElem::ratio(0, 1, 2)));
    assert!(!o.contains(&c, &CompElem::ratio(-1, 1, 1)));
    let k = lt(3, 1);
    assert!(induced_ring().contains(&k, &LtElem::new(0, vec![2, 1])));
    assert!(is_valuation_hyperring(&c, &o, &composite_domain(&c)).passed());
}

#[test]
fn coarsenings() {
    let c = Composite::default();
    let dom = composite_domain(&c);
    let w = Valuation::canonical(&c);
    let delta = ConvexSubgroup::new(2, 1).unwrap();
    let report = coarsening_report(&c, &w, delta, &dom);
    assert!(report.passed(), "{report}");
    assert_eq!(coarsening(&w, delta).rank(), 1);
    let same = coarsening(&w, ConvexSubgroup::trivial(2));
    assert!(dom.elems.iter().all(|x| same.value(&c, x) == w.value(&c, x)));
    let flat = coarsening(&w, ConvexSubgroup::whole(2));
    assert!(dom.elems.iter().all(|x| flat.value(&c, x) == Valuation::<CompElem>::trivial().value(&c, x)));
}

#[test]
fn composite_example() {
    let c = Composite::default();
    let dom = composite_domain(&c);
    let w = Valuation::canonical(&c);
    let rho = c.norm();
    assert!(check_krasner(&c, &w, &rho, &dom).passed());
    assert_eq!(rho.invariance_group(2), ConvexSubgroup::new(2, 1).unwrap());
    let u = coarsening(&w, rho.invariance_group(2));
    assert!(ring_inclusion(&c, &valuation_ring(&w), &valuation_ring(&u), &dom).is_ok());
    let witness = ring_difference(&c, &valuation_ring(&u), &valuation_ring(&w), &dom);
    assert_eq!(witness, Some(CompElem::ratio(0, 1, 2)));
    let verdict = check_coarsening_theorem(&c, &w, &rho, &dom);
    assert!(verdict.holds);
    assert_eq!(verdict.trivial_invariance, None);
}

#[test]
fn trivial_invariance_group() {
    for gamma in [0, 1] {
        let k = lt(3, gamma);
        let dom = lt_domain(&k, 2);
        let v = Valuation::canonical(&k);
        let verdict = check_coarsening_theorem(&k, &v, &k.norm(), &dom);
        assert!(verdict.holds);
        assert_eq!(verdict.trivial_invariance, Some(true));
        assert!(uniqueness_check(&k, &v, 2, &dom).holds);
        assert!(check_krasner(&k, &v.clone().scale(2), &Cut::at_most(&GroupElem::scalar(2 * gamma as i64 + 1)), &dom).passed());
    }
}
