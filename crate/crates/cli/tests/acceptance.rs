//! Acceptance checks, one pass/fail line per criterion.
//!
//! Runs without the test harness so that every line is printed; the process
//! fails if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use hyperval_core::backend::Hyperfield;
use hyperval_core::hcore::classify::{all_sums_singletons, superiorly_canonical_report};
use hyperval_core::hcore::gf::prime_power;
use hyperval_core::hcore::{
    are_isomorphic, build_finite_field, build_k, build_s, build_w, classify, enumerate_hyperfields, is_field,
    quotient_hyperfield, subgroup_generators, validate, FiniteHyperfield, GroupDescriptor, SubgroupSpec,
};
use hyperval_core::ltfield::oracle::agrees;
use hyperval_core::ltfield::{CompElem, Composite, LtContext, UnitClassField};
use hyperval_core::scenarios::SCENARIOS;
use hyperval_core::tropical::tropical_axiom_suite;
use hyperval_core::valn::valuation::{ring_difference, ring_inclusion};
use hyperval_core::valn::*;
use hyperval_core::{ConvexSubgroup, Cut, GroupElem};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{took:.2?}"))
}

fn small_hyperfields() -> Vec<FiniteHyperfield> {
    (2..=4).flat_map(|n| enumerate_hyperfields(n, &GroupDescriptor::All, 6).unwrap()).collect()
}

fn quotient(q: u64, spec: &SubgroupSpec) -> FiniteHyperfield {
    let k = build_finite_field(q, None).unwrap();
    quotient_hyperfield(&k, &subgroup_generators(&k, spec).unwrap()).unwrap()
}

fn axioms_validate() -> Verdict {
    let start = Instant::now();
    let mut tables = vec![("K".to_string(), build_k()), ("S".into(), build_s()), ("W".into(), build_w())];
    for q in [2, 3, 4, 5, 7, 9] {
        tables.push((format!("F_{q}"), build_finite_field(q, None).unwrap()));
    }
    let mut quotients = 0;
    for q in (2..=11).filter(|&q| prime_power(q).is_some()) {
        let m = q as usize - 1;
        for index in (1..=m).filter(|d| m.is_multiple_of(*d)) {
            tables.push((format!("F_{q}/index {index}"), quotient(q, &SubgroupSpec::Index(index))));
            quotients += 1;
        }
    }
    for (name, t) in &tables {
        ensure(validate(t).passed(), || format!("{name} fails validation"))?;
    }
    for (rank, strict) in [(1, false), (1, true), (2, false)] {
        let report = tropical_axiom_suite(rank, strict, 3);
        ensure(report.passed(), || format!("{}: {report}", report.subject))?;
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!("{} tables ({quotients} quotients) and 3 tropical suites in {took}", tables.len()))
}

fn quotient_isomorphisms() -> Verdict {
    let k = build_k();
    for q in [3, 4, 5, 7, 9] {
        ensure(are_isomorphic(&quotient(q, &SubgroupSpec::All), &k), || format!("(F_{q})_(F_{q}^x) is not K"))?;
    }
    let w = build_w();
    for p in [7, 11, 19, 23] {
        ensure(are_isomorphic(&quotient(p, &SubgroupSpec::Squares), &w), || format!("(F_{p})_squares is not W"))?;
    }
    for p in [5, 13] {
        ensure(!are_isomorphic(&quotient(p, &SubgroupSpec::Squares), &w), || format!("(F_{p})_squares is W"))?;
    }
    Ok("K for q in {3,4,5,7,9}; W for p in {7,11,19,23}, not for {5,13}".into())
}

fn field_iff_singletons(all: &[FiniteHyperfield]) -> Verdict {
    for f in all {
        ensure(is_field(f) == all_sums_singletons(f), || format!("{} disagrees", f.name()))?;
    }
    Ok(format!("{} hyperfields of order <= 4", all.len()))
}

fn superiorly_canonical_iff_field(all: &[FiniteHyperfield]) -> Verdict {
    for f in all {
        ensure(classify(f).superiorly_canonical == is_field(f), || format!("{} disagrees", f.name()))?;
    }
    let mut witnesses = Vec::new();
    for (name, f) in [("S", build_s()), ("W", build_w()), ("K", build_k())] {
        let report = superiorly_canonical_report(&f);
        let sch1 = report.get("SCH1").unwrap();
        let witness = sch1.witness.clone().filter(|_| !sch1.holds).ok_or_else(|| format!("{name} passes SCH1"))?;
        witnesses.push(format!("{name} at ({})", witness.join(", ")));
    }
    Ok(format!("{} hyperfields; SCH1 fails for {}", all.len(), witnesses.join(", ")))
}

fn k_characterization(all: &[FiniteHyperfield]) -> Verdict {
    let k = build_k();
    for f in all {
        let c = classify(f);
        let predicted = c.stringent && c.char2 && c.cchar1;
        ensure(predicted == are_isomorphic(f, &k), || format!("{} disagrees", f.name()))?;
    }
    Ok(format!("{} hyperfields", all.len()))
}

fn krasner_backends() -> Verdict {
    let start = Instant::now();
    for q in [2, 3] {
        for gamma in 0..=2 {
            let k = LtContext::new(q, None, gamma).unwrap();
            let name = k.name();
            let window = k.enumerate_window(2).unwrap();
            for x in &window {
                for y in &window {
                    ensure(agrees(&k, &window, x, y), || format!("{name}: {x} + {y} disagrees with the oracle"))?;
                }
            }
            let dom = Domain::bounded(window, 2, None);
            let v = Valuation::canonical(&k);
            let kr = check_krasner(&k, &v, &k.norm(), &dom);
            ensure(kr.passed(), || format!("{name}: {kr}"))?;
            let sch = check_superiorly_canonical(&k, &dom);
            ensure(sch.passed(), || format!("{name}: {sch}"))?;
            let r = residue_hyperfield(&k, &v, &dom).map_err(|e| e.to_string())?;
            ensure(is_field(&r) && r.size() == q as usize, || format!("{name}: residue of order {}", r.size()))?;
            let d = Ultrametric::new(&k, v, k.norm(), &dom).map_err(|e| e.to_string())?;
            let report = d.check();
            for axiom in ["U1", "U2", "U3", "ball-identity"] {
                ensure(report.holds(axiom), || format!("{name}: {report}"))?;
            }
        }
    }
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!("q in {{2,3}}, gamma in {{0,1,2}}, B=2, in {took}"))
}

fn no_krasner_valuation() -> Verdict {
    let f = UnitClassField;
    let dom = Domain::bounded(f.enumerate_window(3), 3, None);
    let v = Valuation::canonical(&f);
    let r = residue_hyperfield(&f, &v, &dom).map_err(|e| e.to_string())?;
    ensure(are_isomorphic(&r, &build_k()), || "residue is not K".into())?;
    let mut failing = Vec::new();
    for rho in [Cut::at_most(&GroupElem::scalar(0)), Cut::at_most(&GroupElem::scalar(2)), Cut::total()] {
        let report = check_krasner(&f, &v, &rho, &dom);
        let bad = report.failures().next().ok_or_else(|| format!("KVH passes with norm {rho}"))?;
        failing.push(bad.axiom.clone());
    }
    Ok(format!("residue is K; check_krasner fails ({})", failing.join(", ")))
}

fn composite_coarsening() -> Verdict {
    let start = Instant::now();
    let f = Composite::new(2).unwrap();
    let dom = Domain::bounded(f.enumerate_window(3, 4).unwrap(), 3, Some(4));
    let w = Valuation::canonical(&f);
    let rho = f.norm();
    let delta = rho.invariance_group(2);
    ensure(delta == ConvexSubgroup::new(2, 1).unwrap(), || format!("ig(rho) = {delta:?}"))?;
    let u = coarsening(&w, delta);
    ensure(ring_inclusion(&f, &valuation_ring(&w), &valuation_ring(&u), &dom).is_ok(), || "O_w not in O_u".into())?;
    let witness = ring_difference(&f, &valuation_ring(&u), &valuation_ring(&w), &dom);
    ensure(witness == Some(CompElem::ratio(0, 1, 2)), || format!("witness {witness:?}"))?;
    ensure(!equivalent(&f, &w, &u, &dom), || "w and u are equivalent".into())?;
    let verdict = check_coarsening_theorem(&f, &w, &rho, &dom);
    ensure(verdict.holds, || format!("coarsening theorem fails at {:?}", verdict.witness))?;
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!("O_w < O_u with witness (0,1/2); ig(rho) = {{0}} x Z; theorem holds; {took}"))
}

fn induced_ring_trivial_invariance() -> Verdict {
    for gamma in [0, 1] {
        let k = LtContext::new(3, None, gamma).unwrap();
        let dom = Domain::bounded(k.enumerate_window(3).unwrap(), 3, None);
        let v = Valuation::canonical(&k);
        let diff = ring_difference(&k, &induced_ring(), &valuation_ring(&v), &dom);
        ensure(diff.is_none(), || format!("{}: differ at {}", k.name(), diff.unwrap()))?;
    }
    Ok("K_0(F_3), K_1(F_3) on B=3".into())
}

fn residue_embedding() -> Verdict {
    for q in [2, 3] {
        let at = |gamma| residue_embedding_check(&LtContext::new(q, None, gamma).unwrap(), 2).map_err(|e| e.to_string());
        ensure(at(0)?, || format!("q={q}: gamma=0 does not embed"))?;
        ensure(!at(1)?, || format!("q={q}: gamma=1 embeds"))?;
    }
    Ok("true for gamma=0, false for gamma=1, q in {2,3}".into())
}

fn cli_determinism() -> Verdict {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for s in SCENARIOS {
        let run = || Command::new(env!("CARGO_BIN_EXE_hyperval")).args(["scenario", s]).output().unwrap().stdout;
        let (a, b) = (run(), run());
        ensure(a == b, || format!("{s}: runs differ"))?;
        let expected = std::fs::read(golden.join(format!("scenario-{s}.json"))).map_err(|e| e.to_string())?;
        ensure(a == expected, || format!("{s}: differs from the golden file"))?;
    }
    Ok(format!("{} scenarios match their golden files", SCENARIOS.len()))
}

fn main() {
    let all = small_hyperfields();
    let criteria: Vec<Criterion> = vec![
        ("axiom validation of builtins, quotients and tropical suites", Box::new(axioms_validate)),
        ("factor hyperfields K and W", Box::new(quotient_isomorphisms)),
        ("is_field iff all sums are singletons", Box::new(|| field_iff_singletons(&all))),
        ("superiorly canonical iff field", Box::new(|| superiorly_canonical_iff_field(&all))),
        ("stringent, char 2 and cchar 1 iff K", Box::new(|| k_characterization(&all))),
        ("K_gamma(F_q) is Krasner", Box::new(krasner_backends)),
        ("Q(X) modulo X-adic units has no Krasner valuation", Box::new(no_krasner_valuation)),
        ("composite valuation and the coarsening theorem", Box::new(composite_coarsening)),
        ("induced ring with trivial invariance group", Box::new(induced_ring_trivial_invariance)),
        ("residue field embedding", Box::new(residue_embedding)),
        ("deterministic CLI scenarios", Box::new(cli_determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
