//! End-to-end pipelines over the worked examples, each emitting a verdict per
//! claim.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value as Json};

use crate::backend::Hyperfield;
use crate::error::{Error, Result};
use crate::hcore::{are_isomorphic, build_finite_field, build_k, is_field};
use crate::ltfield::{CompElem, Composite, LtContext, UnitClassField};
use crate::oag::{ConvexSubgroup, Cut, GroupElem};
use crate::report::ValidationReport;
use crate::tropical::{tropical_axiom_suite, tropical_classification, tropical_window, Tropical};
use crate::valn::valuation::{ring_difference, ring_inclusion};
use crate::valn::{
    check_coarsening_theorem, check_krasner, check_superiorly_canonical, coarsening, equivalent, induced_ring,
    residue_hyperfield, valuation_ring, Domain, Ultrametric, Valuation,
};

pub const SCENARIOS: &[&str] = &["example-last", "kgamma", "no-kraval", "tropical-not-krasner", "coarsening-theorem"];

/// Optional overrides; each scenario fills in its own defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioParams {
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub gamma: Option<usize>,
    pub bound: Option<i64>,
    pub coeff_bound: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub params: Map<String, Json>,
    pub claims: Vec<Claim>,
}

impl ScenarioReport {
    fn new(scenario: &str) -> Self {
        ScenarioReport { scenario: scenario.into(), params: Map::new(), claims: Vec::new() }
    }

    fn param(&mut self, key: &str, value: impl Into<Json>) {
        self.params.insert(key.into(), value.into());
    }

    fn claim(&mut self, claim: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.claims.push(Claim { claim: claim.into(), holds, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

/// `"passes"`, or the first failing axiom with its witness.
fn summary(report: &ValidationReport) -> String {
    match report.failures().next() {
        None => format!("passes ({})", report.mode.label()),
        Some(bad) => format!("{} fails at [{}]", bad.axiom, bad.witness.clone().unwrap_or_default().join(", ")),
    }
}

pub fn run_scenario(name: &str, params: &ScenarioParams) -> Result<ScenarioReport> {
    match name {
        "example-last" => example_last(params),
        "kgamma" => kgamma(params),
        "no-kraval" => no_kraval(params),
        "tropical-not-krasner" => tropical_not_krasner(params),
        "coarsening-theorem" => coarsening_theorem(params),
        _ => Err(Error::UnknownScenario(name.into())),
    }
}

fn composite_setup(params: &ScenarioParams, out: &mut ScenarioReport) -> Result<(Composite, Domain<CompElem>)> {
    let p = params.p.unwrap_or(2);
    let bound = params.bound.unwrap_or(3);
    let coeff_bound = params.coeff_bound.unwrap_or(4);
    out.param("p", p);
    out.param("bound", bound);
    out.param("coeff_bound", coeff_bound);
    let f = Composite::new(p)?;
    let elems = f.enumerate_window(bound, coeff_bound)?;
    Ok((f, Domain::bounded(elems, bound, Some(coeff_bound))))
}

/// `Q(X)` under `w = v_p ∘ v_X`: `O_w ⊊ O_u` where `u` is the `X`-adic
/// coarsening, and `u` is the valuation induced by the hypersum.
fn example_last(params: &ScenarioParams) -> Result<ScenarioReport> {
    let mut out = ScenarioReport::new("example-last");
    let (f, dom) = composite_setup(params, &mut out)?;
    let w = Valuation::canonical(&f).with_label("w");
    let rho = f.norm();
    let kr = check_krasner(&f, &w, &rho, &dom);
    out.claim("w is a Krasner valuation with norm {m1 <= 0}", kr.passed(), summary(&kr));

    let delta = rho.invariance_group(2);
    out.claim("ig(rho) = {0} x Z", delta == ConvexSubgroup::new(2, 1)?, format!("suffix index {}", delta.suffix_index));

    let u = coarsening(&w, delta).with_label("u");
    let (ow, ou) = (valuation_ring(&w), valuation_ring(&u));
    let inclusion = ring_inclusion(&f, &ow, &ou, &dom);
    let strict = ring_difference(&f, &ou, &ow, &dom);
    let detail = match (&inclusion, &strict) {
        (Err(x), _) => format!("{x} in O_w but not in O_u"),
        (Ok(()), Some(x)) => format!("witness {x}"),
        (Ok(()), None) => "rings agree on the window".into(),
    };
    out.claim("O_w is a proper subset of O_u", inclusion.is_ok() && strict.is_some(), detail);
    out.claim("w and u are not equivalent", !equivalent(&f, &w, &u, &dom), "compared on the window");

    let x = CompElem::ratio(0, 1, f.p() as i64);
    let induced = induced_ring();
    out.claim(
        format!("x = {x} lies in O_u and in the induced ring, not in O_w"),
        ou.contains(&f, &x) && induced.contains(&f, &x) && !ow.contains(&f, &x),
        format!("x - x = {}", f.sub(&x, &x)),
    );
    let verdict = check_coarsening_theorem(&f, &w, &rho, &dom);
    out.claim("O_u equals the induced ring", verdict.holds, verdict.witness.unwrap_or_else(|| "no disagreement".into()));
    Ok(out)
}

fn lt_setup(params: &ScenarioParams, out: &mut ScenarioReport, q: u64, gamma: usize, bound: i64) -> Result<(LtContext, Domain<crate::ltfield::LtElem>)> {
    let q = params.q.unwrap_or(q);
    let gamma = params.gamma.unwrap_or(gamma);
    let bound = params.bound.unwrap_or(bound);
    out.param("q", q);
    out.param("gamma", gamma);
    out.param("bound", bound);
    let k = LtContext::new(q, None, gamma)?;
    let elems = k.enumerate_window(bound)?;
    Ok((k, Domain::bounded(elems, bound, None)))
}

/// `K_γ(F_q)` with norm `{m ≤ γ}`: Krasner, superiorly canonical, residue
/// field `F_q`.
fn kgamma(params: &ScenarioParams) -> Result<ScenarioReport> {
    let mut out = ScenarioReport::new("kgamma");
    let (k, dom) = lt_setup(params, &mut out, 3, 1, 2)?;
    let v = Valuation::canonical(&k);
    let kr = check_krasner(&k, &v, &k.norm(), &dom);
    out.claim("v is a Krasner valuation with norm {m <= gamma}", kr.passed(), summary(&kr));
    let sch = check_superiorly_canonical(&k, &dom);
    out.claim("the additive hypergroup is superiorly canonical", sch.passed(), summary(&sch));
    let residue = residue_hyperfield(&k, &v, &dom)?;
    let fq = build_finite_field(k.q(), Some(k.field().modulus()))?;
    out.claim(
        format!("the residue hyperfield is F_{}", k.q()),
        is_field(&residue) && are_isomorphic(&residue, &fq),
        format!("{} classes", residue.size()),
    );
    match Ultrametric::new(&k, v, k.norm(), &dom) {
        Ok(d) => {
            let report = d.check();
            out.claim("d_v is an ultrametric and sums are balls", report.passed(), summary(&report));
        }
        Err(e) => out.claim("d_v is an ultrametric and sums are balls", false, e.to_string()),
    }
    Ok(out)
}

/// `Q(X)` modulo the `X`-adic units: residue `K`, so no Krasner valuation.
fn no_kraval(params: &ScenarioParams) -> Result<ScenarioReport> {
    let mut out = ScenarioReport::new("no-kraval");
    let bound = params.bound.unwrap_or(3);
    out.param("bound", bound);
    let f = UnitClassField;
    let dom = Domain::bounded(f.enumerate_window(bound), bound, None);
    let v = Valuation::canonical(&f);
    let residue = residue_hyperfield(&f, &v, &dom)?;
    out.claim("the residue hyperfield is K", are_isomorphic(&residue, &build_k()), format!("{} classes", residue.size()));
    let one_one = residue.mask_names(residue.add_mask(1, 1));
    out.claim("the residue hyperfield is not a field", !is_field(&residue), format!("1 + 1 = {one_one}"));
    for g in [0, 1] {
        let rho = Cut::at_most(&GroupElem::scalar(g));
        let report = check_krasner(&f, &v, &rho, &dom);
        out.claim(format!("v fails KVH with norm {rho}"), !report.passed(), summary(&report));
    }
    Ok(out)
}

/// `T(Z)` is a hyperfield whose identity valuation is not Krasner for any
/// norm, and whose addition is not superiorly canonical.
fn tropical_not_krasner(params: &ScenarioParams) -> Result<ScenarioReport> {
    let mut out = ScenarioReport::new("tropical-not-krasner");
    let bound = params.bound.unwrap_or(3);
    out.param("bound", bound);
    let suite = tropical_axiom_suite(1, false, bound);
    out.claim("T(Z) satisfies the hyperfield axioms", suite.passed(), summary(&suite));
    let t = Tropical::new(1, false);
    let dom = Domain::bounded(tropical_window(1, bound), bound, None);
    let v = Valuation::canonical(&t).with_label("id");
    for rho in [Cut::at_most(&GroupElem::scalar(0)), Cut::at_most(&GroupElem::scalar(1)), Cut::total()] {
        let report = check_krasner(&t, &v, &rho, &dom);
        out.claim(format!("the identity fails KVH2 with norm {rho}"), !report.holds("KVH2"), summary(&report));
    }
    let class = tropical_classification(1, false, bound);
    let witness = class.sch1.witness.clone().unwrap_or_default().join(", ");
    out.claim("T(Z) is not superiorly canonical", !class.sch1.holds, format!("SCH1 fails at [{witness}]"));
    Ok(out)
}

/// The ring induced by the hypersum is the valuation ring of the coarsening
/// by `ig(ρ)`: on the composite example, and on `K_γ(F_q)` where `ig(ρ)` is
/// trivial.
fn coarsening_theorem(params: &ScenarioParams) -> Result<ScenarioReport> {
    let mut out = ScenarioReport::new("coarsening-theorem");
    let (f, dom) = composite_setup(params, &mut out)?;
    let w = Valuation::canonical(&f).with_label("w");
    let verdict = check_coarsening_theorem(&f, &w, &f.norm(), &dom);
    out.claim(
        format!("{}: O of the coarsening by ig(rho) equals the induced ring", f.name()),
        verdict.holds,
        format!("ig(rho) has suffix index {}", verdict.delta.suffix_index),
    );

    let gamma = params.gamma.unwrap_or(1);
    out.param("gamma", gamma);
    let k = LtContext::new(3, None, gamma)?;
    let kb = 2;
    let kdom = Domain::bounded(k.enumerate_window(kb)?, kb, None);
    let v = Valuation::canonical(&k);
    let kv = check_coarsening_theorem(&k, &v, &k.norm(), &kdom);
    out.claim(
        format!("{}: ig(rho) is trivial and O_v equals the induced ring", k.name()),
        kv.holds && kv.trivial_invariance == Some(true),
        kv.witness.unwrap_or_else(|| "no disagreement".into()),
    );
    let doubled = v.clone().scale(2);
    let norm2 = Cut::at_most(&GroupElem::scalar(2 * gamma as i64 + 1));
    let both = check_krasner(&k, &doubled, &norm2, &kdom);
    out.claim(
        format!("{}: 2v is Krasner with norm {norm2} and has the same ring", k.name()),
        both.passed() && equivalent(&k, &v, &doubled, &kdom),
        summary(&both),
    );
    Ok(out)
}
