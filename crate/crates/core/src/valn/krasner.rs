//! Krasner valuations, the ultrametric they induce, and superiorly
//! canonical hypergroups.

use std::fmt::Display;

use crate::axioms;
use crate::backend::{contains, members, Hyperfield};
use crate::error::{Error, Result};
use crate::hyperset::HyperSet;
use crate::oag::{Cut, GroupElem, Value};
use crate::report::{AxiomVerdict, ValidationReport};
use crate::valn::valuation::Valuation;
use crate::valn::Domain;

fn w<E: Display>(xs: &[&E]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// Values of the members of `set`: one value per explicit member, or the
/// common value of a ball.
fn member_values<F: Hyperfield + ?Sized>(f: &F, v: &Valuation<F::Elem>, set: &HyperSet<F::Elem>, dom: &[F::Elem]) -> Vec<Value> {
    if v.is_canonical() {
        match set {
            HyperSet::Ball { center, .. } => return vec![f.value(center)],
            HyperSet::AboveValue { .. } => {}
            _ => return set.explicit().unwrap().iter().map(|s| f.value(s)).collect(),
        }
    }
    members(f, set, dom).iter().map(|s| v.value(f, s)).collect()
}

/// KVH1 on domain pairs and KVH2 as the two-sided equivalence
/// `t ∈ x + y ⟺ v(z - t) > ρ + min(vx, vy)` for `z ∈ x + y`.
pub fn check_krasner<F: Hyperfield + ?Sized>(f: &F, v: &Valuation<F::Elem>, rho: &Cut, dom: &Domain<F::Elem>) -> ValidationReport {
    let mut report = dom.report(format!("{} on {} with norm {rho}", v.label, f.name()));
    let zero = f.zero();
    let els = &dom.elems;

    let mut norm = AxiomVerdict::new("norm");
    norm.record(rho.contains(&GroupElem::zero(v.rank())), || vec![rho.to_string()]);
    report.push(norm);

    let mut kvh1 = AxiomVerdict::new("KVH1");
    let mut kvh2 = AxiomVerdict::new("KVH2");
    for x in els {
        for y in els {
            let s = f.add(x, y);
            if !contains(f, &s, &zero) {
                let vals = member_values(f, v, &s, els);
                kvh1.record(vals.windows(2).all(|p| p[0] == p[1]), || w(&[x, y]));
            }
            let lo = std::cmp::min(v.value(f, x), v.value(f, y));
            let radius = rho.shift_value(&lo);
            let inside: Vec<bool> = els.iter().map(|t| contains(f, &s, t)).collect();
            for (z, _) in els.iter().zip(&inside).filter(|(_, &i)| i) {
                for (t, &t_in) in els.iter().zip(&inside) {
                    let near = v.set_above(f, &f.sub(z, t), &radius, els);
                    kvh2.record(near == t_in, || w(&[x, y, z, t]));
                }
            }
        }
    }
    report.push(kvh1);
    report.push(kvh2);
    report
}

/// SCH1–SCH4 on the domain.
pub fn check_superiorly_canonical<F: Hyperfield + ?Sized>(f: &F, dom: &Domain<F::Elem>) -> ValidationReport {
    let mut report = dom.report(f.name());
    axioms::superiorly_canonical(f, &dom.elems, &mut report);
    report
}

/// `d_v(x, y) = v(x - y)` for a valuation that passed [`check_krasner`].
pub struct Ultrametric<'a, F: Hyperfield + ?Sized> {
    f: &'a F,
    v: Valuation<F::Elem>,
    rho: Cut,
    dom: &'a Domain<F::Elem>,
}

impl<'a, F: Hyperfield + ?Sized> Ultrametric<'a, F> {
    /// Refuses valuations failing KVH1 or KVH2 on the domain, for which the
    /// distance would be multivalued.
    pub fn new(f: &'a F, v: Valuation<F::Elem>, rho: Cut, dom: &'a Domain<F::Elem>) -> Result<Self> {
        let report = check_krasner(f, &v, &rho, dom);
        if let Some(bad) = report.failures().next() {
            let witness = bad.witness.clone().unwrap_or_default().join(", ");
            return Err(Error::NotKrasner(format!("{} fails at [{witness}]", bad.axiom)));
        }
        Ok(Ultrametric { f, v, rho, dom })
    }

    pub fn distance(&self, x: &F::Elem, y: &F::Elem) -> Value {
        if x == y {
            return Value::Inf;
        }
        let vals = member_values(self.f, &self.v, &self.f.sub(x, y), &self.dom.elems);
        vals.into_iter().next().expect("x - y has a member of finite value")
    }

    /// `B_r(z) = {t | d(z, t) ∉ r}`.
    pub fn ball_contains(&self, center: &F::Elem, radius: &Cut, t: &F::Elem) -> bool {
        !radius.contains_value(&self.distance(center, t))
    }

    /// U1–U3, the ball identity `x + y = B_{ρ + min(vx, vy)}(z)` for
    /// `z ∈ x + y`, and comparability of intersecting balls with radii
    /// `ρ + γ`, `|γ| ≤ 1`.
    pub fn check(&self) -> ValidationReport {
        let (f, els) = (self.f, &self.dom.elems);
        let mut report = self.dom.report(format!("d_{} on {}", self.v.label, f.name()));
        let d: Vec<Vec<Value>> = els.iter().map(|x| els.iter().map(|y| self.distance(x, y)).collect()).collect();

        let mut u1 = AxiomVerdict::new("U1");
        let mut u2 = AxiomVerdict::new("U2");
        let mut u3 = AxiomVerdict::new("U3");
        for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                u1.record(d[i][j].is_inf() == (i == j), || w(&[x, y]));
                u2.record(d[i][j] == d[j][i], || w(&[x, y]));
                for (k, z) in els.iter().enumerate() {
                    u3.record(d[i][k] >= std::cmp::min(d[i][j].clone(), d[j][k].clone()), || w(&[x, y, z]));
                }
            }
        }

        let mut balls = AxiomVerdict::new("ball-identity");
        for x in els {
            for y in els {
                let s = f.add(x, y);
                let lo = std::cmp::min(self.v.value(f, x), self.v.value(f, y));
                let radius = self.rho.shift_value(&lo);
                for (k, z) in els.iter().enumerate().filter(|(_, z)| contains(f, &s, z)) {
                    for (l, t) in els.iter().enumerate() {
                        let in_ball = !radius.contains_value(&d[k][l]);
                        balls.record(in_ball == contains(f, &s, t), || w(&[x, y, z, t]));
                    }
                }
            }
        }

        let mut comparable = AxiomVerdict::new("ball-comparability");
        let radii: Vec<Cut> = (-1..=1)
            .map(|g| {
                let mut c = vec![0; self.v.rank()];
                if let Some(last) = c.last_mut() {
                    *last = g;
                }
                self.rho.shift(&GroupElem::new(c))
            })
            .collect();
        let mut all_balls: Vec<(usize, usize, Vec<bool>)> = Vec::new();
        for (c, row) in d.iter().enumerate() {
            for (r, radius) in radii.iter().enumerate() {
                all_balls.push((c, r, row.iter().map(|dist| !radius.contains_value(dist)).collect()));
            }
        }
        for (a, (c1, r1, b1)) in all_balls.iter().enumerate() {
            for (c2, r2, b2) in &all_balls[a + 1..] {
                let meet = b1.iter().zip(b2).any(|(p, q)| *p && *q);
                let sub12 = b1.iter().zip(b2).all(|(p, q)| !*p || *q);
                let sub21 = b1.iter().zip(b2).all(|(p, q)| *p || !*q);
                comparable.record(!meet || sub12 || sub21, || {
                    vec![els[*c1].to_string(), radii[*r1].to_string(), els[*c2].to_string(), radii[*r2].to_string()]
                });
            }
        }
        for v in [u1, u2, u3, balls, comparable] {
            report.push(v);
        }
        report
    }
}
