//! `K_γ = F_q((t)) / (1 + M^ρ)` for `ρ = {m ≤ γ}`: a nonzero element is the
//! value of a Laurent series together with its first `γ + 1` coefficients.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::backend::Hyperfield;
use crate::error::{Error, Result};
use crate::hcore::gf::GaloisField;
use crate::hyperset::HyperSet;
use crate::oag::{Cut, GroupElem, Value};

/// Above this many elements a hypersum is returned as a ball.
pub const MATERIALIZE_CAP: usize = 10_000;

/// Largest window [`LtContext::enumerate_window`] will build.
pub const MAX_WINDOW: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LtElem {
    Zero,
    /// `t^value (coeffs[0] + coeffs[1] t + …)`, `coeffs[0] ≠ 0`.
    Nonzero { value: i64, coeffs: Vec<u32> },
}

#[derive(Serialize, Deserialize)]
struct LtElemRepr {
    value: i64,
    coeffs: Vec<u32>,
}

impl Serialize for LtElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LtElem::Zero => s.serialize_none(),
            LtElem::Nonzero { value, coeffs } => {
                s.serialize_some(&LtElemRepr { value: *value, coeffs: coeffs.clone() })
            }
        }
    }
}

impl<'de> Deserialize<'de> for LtElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match Option::<LtElemRepr>::deserialize(d)? {
            None => LtElem::Zero,
            Some(r) => LtElem::Nonzero { value: r.value, coeffs: r.coeffs },
        })
    }
}

impl fmt::Display for LtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LtElem::Zero => write!(f, "0"),
            LtElem::Nonzero { value, coeffs } => {
                let cs: Vec<String> = coeffs.iter().map(u32::to_string).collect();
                write!(f, "({value},({}))", cs.join(","))
            }
        }
    }
}

impl LtElem {
    pub fn new(value: i64, coeffs: Vec<u32>) -> Self {
        LtElem::Nonzero { value, coeffs }
    }

    pub fn value(&self) -> Option<i64> {
        match self {
            LtElem::Zero => None,
            LtElem::Nonzero { value, .. } => Some(*value),
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        match self {
            LtElem::Zero => &[],
            LtElem::Nonzero { coeffs, .. } => coeffs,
        }
    }
}

/// The field `F_q` and the level `γ`.
#[derive(Clone, Debug)]
pub struct LtContext {
    gamma: usize,
    gf: GaloisField,
}

#[derive(Serialize, Deserialize)]
struct LtContextRepr {
    q: u64,
    modulus: Vec<u64>,
    gamma: usize,
}

impl Serialize for LtContext {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LtContextRepr { q: self.q(), modulus: self.gf.modulus().to_vec(), gamma: self.gamma }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LtContext {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = LtContextRepr::deserialize(d)?;
        LtContext::new(r.q, Some(&r.modulus), r.gamma).map_err(serde::de::Error::custom)
    }
}

impl PartialEq for LtContext {
    fn eq(&self, other: &Self) -> bool {
        self.gamma == other.gamma && self.gf == other.gf
    }
}

impl LtContext {
    pub fn new(q: u64, modulus: Option<&[u64]>, gamma: usize) -> Result<Self> {
        Ok(LtContext { gamma, gf: GaloisField::new(q, modulus)? })
    }

    pub fn q(&self) -> u64 {
        self.gf.order() as u64
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn field(&self) -> &GaloisField {
        &self.gf
    }

    /// `ρ = {m ≤ γ}`.
    pub fn norm(&self) -> Cut {
        Cut::at_most(&GroupElem::scalar(self.gamma as i64))
    }

    /// Checks the invariants of an element of this context.
    pub fn check(&self, x: &LtElem) -> Result<()> {
        match x {
            LtElem::Zero => Ok(()),
            LtElem::Nonzero { coeffs, .. } => {
                let ok = coeffs.len() == self.gamma + 1
                    && coeffs[0] != 0
                    && coeffs.iter().all(|&c| (c as usize) < self.gf.order());
                if ok {
                    Ok(())
                } else {
                    Err(Error::ContextMismatch(format!("{x} is not an element of {}", self.name())))
                }
            }
        }
    }

    pub fn lt_mul(&self, x: &LtElem, y: &LtElem) -> LtElem {
        let (LtElem::Nonzero { value: a, coeffs: xs }, LtElem::Nonzero { value: b, coeffs: ys }) = (x, y) else {
            return LtElem::Zero;
        };
        let coeffs = (0..=self.gamma)
            .map(|k| (0..=k).fold(0, |acc, i| self.gf.add(acc, self.gf.mul(xs[i], ys[k - i]))))
            .collect();
        LtElem::new(a + b, coeffs)
    }

    pub fn lt_neg(&self, x: &LtElem) -> LtElem {
        match x {
            LtElem::Zero => LtElem::Zero,
            LtElem::Nonzero { value, coeffs } => LtElem::new(*value, coeffs.iter().map(|&c| self.gf.neg(c)).collect()),
        }
    }

    pub fn lt_inv(&self, x: &LtElem) -> Result<LtElem> {
        let LtElem::Nonzero { value, coeffs: a } = x else {
            return Err(Error::DivisionByZero);
        };
        let b0 = self.gf.inv(a[0]).ok_or(Error::DivisionByZero)?;
        let mut b = vec![b0];
        for k in 1..=self.gamma {
            let s = (1..=k).fold(0, |acc, i| self.gf.add(acc, self.gf.mul(a[i], b[k - i])));
            b.push(self.gf.neg(self.gf.mul(b0, s)));
        }
        Ok(LtElem::new(-value, b))
    }

    /// All elements of value `value` whose coefficients start with `forced`,
    /// the remaining ones free; a ball when there are too many.
    fn with_free_tail(&self, value: i64, forced: Vec<u32>) -> HyperSet<LtElem> {
        let free = self.gamma + 1 - forced.len();
        let count = (self.q() as usize).checked_pow(free as u32).unwrap_or(usize::MAX);
        if count > MATERIALIZE_CAP {
            let mut center = forced;
            center.resize(self.gamma + 1, 0);
            let radius = Cut::at_most(&GroupElem::scalar(value + self.gamma as i64 - free as i64));
            return HyperSet::Ball { center: LtElem::new(value, center), radius };
        }
        let mut out = vec![forced];
        for _ in 0..free {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..self.q() as u32).map(move |d| {
                        let mut c = c.clone();
                        c.push(d);
                        c
                    })
                })
                .collect();
        }
        HyperSet::from_vec(out.into_iter().map(|c| LtElem::new(value, c)).collect())
    }

    pub fn lt_add(&self, x: &LtElem, y: &LtElem) -> HyperSet<LtElem> {
        let (x, y) = match (x, y) {
            (LtElem::Zero, _) => return HyperSet::singleton(y.clone()),
            (_, LtElem::Zero) => return HyperSet::singleton(x.clone()),
            _ if x.value() <= y.value() => (x, y),
            _ => (y, x),
        };
        let (vx, xs) = (x.value().unwrap(), x.coeffs());
        let ys = y.coeffs();
        let d = (y.value().unwrap() - vx) as usize;
        if d > self.gamma {
            return HyperSet::singleton(x.clone());
        }
        let mut s = xs.to_vec();
        for i in d..=self.gamma {
            s[i] = self.gf.add(s[i], ys[i - d]);
        }
        match s.iter().position(|&c| c != 0) {
            None => HyperSet::above(Cut::at_most(&GroupElem::scalar(vx + self.gamma as i64))),
            Some(0) => HyperSet::singleton(LtElem::new(vx, s)),
            Some(k) => self.with_free_tail(vx + k as i64, s[k..].to_vec()),
        }
    }

    /// Elements with value in `[-bound, bound]`, and zero, ordered by value.
    pub fn enumerate_window(&self, bound: i64) -> Result<Vec<LtElem>> {
        let q = self.q() as usize;
        let per_value = (q - 1).saturating_mul(q.saturating_pow(self.gamma as u32));
        let total = per_value.saturating_mul((2 * bound + 1) as usize).saturating_add(1);
        if total > MAX_WINDOW {
            return Err(Error::WindowTooLarge(format!("{total} elements (limit {MAX_WINDOW})")));
        }
        let mut tails: Vec<Vec<u32>> = (1..q as u32).map(|c| vec![c]).collect();
        for _ in 0..self.gamma {
            tails = tails
                .into_iter()
                .flat_map(|c| {
                    (0..q as u32).map(move |d| {
                        let mut c = c.clone();
                        c.push(d);
                        c
                    })
                })
                .collect();
        }
        let mut out = vec![LtElem::Zero];
        for v in -bound..=bound {
            out.extend(tails.iter().map(|c| LtElem::new(v, c.clone())));
        }
        Ok(out)
    }
}

impl Hyperfield for LtContext {
    type Elem = LtElem;

    fn name(&self) -> String {
        format!("K_{}(F_{})", self.gamma, self.q())
    }

    fn value_rank(&self) -> usize {
        1
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn zero(&self) -> LtElem {
        LtElem::Zero
    }

    fn one(&self) -> LtElem {
        let mut c = vec![0; self.gamma + 1];
        c[0] = 1;
        LtElem::new(0, c)
    }

    fn mul(&self, x: &LtElem, y: &LtElem) -> LtElem {
        self.lt_mul(x, y)
    }

    fn neg(&self, x: &LtElem) -> LtElem {
        self.lt_neg(x)
    }

    fn inv(&self, x: &LtElem) -> Option<LtElem> {
        self.lt_inv(x).ok()
    }

    fn add(&self, x: &LtElem, y: &LtElem) -> HyperSet<LtElem> {
        self.lt_add(x, y)
    }

    fn value(&self, x: &LtElem) -> Value {
        match x.value() {
            None => Value::Inf,
            Some(v) => Value::scalar(v),
        }
    }

    fn add_above(&self, cut: &Cut, z: &LtElem) -> Option<HyperSet<LtElem>> {
        let Some(vz) = z.value() else {
            return Some(HyperSet::above(cut.clone()));
        };
        if cut.is_total() {
            return Some(HyperSet::singleton(z.clone()));
        }
        if !cut.contains_value(&self.value(z)) {
            return Some(HyperSet::above(cut.clone()));
        }
        // Summands have value above b ≥ vz: they perturb z beyond relative index b - vz.
        let b = cut.bound()[0];
        let fixed = (b - vz) as usize;
        if fixed >= self.gamma {
            return Some(HyperSet::singleton(z.clone()));
        }
        Some(self.with_free_tail(vz, z.coeffs()[..=fixed].to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: u64, gamma: usize) -> LtContext {
        LtContext::new(q, None, gamma).unwrap()
    }

    fn e(v: i64, c: &[u32]) -> LtElem {
        LtElem::new(v, c.to_vec())
    }

    #[test]
    fn arithmetic_examples() {
        let k = ctx(3, 1);
        assert_eq!(k.lt_mul(&e(0, &[1, 1]), &e(1, &[2, 0])), e(1, &[2, 2]));
        assert_eq!(k.lt_neg(&e(0, &[1, 2])), e(0, &[2, 1]));
        let x = e(3, &[2, 1]);
        assert_eq!(k.lt_mul(&x, &k.lt_inv(&x).unwrap()), k.one());
        assert_eq!(k.lt_inv(&LtElem::Zero), Err(Error::DivisionByZero));
    }

    #[test]
    fn sum_examples() {
        let k = ctx(3, 1);
        assert_eq!(k.lt_add(&e(0, &[1, 1]), &e(1, &[1, 0])), HyperSet::singleton(e(0, &[1, 2])));
        let s = k.lt_add(&e(0, &[1, 2]), &e(0, &[2, 0]));
        assert_eq!(s, HyperSet::from_vec((0..3).map(|c| e(1, &[2, c])).collect()));
        let x = e(0, &[1, 2]);
        assert_eq!(k.lt_add(&x, &k.lt_neg(&x)), HyperSet::above(Cut::at_most(&GroupElem::scalar(1))));
    }

    #[test]
    fn large_sums_become_balls() {
        let k = ctx(5, 6);
        let x = e(0, &[1, 0, 0, 0, 0, 0, 1]);
        let y = e(0, &[4, 0, 0, 0, 0, 0, 0]);
        let s = k.lt_add(&x, &y);
        assert!(matches!(s, HyperSet::Ball { .. }), "{s}");
        assert!(crate::backend::contains(&k, &s, &e(6, &[1, 3, 3, 3, 3, 3, 3])));
        assert!(!crate::backend::contains(&k, &s, &e(6, &[2, 3, 3, 3, 3, 3, 3])));
    }

    #[test]
    fn windows() {
        assert_eq!(ctx(2, 0).enumerate_window(1).unwrap().len(), 4);
        assert_eq!(ctx(3, 1).enumerate_window(0).unwrap().len(), 7);
        assert!(matches!(ctx(5, 6).enumerate_window(5), Err(Error::WindowTooLarge(_))));
    }

    #[test]
    fn serde_forms() {
        assert_eq!(serde_json::to_string(&LtElem::Zero).unwrap(), "null");
        let x = e(-1, &[1, 2]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"value":-1,"coeffs":[1,2]}"#);
        assert_eq!(serde_json::from_str::<LtElem>(&s).unwrap(), x);
        let k = ctx(9, 2);
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(s, r#"{"q":9,"modulus":[1,0,1],"gamma":2}"#);
        assert_eq!(serde_json::from_str::<LtContext>(&s).unwrap(), k);
    }
}
