//! The leading-term hyperfield of `Q(X)` under the composite valuation
//! `w = v_p ∘ v_X`, with value group `Z × Z` (lex) and norm `ρ = {m₁ ≤ 0}`.
//!
//! An element is the coset of `X^n · c`: modulo `1 + M^ρ` only the leading
//! `X`-adic coefficient survives, exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::backend::Hyperfield;
use crate::error::{Error, Result};
use crate::hcore::gf::is_prime;
use crate::hyperset::HyperSet;
use crate::oag::{Cut, GroupElem, Value};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompElem {
    Zero,
    /// `X^n · c`, `c ≠ 0` in lowest terms.
    Nonzero { n: i64, c: BigRational },
}

#[derive(Serialize, Deserialize)]
struct CompElemRepr {
    n: i64,
    c: String,
}

impl Serialize for CompElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CompElem::Zero => s.serialize_none(),
            CompElem::Nonzero { n, c } => s.serialize_some(&CompElemRepr {
                n: *n,
                c: format!("{}/{}", c.numer(), c.denom()),
            }),
        }
    }
}

impl<'de> Deserialize<'de> for CompElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Option::<CompElemRepr>::deserialize(d)? {
            None => Ok(CompElem::Zero),
            Some(r) => {
                let c = parse_rational(&r.c).map_err(serde::de::Error::custom)?;
                CompElem::new(r.n, c).map_err(serde::de::Error::custom)
            }
        }
    }
}

/// Parses `a/b` or `a`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a: BigInt = a.trim().parse().map_err(|_| bad())?;
    let b: BigInt = b.trim().parse().map_err(|_| bad())?;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(a, b))
}

impl fmt::Display for CompElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompElem::Zero => write!(f, "0"),
            CompElem::Nonzero { n, c } => write!(f, "({n},{c})"),
        }
    }
}

impl CompElem {
    pub fn new(n: i64, c: BigRational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CompElem::Nonzero { n, c })
    }

    /// Shorthand for `X^n · a/b`.
    pub fn ratio(n: i64, a: i64, b: i64) -> Self {
        CompElem::new(n, BigRational::new(a.into(), b.into())).expect("nonzero coefficient")
    }
}

/// `ord_p` of a nonzero rational.
pub fn ord_p(c: &BigRational, p: u64) -> i64 {
    let ord = |x: &BigInt| -> i64 {
        let p = BigInt::from(p);
        let mut x = x.abs();
        let mut k = 0;
        while x.is_multiple_of(&p) {
            x /= &p;
            k += 1;
        }
        k
    };
    ord(c.numer()) - ord(c.denom())
}

/// The composite backend for a prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CompositeRepr", into = "CompositeRepr")]
pub struct Composite {
    p: u64,
}

#[derive(Serialize, Deserialize)]
struct CompositeRepr {
    p: u64,
}

impl TryFrom<CompositeRepr> for Composite {
    type Error = Error;

    fn try_from(r: CompositeRepr) -> Result<Self> {
        Composite::new(r.p)
    }
}

impl From<Composite> for CompositeRepr {
    fn from(c: Composite) -> Self {
        CompositeRepr { p: c.p }
    }
}

impl Default for Composite {
    fn default() -> Self {
        Composite { p: 2 }
    }
}

impl Composite {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::ContextMismatch(format!("p = {p} is not prime")));
        }
        Ok(Composite { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `ρ = {(m₁, m₂) | m₁ ≤ 0}`.
    pub fn norm(&self) -> Cut {
        Cut::prefix_at_most(vec![0])
    }

    /// `w(x) = (n, ord_p c)`.
    pub fn w(&self, x: &CompElem) -> Value {
        match x {
            CompElem::Zero => Value::Inf,
            CompElem::Nonzero { n, c } => Value::Fin(GroupElem::new(vec![*n, ord_p(c, self.p)])),
        }
    }

    /// `n ∈ [-bound, bound]` and `c = a/b` with `0 < |a| ≤ coeff_bound`,
    /// `0 < b ≤ coeff_bound`, in lowest terms; zero first. Within each `n`,
    /// coefficients are ordered by height `max(|a|, b)`, positives first.
    pub fn enumerate_window(&self, bound: i64, coeff_bound: i64) -> Result<Vec<CompElem>> {
        let total = (2 * bound + 1) as u128 * (2 * coeff_bound * coeff_bound) as u128;
        if total > super::lt::MAX_WINDOW as u128 {
            return Err(Error::WindowTooLarge(format!("up to {total} elements")));
        }
        let mut ab: Vec<(i64, i64)> = Vec::new();
        for a in (-coeff_bound..=coeff_bound).filter(|&a| a != 0) {
            for b in 1..=coeff_bound {
                if a.gcd(&b) == 1 {
                    ab.push((a, b));
                }
            }
        }
        ab.sort_by_key(|&(a, b)| (a.abs().max(b), a < 0, a.abs(), b));
        let cs: Vec<BigRational> = ab.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect();
        let mut out = vec![CompElem::Zero];
        for n in -bound..=bound {
            out.extend(cs.iter().map(|c| CompElem::Nonzero { n, c: c.clone() }));
        }
        Ok(out)
    }
}

impl Hyperfield for Composite {
    type Elem = CompElem;

    fn name(&self) -> String {
        format!("Q(X)_rho (p={})", self.p)
    }

    fn value_rank(&self) -> usize {
        2
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn zero(&self) -> CompElem {
        CompElem::Zero
    }

    fn one(&self) -> CompElem {
        CompElem::Nonzero { n: 0, c: BigRational::one() }
    }

    fn mul(&self, x: &CompElem, y: &CompElem) -> CompElem {
        match (x, y) {
            (CompElem::Nonzero { n: a, c: x }, CompElem::Nonzero { n: b, c: y }) => {
                CompElem::Nonzero { n: a + b, c: x * y }
            }
            _ => CompElem::Zero,
        }
    }

    fn neg(&self, x: &CompElem) -> CompElem {
        match x {
            CompElem::Zero => CompElem::Zero,
            CompElem::Nonzero { n, c } => CompElem::Nonzero { n: *n, c: -c },
        }
    }

    fn inv(&self, x: &CompElem) -> Option<CompElem> {
        match x {
            CompElem::Zero => None,
            CompElem::Nonzero { n, c } => Some(CompElem::Nonzero { n: -n, c: c.recip() }),
        }
    }

    fn add(&self, x: &CompElem, y: &CompElem) -> HyperSet<CompElem> {
        match (x, y) {
            (CompElem::Zero, _) => HyperSet::singleton(y.clone()),
            (_, CompElem::Zero) => HyperSet::singleton(x.clone()),
            (CompElem::Nonzero { n: a, c: cx }, CompElem::Nonzero { n: b, c: cy }) => {
                if a < b {
                    HyperSet::singleton(x.clone())
                } else if b < a {
                    HyperSet::singleton(y.clone())
                } else {
                    let s = cx + cy;
                    if s.is_zero() {
                        // ρ + w(x) = {m₁ ≤ n}.
                        HyperSet::above(Cut::prefix_at_most(vec![*a]))
                    } else {
                        HyperSet::singleton(CompElem::Nonzero { n: *a, c: s })
                    }
                }
            }
        }
    }

    fn value(&self, x: &CompElem) -> Value {
        self.w(x)
    }

    fn add_above(&self, cut: &Cut, z: &CompElem) -> Option<HyperSet<CompElem>> {
        let CompElem::Nonzero { n, .. } = z else {
            return Some(HyperSet::above(cut.clone()));
        };
        if !cut.contains_value(&self.w(z)) {
            return Some(HyperSet::above(cut.clone()));
        }
        // A bound on the full value at z's own X-degree leaves infinitely many
        // distinct leading coefficients.
        if cut.prefix_len() == 2 && cut.bound()[0] == *n {
            return None;
        }
        Some(HyperSet::singleton(z.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::contains;

    #[test]
    fn values() {
        let f = Composite::default();
        assert_eq!(f.w(&CompElem::ratio(0, 1, 2)), Value::Fin(GroupElem::new(vec![0, -1])));
        assert_eq!(f.w(&CompElem::Zero), Value::Inf);
        assert_eq!(f.w(&CompElem::ratio(3, 12, 5)), Value::Fin(GroupElem::new(vec![3, 2])));
    }

    #[test]
    fn sums() {
        let f = Composite::default();
        let half = CompElem::ratio(0, 1, 2);
        let s = f.add(&half, &f.neg(&half));
        assert_eq!(s, HyperSet::above(Cut::prefix_at_most(vec![0])));
        assert!(contains(&f, &s, &CompElem::ratio(1, 7, 3)));
        assert!(!contains(&f, &s, &CompElem::ratio(0, 1, 1024)));
        assert_eq!(f.add(&CompElem::ratio(0, 3, 1), &CompElem::ratio(1, 5, 1)), HyperSet::singleton(CompElem::ratio(0, 3, 1)));
        assert_eq!(f.add(&CompElem::ratio(0, 1, 2), &CompElem::ratio(0, 1, 3)), HyperSet::singleton(CompElem::ratio(0, 5, 6)));
    }

    #[test]
    fn window_and_serde() {
        let f = Composite::default();
        assert_eq!(f.enumerate_window(3, 4).unwrap().len(), 155);
        let w = f.enumerate_window(1, 2).unwrap();
        let mut d = w.clone();
        d.dedup();
        assert_eq!(d.len(), w.len());
        let x = CompElem::ratio(-2, -3, 4);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":-2,"c":"-3/4"}"#);
        assert_eq!(serde_json::from_str::<CompElem>(&s).unwrap(), x);
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"p":2}"#);
        assert!(Composite::new(4).is_err());
    }
}
