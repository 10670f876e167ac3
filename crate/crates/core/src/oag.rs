//! Ordered abelian groups `Z^n` under the lexicographic order.
//!
//! Besides group elements this module models the two kinds of subsets the
//! valuation machinery needs: convex subgroups (always of the suffix form
//! `{0}^k × Z^(n-k)`) and initial segments ("cuts") bounded by a prefix.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `Z^n`; arithmetic is componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElem(pub Vec<i64>);

impl GroupElem {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        GroupElem(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        GroupElem(vec![0; rank])
    }

    /// Rank-one shorthand.
    pub fn scalar(v: i64) -> Self {
        GroupElem(vec![v])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &GroupElem) -> GroupElem {
        debug_assert_eq!(self.rank(), other.rank());
        GroupElem(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &GroupElem) -> GroupElem {
        debug_assert_eq!(self.rank(), other.rank());
        GroupElem(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> GroupElem {
        GroupElem(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, factor: i64) -> GroupElem {
        GroupElem(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn prefix(&self, k: usize) -> GroupElem {
        GroupElem(self.0[..k].to_vec())
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison: the first differing coordinate decides.
pub fn lex_compare(a: &GroupElem, b: &GroupElem) -> Result<Ordering> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { expected: a.rank(), got: b.rank() });
    }
    Ok(a.0.cmp(&b.0))
}

/// A value in `Γ ∪ {∞}`, with `∞` above every group element.
///
/// Serializes as `null` for `∞` and as an integer array otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Option<GroupElem>", into = "Option<GroupElem>")]
pub enum Value {
    Fin(GroupElem),
    Inf,
}

impl From<Option<GroupElem>> for Value {
    fn from(v: Option<GroupElem>) -> Self {
        match v {
            Some(g) => Value::Fin(g),
            None => Value::Inf,
        }
    }
}

impl From<Value> for Option<GroupElem> {
    fn from(v: Value) -> Self {
        match v {
            Value::Fin(g) => Some(g),
            Value::Inf => None,
        }
    }
}

impl From<GroupElem> for Value {
    fn from(g: GroupElem) -> Self {
        Value::Fin(g)
    }
}

impl Value {
    pub fn scalar(v: i64) -> Self {
        Value::Fin(GroupElem::scalar(v))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Value::Inf)
    }

    pub fn finite(&self) -> Option<&GroupElem> {
        match self {
            Value::Fin(g) => Some(g),
            Value::Inf => None,
        }
    }

    /// Group addition extended by `∞ + γ = ∞`.
    pub fn add(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Fin(a), Value::Fin(b)) => Value::Fin(a.add(b)),
            _ => Value::Inf,
        }
    }

    pub fn min<'a>(&'a self, other: &'a Value) -> &'a Value {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Fin(g) => write!(f, "{g}"),
            Value::Inf => write!(f, "∞"),
        }
    }
}

/// The convex subgroup `{0}^k × Z^(n-k)` of `Z^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConvexSubgroup {
    pub rank: usize,
    pub suffix_index: usize,
}

impl ConvexSubgroup {
    pub fn new(rank: usize, suffix_index: usize) -> Result<Self> {
        if suffix_index > rank {
            return Err(Error::RankMismatch { expected: rank, got: suffix_index });
        }
        Ok(ConvexSubgroup { rank, suffix_index })
    }

    pub fn trivial(rank: usize) -> Self {
        ConvexSubgroup { rank, suffix_index: rank }
    }

    pub fn whole(rank: usize) -> Self {
        ConvexSubgroup { rank, suffix_index: 0 }
    }

    /// All convex subgroups of `Z^n`, from the whole group down to `{0}`.
    pub fn all(rank: usize) -> Vec<ConvexSubgroup> {
        (0..=rank).map(|k| ConvexSubgroup { rank, suffix_index: k }).collect()
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        g.0[..self.suffix_index].iter().all(|&c| c == 0)
    }

    /// `Δ1 ⊆ Δ2`; suffix subgroups are nested, so this is a linear order.
    pub fn is_subgroup_of(&self, other: &ConvexSubgroup) -> bool {
        self.suffix_index >= other.suffix_index
    }

    /// Rank of the quotient `Γ/Δ`.
    pub fn quotient_rank(&self) -> usize {
        self.suffix_index
    }

    /// `γ > Δ`: γ lies outside Δ and above it.
    pub fn is_above(&self, g: &GroupElem) -> bool {
        g.0[..self.suffix_index].iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }
}

/// Canonical projection `Γ → Γ/Δ`, realized as truncation to the first `k`
/// coordinates. The projection is order preserving.
pub fn quotient_by_convex(g: &GroupElem, delta: &ConvexSubgroup) -> GroupElem {
    g.prefix(delta.suffix_index)
}

/// Extends the projection to `Γ ∪ {∞}`.
pub fn quotient_value(v: &Value, delta: &ConvexSubgroup) -> Value {
    match v {
        Value::Fin(g) => Value::Fin(quotient_by_convex(g, delta)),
        Value::Inf => Value::Inf,
    }
}

#[derive(Serialize, Deserialize)]
struct CutRepr {
    prefix_len: usize,
    bound: Vec<i64>,
    inclusive: bool,
}

/// A prefix-bounded initial segment of `Z^n`:
/// `{ m | prefix_k(m) < bound } ∪ { m | inclusive ∧ prefix_k(m) = bound }`.
///
/// Cuts are normalized on construction: because `Z^k` is discrete under the
/// lex order, `prefix_k(m) < b` is the same as `prefix_k(m) ≤ b - e_k`, so
/// every non-empty cut is stored inclusive. The empty segment is the only cut
/// with `inclusive == false`; `prefix_len == 0 ∧ inclusive` is all of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CutRepr", into = "CutRepr")]
pub struct Cut {
    prefix_len: usize,
    bound: Vec<i64>,
    inclusive: bool,
}

impl TryFrom<CutRepr> for Cut {
    type Error = Error;

    fn try_from(r: CutRepr) -> Result<Self> {
        Cut::new(r.prefix_len, r.bound, r.inclusive)
    }
}

impl From<Cut> for CutRepr {
    fn from(c: Cut) -> Self {
        CutRepr { prefix_len: c.prefix_len, bound: c.bound, inclusive: c.inclusive }
    }
}

impl Cut {
    pub fn new(prefix_len: usize, mut bound: Vec<i64>, inclusive: bool) -> Result<Self> {
        if bound.len() != prefix_len {
            return Err(Error::RankMismatch { expected: prefix_len, got: bound.len() });
        }
        if prefix_len == 0 {
            return Ok(Cut { prefix_len, bound, inclusive });
        }
        if !inclusive {
            bound[prefix_len - 1] -= 1;
        }
        Ok(Cut { prefix_len, bound, inclusive: true })
    }

    pub fn total() -> Self {
        Cut { prefix_len: 0, bound: vec![], inclusive: true }
    }

    pub fn empty() -> Self {
        Cut { prefix_len: 0, bound: vec![], inclusive: false }
    }

    /// `{ δ | δ ≤ γ }`.
    pub fn at_most(g: &GroupElem) -> Self {
        Cut { prefix_len: g.rank(), bound: g.0.clone(), inclusive: true }
    }

    /// `{ δ | δ < γ }`.
    pub fn below(g: &GroupElem) -> Self {
        Cut::new(g.rank(), g.0.clone(), false).expect("rank matches")
    }

    /// `{ m | prefix_k(m) ≤ bound }`.
    pub fn prefix_at_most(bound: Vec<i64>) -> Self {
        Cut { prefix_len: bound.len(), inclusive: true, bound }
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn bound(&self) -> &[i64] {
        &self.bound
    }

    pub fn inclusive(&self) -> bool {
        self.inclusive
    }

    pub fn is_total(&self) -> bool {
        self.prefix_len == 0 && self.inclusive
    }

    pub fn is_empty(&self) -> bool {
        self.prefix_len == 0 && !self.inclusive
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        if self.prefix_len == 0 {
            return self.inclusive;
        }
        g.0[..self.prefix_len] <= self.bound[..]
    }

    /// Rank-checked membership.
    pub fn cut_contains(&self, g: &GroupElem) -> Result<bool> {
        if g.rank() < self.prefix_len {
            return Err(Error::RankMismatch { expected: self.prefix_len, got: g.rank() });
        }
        Ok(self.contains(g))
    }

    /// Membership for `Γ ∪ {∞}`; `∞` lies above every cut.
    pub fn contains_value(&self, v: &Value) -> bool {
        match v {
            Value::Fin(g) => self.contains(g),
            Value::Inf => false,
        }
    }

    /// `γ > ρ`, i.e. γ ∉ ρ.
    pub fn is_below(&self, v: &Value) -> bool {
        !self.contains_value(v)
    }

    /// `ρ + γ`.
    pub fn shift(&self, g: &GroupElem) -> Cut {
        if self.prefix_len == 0 {
            return self.clone();
        }
        let bound = self.bound.iter().zip(&g.0).map(|(b, c)| b + c).collect();
        Cut { prefix_len: self.prefix_len, bound, inclusive: true }
    }

    /// `ρ + v`; shifting by `∞` leaves only `∞` above the result.
    pub fn shift_value(&self, v: &Value) -> Cut {
        match v {
            Value::Fin(g) => self.shift(g),
            Value::Inf => {
                if self.is_empty() {
                    self.clone()
                } else {
                    Cut::total()
                }
            }
        }
    }

    /// Inclusion of initial segments.
    pub fn is_subset(&self, other: &Cut) -> bool {
        if self.is_empty() || other.is_total() {
            return true;
        }
        if other.is_empty() || self.is_total() {
            return false;
        }
        let (k1, k2) = (self.prefix_len, other.prefix_len);
        if k1 >= k2 {
            self.bound[..k2] <= other.bound[..]
        } else {
            self.bound[..] < other.bound[..k1]
        }
    }

    pub fn is_proper_subset(&self, other: &Cut) -> bool {
        self.is_subset(other) && self != other
    }

    /// The invariance group `{ γ | ρ + γ = ρ }`.
    pub fn invariance_group(&self, rank: usize) -> ConvexSubgroup {
        ConvexSubgroup { rank, suffix_index: self.prefix_len }
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_total() {
            return write!(f, "Γ");
        }
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{m | m[..{}] ≤ {:?}}}", self.prefix_len, self.bound)
    }
}

pub fn cut_contains(rho: &Cut, g: &GroupElem) -> Result<bool> {
    rho.cut_contains(g)
}

pub fn cut_shift(rho: &Cut, g: &GroupElem) -> Cut {
    rho.shift(g)
}

pub fn invariance_group(rho: &Cut, rank: usize) -> ConvexSubgroup {
    rho.invariance_group(rank)
}

/// All elements of the box `[-bound, bound]^rank`, in lex order.
pub fn box_window(rank: usize, bound: i64) -> Vec<GroupElem> {
    let mut out = vec![GroupElem(Vec::with_capacity(rank))];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|g| {
                (-bound..=bound).map(move |c| {
                    let mut v = g.0.clone();
                    v.push(c);
                    GroupElem(v)
                })
            })
            .collect();
    }
    out
}
