use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value as Json};

use crate::backend::Hyperfield;
use crate::error::{Error, Result};
use crate::hyperset::HyperSet;
use crate::oag::{GroupElem, Value};

/// A subset of a carrier of at most 128 elements.
pub type Mask = u128;

pub const MAX_SIZE: usize = 128;

pub fn bit(i: usize) -> Mask {
    1u128 << i
}

/// Indices set in `m`, ascending.
pub fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

pub fn mask_of(elems: &[usize]) -> Mask {
    elems.iter().fold(0, |m, &i| m | bit(i))
}

/// A finite hyperfield given by its tables. Element `0` is the additive
/// neutral element and element `1` the multiplicative identity.
///
/// Tables are only checked for well-formedness on construction; axiom
/// failures are left to [`crate::hcore::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableFile", into = "TableFile")]
pub struct FiniteHyperfield {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    add: Vec<Vec<Mask>>,
    neg: Vec<usize>,
    inv: Vec<Option<usize>>,
    meta: Map<String, Json>,
}

/// On-disk layout: add cells are sorted index arrays.
#[derive(Serialize, Deserialize)]
struct TableFile {
    size: usize,
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    add: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    meta: Map<String, Json>,
}

impl TryFrom<TableFile> for FiniteHyperfield {
    type Error = Error;

    fn try_from(t: TableFile) -> Result<Self> {
        if t.names.len() != t.size {
            return Err(Error::MalformedTable(format!("{} names for size {}", t.names.len(), t.size)));
        }
        let mut f = FiniteHyperfield::from_tables(t.names, t.mul, t.add)?;
        f.meta = t.meta;
        Ok(f)
    }
}

impl From<FiniteHyperfield> for TableFile {
    fn from(f: FiniteHyperfield) -> Self {
        let add = (0..f.size()).map(|x| (0..f.size()).map(|y| f.sum(x, y)).collect()).collect();
        TableFile { size: f.size(), names: f.names, mul: f.mul, add, meta: f.meta }
    }
}

impl FiniteHyperfield {
    pub fn from_tables(names: Vec<String>, mul: Vec<Vec<usize>>, add: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let n = names.len();
        if n > MAX_SIZE {
            return Err(Error::TooLarge(n, MAX_SIZE));
        }
        if n < 2 {
            return Err(Error::MalformedTable("a hyperfield has at least two elements".into()));
        }
        let square = |rows: usize, cols: &[usize]| rows == n && cols.iter().all(|&c| c == n);
        if !square(mul.len(), &mul.iter().map(Vec::len).collect::<Vec<_>>()) {
            return Err(Error::MalformedTable("mul must be an n×n table".into()));
        }
        if !square(add.len(), &add.iter().map(Vec::len).collect::<Vec<_>>()) {
            return Err(Error::MalformedTable("add must be an n×n table".into()));
        }
        if let Some(&bad) = mul.iter().flatten().find(|&&i| i >= n) {
            return Err(Error::MalformedTable(format!("mul entry {bad} out of range")));
        }
        let mut masks = vec![vec![0; n]; n];
        for (x, row) in add.iter().enumerate() {
            for (y, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return Err(Error::MalformedTable(format!("add cell ({x}, {y}) is empty")));
                }
                if let Some(&bad) = cell.iter().find(|&&i| i >= n) {
                    return Err(Error::MalformedTable(format!("add entry {bad} out of range")));
                }
                masks[x][y] = mask_of(cell);
            }
        }
        Ok(Self::from_masks(names, mul, masks))
    }

    /// Builds from well-formed mask tables; derives `neg` and `inv`.
    pub(crate) fn from_masks(names: Vec<String>, mul: Vec<Vec<usize>>, add: Vec<Vec<Mask>>) -> Self {
        let n = names.len();
        // A table violating CH3 keeps some candidate; the validator reports it.
        let neg = (0..n).map(|x| (0..n).find(|&y| add[x][y] & 1 != 0).unwrap_or(x)).collect();
        let inv = (0..n).map(|x| (0..n).find(|&y| mul[x][y] == 1)).collect();
        FiniteHyperfield { names, mul, add, neg, inv, meta: Map::new() }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn meta(&self) -> &Map<String, Json> {
        &self.meta
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<Json>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn times(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn add_mask(&self, x: usize, y: usize) -> Mask {
        self.add[x][y]
    }

    /// `x + y` as a sorted index list.
    pub fn sum(&self, x: usize, y: usize) -> Vec<usize> {
        bits(self.add[x][y]).collect()
    }

    pub fn negate(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inv[x]
    }

    /// `x - y`.
    pub fn diff_mask(&self, x: usize, y: usize) -> Mask {
        self.add[x][self.neg[y]]
    }

    pub fn full_mask(&self) -> Mask {
        if self.size() == 128 {
            !0
        } else {
            bit(self.size()) - 1
        }
    }

    /// `A + z`.
    pub fn mask_plus(&self, a: Mask, z: usize) -> Mask {
        bits(a).fold(0, |m, s| m | self.add[s][z])
    }

    /// `A + B`.
    pub fn mask_sum(&self, a: Mask, b: Mask) -> Mask {
        bits(b).fold(0, |m, z| m | self.mask_plus(a, z))
    }

    /// `xA`.
    pub fn mask_scale(&self, a: Mask, x: usize) -> Mask {
        bits(a).fold(0, |m, s| m | bit(self.mul[x][s]))
    }

    pub fn mask_names(&self, m: Mask) -> String {
        let names: Vec<&str> = bits(m).map(|i| self.name_of(i)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Nonzero elements.
    pub fn units(&self) -> impl Iterator<Item = usize> {
        1..self.size()
    }

    /// Relabels elements: element `i` of `self` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteHyperfield {
        let n = self.size();
        let mut names = vec![String::new(); n];
        let mut mul = vec![vec![0; n]; n];
        let mut add = vec![vec![0; n]; n];
        for x in 0..n {
            names[perm[x]] = self.names[x].clone();
            for y in 0..n {
                mul[perm[x]][perm[y]] = perm[self.mul[x][y]];
                add[perm[x]][perm[y]] = bits(self.add[x][y]).fold(0, |m, z| m | bit(perm[z]));
            }
        }
        let mut out = Self::from_masks(names, mul, add);
        out.meta = self.meta.clone();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for FiniteHyperfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        writeln!(f, "{} (order {n})", Hyperfield::name(self))?;
        for x in 0..n {
            for y in x..n {
                writeln!(f, "  {} + {} = {}", self.names[x], self.names[y], self.mask_names(self.add[x][y]))?;
            }
        }
        Ok(())
    }
}

impl Hyperfield for FiniteHyperfield {
    type Elem = usize;

    fn name(&self) -> String {
        match self.meta.get("name") {
            Some(Json::String(s)) => s.clone(),
            _ => format!("finite hyperfield of order {}", self.size()),
        }
    }

    fn value_rank(&self) -> usize {
        0
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn zero(&self) -> usize {
        0
    }

    fn one(&self) -> usize {
        1
    }

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.mul[*x][*y]
    }

    fn neg(&self, x: &usize) -> usize {
        self.neg[*x]
    }

    fn inv(&self, x: &usize) -> Option<usize> {
        self.inv[*x]
    }

    fn add(&self, x: &usize, y: &usize) -> HyperSet<usize> {
        HyperSet::from_vec(self.sum(*x, *y))
    }

    /// The trivial valuation.
    fn value(&self, x: &usize) -> Value {
        if *x == 0 {
            Value::Inf
        } else {
            Value::Fin(GroupElem::zero(0))
        }
    }
}

fn sign_tables(plus_plus: Vec<usize>) -> FiniteHyperfield {
    // Elements 0, 1, -1 at indices 0, 1, 2.
    let names = vec!["0".into(), "1".into(), "-1".into()];
    let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
    let all = vec![0, 1, 2];
    let minus_minus: Vec<usize> = plus_plus.iter().map(|&i| [0, 2, 1][i]).collect();
    let add = vec![
        vec![vec![0], vec![1], vec![2]],
        vec![vec![1], plus_plus, all.clone()],
        vec![vec![2], all, minus_minus],
    ];
    FiniteHyperfield::from_tables(names, mul, add).expect("well-formed")
}

/// The hyperfield `{0, 1}` with `1 + 1 = {0, 1}`.
pub fn build_k() -> FiniteHyperfield {
    let names = vec!["0".into(), "1".into()];
    let mul = vec![vec![0, 0], vec![0, 1]];
    let add = vec![vec![vec![0], vec![1]], vec![vec![1], vec![0, 1]]];
    FiniteHyperfield::from_tables(names, mul, add).expect("well-formed").with_meta("name", "K")
}

/// The sign hyperfield: `x + x = {x}`, `1 - 1 = {-1, 0, 1}`.
pub fn build_s() -> FiniteHyperfield {
    sign_tables(vec![1]).with_meta("name", "S")
}

/// The weak sign hyperfield: `x + x = {x, -x}`, `1 - 1 = {-1, 0, 1}`.
pub fn build_w() -> FiniteHyperfield {
    sign_tables(vec![1, 2]).with_meta("name", "W")
}
