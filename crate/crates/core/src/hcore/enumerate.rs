//! Exhaustive enumeration of small hyperfields up to isomorphism.
//!
//! By distributivity `x + y = x(1 + x⁻¹y)`, so a hyperfield is determined
//! by its unit group and the row `h(a) = 1 + a`. Commutativity forces
//! `h(a⁻¹) = a⁻¹h(a)`, so only one row per pair `{a, a⁻¹}` is free.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hcore::gf::prime_power;
use crate::hcore::morphism::are_isomorphic;
use crate::hcore::table::{bit, bits, FiniteHyperfield, Mask};
use crate::hcore::validate::validate;

pub const DEFAULT_ORDER_CAP: usize = 6;

/// Which unit groups to enumerate over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    /// Every abelian group of the right order.
    All,
    /// `C_{n1} × C_{n2} × …`.
    Product(Vec<usize>),
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(GroupDescriptor::All);
        }
        let factors = s
            .split('x')
            .map(|c| c.trim().strip_prefix('C').and_then(|n| n.parse().ok()).filter(|&n| n >= 1))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::Parse(format!("group descriptor `{s}`: expected `all` or e.g. `C2xC2`")))?;
        Ok(GroupDescriptor::Product(factors))
    }
}

/// Invariant-factor decompositions of the abelian groups of order `m`.
pub fn abelian_group_types(m: usize) -> Vec<Vec<usize>> {
    fn partitions(e: u32, max: u32) -> Vec<Vec<u32>> {
        if e == 0 {
            return vec![vec![]];
        }
        (1..=e.min(max))
            .rev()
            .flat_map(|first| {
                partitions(e - first, first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let mut primes = Vec::new();
    let mut r = m;
    let mut d = 2;
    while r > 1 {
        if r.is_multiple_of(d) {
            let mut e = 0;
            while r.is_multiple_of(d) {
                r /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += 1;
    }
    let mut types: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in primes {
        let mut next = Vec::new();
        for t in &types {
            for part in partitions(e, e) {
                // Merge prime-power factors into invariant factors, largest first.
                let mut f = t.clone();
                for (i, &k) in part.iter().enumerate() {
                    let pk = p.pow(k);
                    if i < f.len() {
                        f[i] *= pk;
                    } else {
                        f.push(pk);
                    }
                }
                next.push(f);
            }
        }
        types = next;
    }
    for t in &mut types {
        t.sort();
        if t.is_empty() {
            t.push(1);
        }
    }
    types.sort();
    types
}

/// Multiplication table of `C_{n1} × …`, element `0` the identity.
fn product_group(factors: &[usize]) -> Vec<Vec<usize>> {
    let m: usize = factors.iter().product();
    let decode = |mut x: usize| -> Vec<usize> {
        factors
            .iter()
            .map(|&f| {
                let d = x % f;
                x /= f;
                d
            })
            .collect()
    };
    let encode = |v: &[usize]| v.iter().zip(factors).rev().fold(0, |acc, (&d, &f)| acc * f + d);
    (0..m)
        .map(|a| {
            let da = decode(a);
            (0..m)
                .map(|b| {
                    let s: Vec<usize> = decode(b).iter().zip(&da).zip(factors).map(|((x, y), f)| (x + y) % f).collect();
                    encode(&s)
                })
                .collect()
        })
        .collect()
}

fn group_label(factors: &[usize]) -> String {
    factors.iter().map(|f| format!("C{f}")).collect::<Vec<_>>().join("x")
}

/// Hyperfields with unit group `C_{n1} × …`, deduplicated up to isomorphism.
fn enumerate_for_group(factors: &[usize]) -> Vec<FiniteHyperfield> {
    let g = product_group(factors);
    let m = g.len();
    let n = m + 1;
    // Hyperfield index of group element a is a + 1.
    let mut mul = vec![vec![0; n]; n];
    for a in 0..m {
        for b in 0..m {
            mul[a + 1][b + 1] = g[a][b] + 1;
        }
    }
    let inv: Vec<usize> = (0..n).map(|x| if x == 0 { 0 } else { (1..n).find(|&y| mul[x][y] == 1).unwrap() }).collect();
    let scale = |s: Mask, x: usize| bits(s).fold(0 as Mask, |acc, i| acc | bit(mul[x][i]));
    let free: Vec<usize> = (1..n).filter(|&a| a <= inv[a]).collect();
    let names: Vec<String> = std::iter::once("0".to_string()).chain((0..m).map(|a| format!("g{a}"))).collect();

    let mut found: Vec<FiniteHyperfield> = Vec::new();
    for neg1 in (1..n).filter(|&u| mul[u][u] == 1) {
        // Options per free row: subsets containing 0 exactly when a = -1.
        let options: Vec<Vec<Mask>> = free
            .iter()
            .map(|&a| {
                (0..(1u128 << n))
                    .filter(|&s| s != 0 && ((s & 1 != 0) == (a == neg1)))
                    .filter(|&s| a != inv[a] || scale(s, a) == s)
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; free.len()];
        'outer: loop {
            let mut h = vec![0 as Mask; n];
            h[0] = bit(1);
            for (i, &a) in free.iter().enumerate() {
                h[a] = options[i][choice[i]];
                h[inv[a]] = scale(h[a], inv[a]);
            }
            let mut add = vec![vec![0 as Mask; n]; n];
            for (y, cell) in add[0].iter_mut().enumerate() {
                *cell = bit(y);
            }
            for x in 1..n {
                for y in 0..n {
                    add[x][y] = scale(h[mul[inv[x]][y]], x);
                }
            }
            let f = FiniteHyperfield::from_masks(names.clone(), mul.clone(), add);
            if validate(&f).passed() && !found.iter().any(|e| are_isomorphic(e, &f)) {
                found.push(f);
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    break 'outer;
                }
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
    found
}

/// All hyperfields of the given order, up to isomorphism, with unit groups
/// matching `group`. Orders above `cap` are refused.
pub fn enumerate_hyperfields(order: usize, group: &GroupDescriptor, cap: usize) -> Result<Vec<FiniteHyperfield>> {
    if order > cap {
        return Err(Error::OrderAboveCap { order, cap });
    }
    if order < 2 {
        return Ok(Vec::new());
    }
    let types = match group {
        GroupDescriptor::All => abelian_group_types(order - 1),
        GroupDescriptor::Product(f) => {
            if f.iter().product::<usize>() != order - 1 {
                return Err(Error::Parse(format!("{} does not have order {}", group_label(f), order - 1)));
            }
            vec![f.clone()]
        }
    };
    let mut out = Vec::new();
    for t in types {
        for f in enumerate_for_group(&t) {
            let idx = out.len();
            out.push(f.with_meta("name", format!("H{order}.{idx}")).with_meta("unit_group", group_label(&t)));
        }
    }
    Ok(out)
}

/// Whether `q` is the order of a finite field; used to label enumerated fields.
pub fn is_field_order(q: usize) -> bool {
    prime_power(q as u64).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::classify::is_field;
    use crate::hcore::gf::build_finite_field;
    use crate::hcore::table::{build_k, build_s, build_w};

    #[test]
    fn group_types() {
        assert_eq!(abelian_group_types(4), vec![vec![2, 2], vec![4]]);
        assert_eq!(abelian_group_types(1), vec![vec![1]]);
        assert_eq!(abelian_group_types(12), vec![vec![2, 6], vec![12]]);
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!("C2xC2".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::Product(vec![2, 2]));
        assert!("Z4".parse::<GroupDescriptor>().is_err());
    }

    #[test]
    fn order_two_is_f2_and_k() {
        let hs = enumerate_hyperfields(2, &GroupDescriptor::All, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().any(|h| are_isomorphic(h, &build_k())));
        assert!(hs.iter().any(|h| are_isomorphic(h, &build_finite_field(2, None).unwrap())));
    }

    #[test]
    fn order_three_contains_s_and_w() {
        let hs = enumerate_hyperfields(3, &"C2".parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        assert!(hs.iter().any(|h| are_isomorphic(h, &build_s())));
        assert!(hs.iter().any(|h| are_isomorphic(h, &build_w())));
        assert_eq!(hs.iter().filter(|h| is_field(h)).count(), 1);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            enumerate_hyperfields(7, &GroupDescriptor::All, DEFAULT_ORDER_CAP),
            Err(Error::OrderAboveCap { order: 7, cap: 6 })
        ));
    }
}
