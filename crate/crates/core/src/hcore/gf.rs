//! Finite fields `F_q`, `q = p^k`, as lookup tables.
//!
//! An element is encoded as the integer `Σ c_i p^i` of its coefficient
//! vector in `F_p[a]/(m(a))`, so `0` and `1` keep their usual codes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hcore::table::{bit, FiniteHyperfield, MAX_SIZE};

/// Largest field order for which tables are built.
pub const MAX_FIELD: u64 = 1024;

/// `Some((p, k))` if `q = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while a.len() > dm {
        let c = a.pop().unwrap() * lead_inv % p;
        let shift = a.len() - dm;
        for (i, &mi) in m[..dm].iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - c * mi % p) % p;
        }
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue")
}

fn digits(mut e: u64, p: u64, k: usize) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = e % p;
            e /= p;
            d
        })
        .collect()
}

fn encode(c: &[u64], p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Whether the monic polynomial `m` (coefficients low first) is irreducible
/// over `F_p`, by trial division with every monic polynomial of degree at
/// most half its degree.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut f = digits(low, p, d);
            f.push(1);
            if poly_rem(m.to_vec(), &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree `k` over `F_p` whose lower
/// coefficients have the smallest code.
pub fn default_modulus(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    (0..p.pow(k))
        .map(|low| {
            let mut m = digits(low, p, k as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    k: u32,
    modulus: Vec<u64>,
    add: Vec<Vec<u32>>,
    mul: Vec<Vec<u32>>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl GaloisField {
    /// `F_q` modulo `modulus` (coefficients low first, monic of degree `k`),
    /// or modulo [`default_modulus`] when none is given.
    pub fn new(q: u64, modulus: Option<&[u64]>) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD {
            return Err(Error::TooLarge(q as usize, MAX_FIELD as usize));
        }
        let modulus = match modulus {
            Some(m) => {
                let ok = m.len() == k as usize + 1
                    && m.iter().all(|&c| c < p)
                    && m[k as usize] == 1
                    && is_irreducible(m, p);
                if !ok {
                    return Err(Error::ReducibleModulus(m.to_vec()));
                }
                m.to_vec()
            }
            None => default_modulus(p, k),
        };
        let qs = q as usize;
        let ku = k as usize;
        let vecs: Vec<Vec<u64>> = (0..q).map(|e| digits(e, p, ku)).collect();
        let mut add = vec![vec![0u32; qs]; qs];
        let mut mul = vec![vec![0u32; qs]; qs];
        for a in 0..qs {
            for b in 0..qs {
                let s: Vec<u64> = vecs[a].iter().zip(&vecs[b]).map(|(x, y)| (x + y) % p).collect();
                add[a][b] = encode(&s, p) as u32;
                let mut prod = vec![0u64; 2 * ku - 1];
                for (i, x) in vecs[a].iter().enumerate() {
                    for (j, y) in vecs[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = poly_rem(prod, &modulus, p);
                mul[a][b] = encode(&r, p) as u32;
            }
        }
        let neg = (0..qs).map(|a| (0..qs).find(|&b| add[a][b] == 0).unwrap() as u32).collect();
        let mut inv = vec![0u32; qs];
        for (a, slot) in inv.iter_mut().enumerate().skip(1) {
            *slot = (1..qs).find(|&b| mul[a][b] == 1).ok_or(Error::ReducibleModulus(modulus.clone()))? as u32;
        }
        Ok(GaloisField { p, k, modulus, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.add.len()
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize][b as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize][b as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn mul_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The primitive element with the smallest code.
    pub fn primitive_element(&self) -> u32 {
        let m = self.order() - 1;
        (1..self.order() as u32).find(|&a| self.mul_order(a) == m).expect("cyclic unit group")
    }

    /// Polynomial notation in the generator `a`, or the integer for prime fields.
    pub fn element_name(&self, e: u32) -> String {
        if self.k == 1 {
            return e.to_string();
        }
        let c = digits(e as u64, self.p, self.k as usize);
        let mut s = String::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            match (i, ci) {
                (0, _) => write!(s, "{ci}").unwrap(),
                (_, 1) => {}
                _ => write!(s, "{ci}").unwrap(),
            }
            match i {
                0 => {}
                1 => s.push('a'),
                _ => write!(s, "a^{i}").unwrap(),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// The field as a hyperfield with singleton sums.
    pub fn to_hyperfield(&self) -> Result<FiniteHyperfield> {
        let q = self.order();
        if q > MAX_SIZE {
            return Err(Error::TooLarge(q, MAX_SIZE));
        }
        let names = (0..q as u32).map(|e| self.element_name(e)).collect();
        let mul = (0..q).map(|a| (0..q).map(|b| self.mul[a][b] as usize).collect()).collect();
        let add = (0..q).map(|a| (0..q).map(|b| bit(self.add[a][b] as usize)).collect()).collect();
        Ok(FiniteHyperfield::from_masks(names, mul, add)
            .with_meta("name", format!("F_{q}"))
            .with_meta("modulus", self.modulus.clone()))
    }
}

/// `F_q` as a hyperfield, modulo `modulus` when given.
pub fn build_finite_field(q: u64, modulus: Option<&[u64]>) -> Result<FiniteHyperfield> {
    GaloisField::new(q, modulus)?.to_hyperfield()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn f4_with_x2_x_1() {
        let f = GaloisField::new(4, Some(&[1, 1, 1])).unwrap();
        // a * (a + 1) = a^2 + a = 1
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.element_name(3), "a+1");
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(GaloisField::new(4, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(_))));
        assert!(matches!(GaloisField::new(6, None), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn field_axioms_small() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = GaloisField::new(q, None).unwrap();
            let n = q as u32;
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            assert_eq!(f.mul_order(f.primitive_element()), q as usize - 1);
        }
    }
}
