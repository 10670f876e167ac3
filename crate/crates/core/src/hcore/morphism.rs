//! Homomorphisms, embeddings and isomorphisms between finite hyperfields.

use std::collections::VecDeque;

use crate::backend::Hyperfield;
use crate::hcore::table::{bit, bits, FiniteHyperfield, Mask};
use crate::report::{AxiomVerdict, ValidationReport};

/// A map of carriers, `map[i]` being the image of element `i`.
#[derive(Clone, Debug)]
pub struct Morphism<'a> {
    pub source: &'a FiniteHyperfield,
    pub target: &'a FiniteHyperfield,
    pub map: Vec<usize>,
}

fn w(xs: &[usize]) -> Vec<String> {
    xs.iter().map(usize::to_string).collect()
}

impl<'a> Morphism<'a> {
    pub fn new(source: &'a FiniteHyperfield, target: &'a FiniteHyperfield, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), source.size(), "map must cover the source carrier");
        assert!(map.iter().all(|&i| i < target.size()), "map must land in the target carrier");
        Morphism { source, target, map }
    }

    pub fn identity(f: &'a FiniteHyperfield) -> Self {
        Morphism { source: f, target: f, map: (0..f.size()).collect() }
    }

    fn image_of(&self, m: Mask) -> Mask {
        bits(m).fold(0, |acc, i| acc | bit(self.map[i]))
    }

    pub fn image(&self) -> Mask {
        self.image_of(self.source.full_mask())
    }

    pub fn is_injective(&self) -> bool {
        self.image().count_ones() as usize == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.target.full_mask()
    }

    /// The inverse map of a bijection.
    pub fn inverse(&self) -> Option<Morphism<'a>> {
        if !(self.is_injective() && self.is_surjective()) {
            return None;
        }
        let mut inv = vec![0; self.target.size()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(Morphism { source: self.target, target: self.source, map: inv })
    }

    /// HH1–HH5, exhaustively.
    pub fn check_homomorphism(&self) -> ValidationReport {
        let (s, t, m) = (self.source, self.target, &self.map);
        let n = s.size();
        let mut report = ValidationReport::exhaustive(format!("{} -> {}", s.name(), t.name()));
        let mut hh1 = AxiomVerdict::new("HH1");
        hh1.record(m[0] == 0, || w(&[0]));
        let mut hh2 = AxiomVerdict::new("HH2");
        let mut hh3 = AxiomVerdict::new("HH3");
        for x in 0..n {
            for y in 0..n {
                hh2.record(m[s.times(x, y)] == t.times(m[x], m[y]), || w(&[x, y]));
                let img = self.image_of(s.add_mask(x, y));
                hh3.record(img & !t.add_mask(m[x], m[y]) == 0, || w(&[x, y]));
            }
        }
        let mut hh4 = AxiomVerdict::new("HH4");
        hh4.record(m[1] == 1, || w(&[1]));
        let mut hh5 = AxiomVerdict::new("HH5");
        for x in 1..n {
            let ok = match (s.inverse(x), t.inverse(m[x])) {
                (Some(xi), Some(yi)) => m[xi] == yi,
                _ => false,
            };
            hh5.record(ok, || w(&[x]));
        }
        for v in [hh1, hh2, hh3, hh4, hh5] {
            report.push(v);
        }
        report
    }

    /// EM1: `σ(x + y) = (σx + σy) ∩ Im σ`.
    pub fn check_em1(&self) -> AxiomVerdict {
        let (s, t) = (self.source, self.target);
        let img = self.image();
        let mut em1 = AxiomVerdict::new("EM1");
        for x in 0..s.size() {
            for y in 0..s.size() {
                let left = self.image_of(s.add_mask(x, y));
                let right = t.add_mask(self.map[x], self.map[y]) & img;
                em1.record(left == right, || w(&[x, y]));
            }
        }
        em1
    }

    pub fn is_homomorphism(&self) -> bool {
        self.check_homomorphism().passed()
    }

    pub fn is_embedding(&self) -> bool {
        self.is_injective() && self.is_homomorphism() && self.check_em1().holds
    }

    /// A surjective embedding.
    pub fn is_isomorphism(&self) -> bool {
        self.is_surjective() && self.is_embedding()
    }
}

/// Multiplicative order of a unit.
pub fn unit_order(f: &FiniteHyperfield, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while y != 1 {
        y = f.times(y, x);
        k += 1;
        if k > f.size() {
            return 0;
        }
    }
    k
}

/// Subgroup of units generated by `gens`, as a mask.
pub fn generated_subgroup(f: &FiniteHyperfield, gens: &[usize]) -> Mask {
    let mut seen = bit(1);
    let mut queue = VecDeque::from([1]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = f.times(x, g);
            if seen & bit(y) == 0 {
                seen |= bit(y);
                queue.push_back(y);
            }
        }
    }
    seen
}

/// A generating set of the unit group, chosen greedily in index order.
pub fn unit_generators(f: &FiniteHyperfield) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = bit(1);
    for x in f.units() {
        if span & bit(x) == 0 {
            gens.push(x);
            span = generated_subgroup(f, &gens);
        }
    }
    gens
}

/// Extends `σ(gens[i]) = images[i]` to a map of unit groups, if consistent.
fn extend_on_units(f: &FiniteHyperfield, g: &FiniteHyperfield, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; f.size()];
    map[0] = 0;
    map[1] = 1;
    let mut queue = VecDeque::from([1]);
    while let Some(x) = queue.pop_front() {
        for (&gen, &img) in gens.iter().zip(images) {
            let y = f.times(x, gen);
            let fy = g.times(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Every isomorphism `F → G`, found by extending group isomorphisms of the
/// unit groups and filtering by EM1. Sorted lexicographically.
pub fn all_isomorphisms(f: &FiniteHyperfield, g: &FiniteHyperfield) -> Vec<Vec<usize>> {
    if f.size() != g.size() {
        return Vec::new();
    }
    let gens = unit_generators(f);
    let orders: Vec<usize> = gens.iter().map(|&x| unit_order(f, x)).collect();
    let candidates: Vec<Vec<usize>> =
        orders.iter().map(|&o| g.units().filter(|&y| unit_order(g, y) == o).collect()).collect();
    let mut found = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if candidates.iter().any(Vec::is_empty) {
            break;
        }
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend_on_units(f, g, &gens, &images) {
            let sigma = Morphism { source: f, target: g, map };
            if sigma.is_isomorphism() {
                found.push(sigma.map);
            }
        }
        // Odometer over candidate images.
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    found.sort();
    found.dedup();
    found
}

/// The lexicographically least isomorphism `F → G`, if any.
pub fn find_isomorphism<'a>(f: &'a FiniteHyperfield, g: &'a FiniteHyperfield) -> Option<Morphism<'a>> {
    all_isomorphisms(f, g).into_iter().next().map(|map| Morphism { source: f, target: g, map })
}

pub fn are_isomorphic(f: &FiniteHyperfield, g: &FiniteHyperfield) -> bool {
    find_isomorphism(f, g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::gf::build_finite_field;
    use crate::hcore::table::{build_k, build_s, build_w};

    #[test]
    fn identity_s_to_w_is_hom_not_embedding() {
        let (s, w) = (build_s(), build_w());
        let sigma = Morphism::new(&s, &w, vec![0, 1, 2]);
        assert!(sigma.is_homomorphism());
        assert!(!sigma.is_embedding());
        assert!(!sigma.is_isomorphism());
        let em1 = sigma.check_em1();
        assert_eq!(em1.witness.as_deref(), Some(&["1".to_string(), "1".to_string()][..]));
    }

    #[test]
    fn collapse_to_k() {
        let (f5, k) = (build_finite_field(5, None).unwrap(), build_k());
        let sigma = Morphism::new(&f5, &k, vec![0, 1, 1, 1, 1]);
        assert!(sigma.is_homomorphism());
    }

    #[test]
    fn k_not_f2() {
        assert!(find_isomorphism(&build_k(), &build_finite_field(2, None).unwrap()).is_none());
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let w = build_w();
        let sigma = find_isomorphism(&w, &w).unwrap();
        assert_eq!(sigma.map, vec![0, 1, 2]);
        let f9 = build_finite_field(9, None).unwrap();
        let sigma = find_isomorphism(&f9, &f9).unwrap();
        assert_eq!(sigma.map, (0..9).collect::<Vec<_>>());
        // Frobenius is the only other automorphism of F_9.
        assert_eq!(all_isomorphisms(&f9, &f9).len(), 2);
    }

    #[test]
    fn inverse_of_isomorphism_is_homomorphism() {
        let f7 = build_finite_field(7, None).unwrap();
        for map in all_isomorphisms(&f7, &f7) {
            let sigma = Morphism::new(&f7, &f7, map);
            assert!(sigma.inverse().unwrap().is_homomorphism());
        }
    }
}
