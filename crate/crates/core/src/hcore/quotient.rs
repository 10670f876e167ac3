//! Factor hyperfields `K_T` of a finite field by a subgroup of its units.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hcore::classify::is_field;
use crate::hcore::morphism::{generated_subgroup, unit_generators, unit_order};
use crate::hcore::table::{bit, bits, FiniteHyperfield, Mask};

/// Ways to name a subgroup `T ≤ K^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// The nonzero squares.
    Squares,
    /// All of `K^×`.
    All,
    /// `{1}`.
    Trivial,
    /// The unique subgroup of the given index in the cyclic group `K^×`.
    Index(usize),
    /// Generated by the listed element indices.
    Gens(Vec<usize>),
}

impl FromStr for SubgroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown subgroup `{s}`"));
        match s {
            "squares" => Ok(SubgroupSpec::Squares),
            "all" => Ok(SubgroupSpec::All),
            "trivial" => Ok(SubgroupSpec::Trivial),
            _ => {
                if let Some(k) = s.strip_prefix("index:") {
                    return k.parse().map(SubgroupSpec::Index).map_err(|_| bad());
                }
                let list = s.strip_prefix("gens:").ok_or_else(bad)?;
                let gens = list.split(',').map(|t| t.trim().parse()).collect::<std::result::Result<_, _>>();
                gens.map(SubgroupSpec::Gens).map_err(|_| bad())
            }
        }
    }
}

/// Generators of the subgroup named by `spec` in the unit group of the field `k`.
pub fn subgroup_generators(k: &FiniteHyperfield, spec: &SubgroupSpec) -> Result<Vec<usize>> {
    let m = k.size() - 1;
    let cyclic_power = |e: usize| -> Result<Vec<usize>> {
        let g = k
            .units()
            .find(|&x| unit_order(k, x) == m)
            .ok_or_else(|| Error::InvalidSubgroup("unit group is not cyclic".into()))?;
        let mut x = 1;
        for _ in 0..e {
            x = k.times(x, g);
        }
        Ok(vec![x])
    };
    match spec {
        SubgroupSpec::All => Ok(unit_generators(k)),
        SubgroupSpec::Trivial => Ok(vec![1]),
        SubgroupSpec::Squares => {
            let mut sq: Vec<usize> = k.units().map(|x| k.times(x, x)).collect();
            sq.sort();
            sq.dedup();
            Ok(sq)
        }
        SubgroupSpec::Index(i) => {
            if *i == 0 || !m.is_multiple_of(*i) {
                return Err(Error::InvalidSubgroup(format!("no subgroup of index {i} in a group of order {m}")));
            }
            cyclic_power(*i)
        }
        SubgroupSpec::Gens(g) => {
            if g.iter().any(|&x| x == 0 || x >= k.size()) {
                return Err(Error::InvalidSubgroup(format!("generators {g:?} must be units")));
            }
            Ok(g.clone())
        }
    }
}

/// `K_T` for a field `K` given as a table and `T = ⟨gens⟩`.
///
/// Cosets are numbered `0T, 1T`, then by their least element. Addition is
/// `xT + yT = {(x + yt)T | t ∈ T}`.
pub fn quotient_hyperfield(k: &FiniteHyperfield, gens: &[usize]) -> Result<FiniteHyperfield> {
    if !is_field(k) || (0..k.size()).any(|x| (0..k.size()).any(|y| k.add_mask(x, y).count_ones() != 1)) {
        return Err(Error::NotAField(crate::backend::Hyperfield::name(k)));
    }
    if gens.iter().any(|&g| g == 0 || g >= k.size() || unit_order(k, g) == 0) {
        return Err(Error::InvalidSubgroup(format!("generators {gens:?} must be units")));
    }
    let t: Mask = generated_subgroup(k, gens);
    let t_elems: Vec<usize> = bits(t).collect();

    // coset[x] = index of xT.
    let mut coset = vec![usize::MAX; k.size()];
    let mut reps = vec![0usize];
    coset[0] = 0;
    for x in k.units() {
        if coset[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &s in &t_elems {
            coset[k.times(x, s)] = idx;
        }
    }
    let n = reps.len();
    let single = |m: Mask| bits(m).next().expect("field sums are singletons");
    let mut mul = vec![vec![0; n]; n];
    let mut add = vec![vec![0 as Mask; n]; n];
    for (a, &x) in reps.iter().enumerate() {
        for (b, &y) in reps.iter().enumerate() {
            mul[a][b] = coset[k.times(x, y)];
            add[a][b] = t_elems
                .iter()
                .fold(0, |cell, &s| cell | bit(coset[single(k.add_mask(x, k.times(y, s)))]));
        }
    }
    let names = reps
        .iter()
        .map(|&x| if x == 0 { "0".to_string() } else { format!("[{}]", k.name_of(x)) })
        .collect();
    let kname = crate::backend::Hyperfield::name(k);
    Ok(FiniteHyperfield::from_masks(names, mul, add)
        .with_meta("name", format!("{kname}/T"))
        .with_meta("field", kname)
        .with_meta("subgroup", t_elems.iter().map(|&x| k.name_of(x).to_string()).collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::gf::build_finite_field;
    use crate::hcore::morphism::are_isomorphic;
    use crate::hcore::table::{build_k, build_w};
    use crate::hcore::validate::validate;

    #[test]
    fn spec_parsing() {
        assert_eq!("squares".parse::<SubgroupSpec>().unwrap(), SubgroupSpec::Squares);
        assert_eq!("index:3".parse::<SubgroupSpec>().unwrap(), SubgroupSpec::Index(3));
        assert_eq!("gens:2,4".parse::<SubgroupSpec>().unwrap(), SubgroupSpec::Gens(vec![2, 4]));
        assert!("cubes".parse::<SubgroupSpec>().is_err());
    }

    #[test]
    fn f5_full_group_is_k() {
        let f5 = build_finite_field(5, None).unwrap();
        let gens = subgroup_generators(&f5, &SubgroupSpec::All).unwrap();
        let q = quotient_hyperfield(&f5, &gens).unwrap();
        assert_eq!(q.size(), 2);
        assert!(are_isomorphic(&q, &build_k()));
    }

    #[test]
    fn f7_squares_is_w() {
        let f7 = build_finite_field(7, None).unwrap();
        let gens = subgroup_generators(&f7, &SubgroupSpec::Squares).unwrap();
        assert_eq!(gens, vec![1, 2, 4]);
        let q = quotient_hyperfield(&f7, &gens).unwrap();
        assert!(validate(&q).passed());
        assert!(are_isomorphic(&q, &build_w()));
    }

    #[test]
    fn trivial_subgroup_gives_field() {
        let f3 = build_finite_field(3, None).unwrap();
        let q = quotient_hyperfield(&f3, &[1]).unwrap();
        assert!(are_isomorphic(&q, &f3));
    }

    #[test]
    fn quotient_of_non_field_rejected() {
        assert!(matches!(quotient_hyperfield(&build_w(), &[1]), Err(Error::NotAField(_))));
    }
}
