//! One-sided annihilators, annihilator chains of powers, and principal
//! projection generators.
//!
//! The right annihilator of S is r(S) = {a : sa = 0 for all s in S}, a right
//! ideal; the left annihilator l(S) is defined dually. For an element x the
//! chain r(x) ⊆ r(x²) ⊆ ... ascends and stabilizes permanently in a finite
//! ring: once r(xⁿ) = r(xⁿ⁺¹), every later term coincides (y ∈ r(xⁿ⁺²)
//! puts xy ∈ r(xⁿ⁺¹) = r(xⁿ), so xⁿ⁺¹y = 0).

use crate::error::Result;
use crate::projections::Projection;
use crate::ring::{FiniteStarRing, RingElement};

/// Which side a set annihilates from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    Left,
    Right,
}

/// An annihilator, stored as the sorted set of element codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorSet {
    pub side: Side,
    /// Sorted element codes of the annihilator.
    pub elements: Vec<u64>,
    /// The set S being annihilated, as codes.
    pub generator_of: Vec<u64>,
}

impl AnnihilatorSet {
    pub fn contains(&self, code: u64) -> bool {
        self.elements.binary_search(&code).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub(crate) fn right_ann_codes(r: &FiniteStarRing, s: &[u64]) -> Result<Vec<u64>> {
    r.ensure_enumerable("right annihilator")?;
    let zero = r.zero_code();
    Ok(r.carrier_codes()
        .into_iter()
        .filter(|&a| s.iter().all(|&x| r.raw_mul(x, a) == zero))
        .collect())
}

pub(crate) fn left_ann_codes(r: &FiniteStarRing, s: &[u64]) -> Result<Vec<u64>> {
    r.ensure_enumerable("left annihilator")?;
    let zero = r.zero_code();
    Ok(r.carrier_codes()
        .into_iter()
        .filter(|&a| s.iter().all(|&x| r.raw_mul(a, x) == zero))
        .collect())
}

/// r(S) by full scan of the carrier.
pub fn right_annihilator(r: &FiniteStarRing, s: &[RingElement]) -> Result<AnnihilatorSet> {
    let codes: Vec<u64> = s
        .iter()
        .map(|&el| r.check_member(el))
        .collect::<Result<_>>()?;
    Ok(AnnihilatorSet {
        side: Side::Right,
        elements: right_ann_codes(r, &codes)?,
        generator_of: codes,
    })
}

/// l(S) by full scan of the carrier.
pub fn left_annihilator(r: &FiniteStarRing, s: &[RingElement]) -> Result<AnnihilatorSet> {
    let codes: Vec<u64> = s
        .iter()
        .map(|&el| r.check_member(el))
        .collect::<Result<_>>()?;
    Ok(AnnihilatorSet {
        side: Side::Left,
        elements: left_ann_codes(r, &codes)?,
        generator_of: codes,
    })
}

/// The annihilator chain of x: r(xⁿ) for n = 1, 2, ... until it provably
/// stabilizes. `stabilization_n` is the first n with r(xⁿ) = r(xⁿ⁺¹); the
/// chain holds every set computed along the way (the confirming duplicate is
/// kept except when the chain reaches the whole ring, which is already
/// final because the chain ascends).
#[derive(Debug, Clone)]
pub struct AnnChainResult {
    pub x: RingElement,
    pub stabilization_n: u32,
    pub chain: Vec<AnnihilatorSet>,
}

impl AnnChainResult {
    /// The stabilized annihilator r(x^stabilization_n).
    pub fn stable(&self) -> &AnnihilatorSet {
        &self.chain[self.stabilization_n as usize - 1]
    }
}

pub fn ann_chain(r: &FiniteStarRing, x: RingElement) -> Result<AnnChainResult> {
    let x_code = r.check_member(x)?;
    ann_chain_codes(r, x_code).map(|(chain, stab)| AnnChainResult {
        x,
        stabilization_n: stab,
        chain,
    })
}

pub(crate) fn ann_chain_codes(
    r: &FiniteStarRing,
    x: u64,
) -> Result<(Vec<AnnihilatorSet>, u32)> {
    r.ensure_enumerable("annihilator chain")?;
    let size = r.size() as usize;
    let mut chain: Vec<AnnihilatorSet> = Vec::new();
    let mut power = x;
    let mut n = 1u32;
    loop {
        let ann = AnnihilatorSet {
            side: Side::Right,
            elements: right_ann_codes(r, &[power])?,
            generator_of: vec![power],
        };
        let full = ann.elements.len() == size;
        chain.push(ann);
        if full {
            return Ok((chain, n));
        }
        if n >= 2 && chain[n as usize - 1].elements == chain[n as usize - 2].elements {
            return Ok((chain, n - 1));
        }
        power = r.raw_mul(power, x);
        n += 1;
    }
}

/// Search for a projection g with A = gR (or A = Rg on the left side):
/// g must lie in A, be a projection, and fix every member of A from the
/// annihilating side. The returned generator is re-verified by materializing
/// gR and comparing it to A.
pub fn projection_generator(
    r: &FiniteStarRing,
    a: &AnnihilatorSet,
) -> Result<Option<Projection>> {
    match projection_generator_code(r, a)? {
        Some(g) => Ok(Some(Projection::certify(r, r.element(g)?)?)),
        None => Ok(None),
    }
}

pub(crate) fn projection_generator_code(
    r: &FiniteStarRing,
    a: &AnnihilatorSet,
) -> Result<Option<u64>> {
    r.ensure_enumerable("projection generator search")?;
    for &g in &a.elements {
        if r.raw_mul(g, g) != g || r.raw_star(g) != g {
            continue;
        }
        let fixes = match a.side {
            Side::Right => a.elements.iter().all(|&y| r.raw_mul(g, y) == y),
            Side::Left => a.elements.iter().all(|&y| r.raw_mul(y, g) == y),
        };
        if !fixes {
            continue;
        }
        // soundness: the principal one-sided ideal of g must be exactly A
        let mut ideal: Vec<u64> = r
            .carrier_codes()
            .into_iter()
            .map(|y| match a.side {
                Side::Right => r.raw_mul(g, y),
                Side::Left => r.raw_mul(y, g),
            })
            .collect();
        ideal.sort_unstable();
        ideal.dedup();
        if ideal == a.elements {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, ConstructionSpec};

    fn zmod(n: u64) -> FiniteStarRing {
        build_ring(&ConstructionSpec::ZMod(n)).unwrap()
    }

    #[test]
    fn right_annihilator_of_two_in_z4() {
        let r = zmod(4);
        let two = r.element(2).unwrap();
        let ann = right_annihilator(&r, &[two]).unwrap();
        assert_eq!(ann.elements, vec![0, 2]);
    }

    #[test]
    fn annihilator_of_zero_is_everything() {
        let r = zmod(4);
        let ann = right_annihilator(&r, &[r.zero()]).unwrap();
        assert_eq!(ann.elements, vec![0, 1, 2, 3]);
    }

    #[test]
    fn f2c2_annihilator_of_one_plus_g() {
        let r = build_ring(&ConstructionSpec::GroupAlgebra {
            p: 2,
            invariants: vec![1],
        })
        .unwrap();
        let x = r.element_from_coords(&[1, 1]).unwrap();
        let ann = right_annihilator(&r, &[x]).unwrap();
        // scan of all 4 elements: (1+g)*y = 0 exactly for y in {0, 1+g}
        assert_eq!(ann.elements, vec![r.zero_code(), x.code()]);
    }

    #[test]
    fn left_right_duality_via_star() {
        let r = build_ring(&ConstructionSpec::MatrixRing(
            Box::new(ConstructionSpec::ZMod(3)),
            2,
        ))
        .unwrap();
        for x in r.carrier_codes().into_iter().step_by(7) {
            let left = left_ann_codes(&r, &[x]).unwrap();
            let mut dual: Vec<u64> = right_ann_codes(&r, &[r.raw_star(x)])
                .unwrap()
                .into_iter()
                .map(|y| r.raw_star(y))
                .collect();
            dual.sort_unstable();
            assert_eq!(left, dual);
        }
    }

    #[test]
    fn chain_in_z4() {
        let r = zmod(4);
        let res = ann_chain(&r, r.element(2).unwrap()).unwrap();
        assert_eq!(res.stabilization_n, 2);
        assert_eq!(res.chain.len(), 2);
        assert_eq!(res.chain[0].elements, vec![0, 2]);
        assert_eq!(res.chain[1].elements, vec![0, 1, 2, 3]);
    }

    #[test]
    fn chain_of_zero_is_single_step() {
        let r = zmod(4);
        let res = ann_chain(&r, r.zero()).unwrap();
        assert_eq!(res.stabilization_n, 1);
        assert_eq!(res.chain.len(), 1);
        assert_eq!(res.chain[0].elements.len(), 4);
    }

    #[test]
    fn chain_in_z12_keeps_confirming_duplicate() {
        let r = zmod(12);
        let res = ann_chain(&r, r.element(2).unwrap()).unwrap();
        assert_eq!(res.stabilization_n, 2);
        assert_eq!(res.chain.len(), 3);
        assert_eq!(res.chain[0].elements, vec![0, 6]);
        assert_eq!(res.chain[1].elements, vec![0, 3, 6, 9]);
        assert_eq!(res.chain[2].elements, vec![0, 3, 6, 9]);
    }

    #[test]
    fn generator_absent_for_r2_in_z4() {
        let r = zmod(4);
        let ann = right_annihilator(&r, &[r.element(2).unwrap()]).unwrap();
        assert!(projection_generator(&r, &ann).unwrap().is_none());
    }

    #[test]
    fn generator_of_full_ring_is_unity() {
        let r = zmod(4);
        let ann = right_annihilator(&r, &[r.zero()]).unwrap();
        let g = projection_generator(&r, &ann).unwrap().unwrap();
        assert_eq!(g.element().code(), 1);
    }

    #[test]
    fn generator_in_z12() {
        let r = zmod(12);
        let four = r.element(4).unwrap();
        let ann = right_annihilator(&r, &[four]).unwrap();
        assert_eq!(ann.elements, vec![0, 3, 6, 9]);
        let g = projection_generator(&r, &ann).unwrap().unwrap();
        assert_eq!(g.element().code(), 9);
    }

    #[test]
    fn chain_is_ascending_and_stabilization_permanent() {
        for spec in [
            ConstructionSpec::ZMod(12),
            ConstructionSpec::QuaternionZ2,
            ConstructionSpec::PolyQuotient { p: 2, n: 3 },
        ] {
            let r = build_ring(&spec).unwrap();
            for x in r.carrier_codes() {
                let (chain, stab) = ann_chain_codes(&r, x).unwrap();
                for w in chain.windows(2) {
                    assert!(w[0].elements.iter().all(|c| w[1].contains(*c)));
                }
                // permanence: r(x^m) for m = stab..stab+3 all agree
                let stable = &chain[stab as usize - 1].elements;
                let mut power = r.raw_pow(x, stab).unwrap();
                for _ in 0..3 {
                    power = r.raw_mul(power, x);
                    assert_eq!(&right_ann_codes(&r, &[power]).unwrap(), stable);
                }
            }
        }
    }
}
