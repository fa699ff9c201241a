//! Witness-mode GRP search for matrix rings too large to scan in full.
//!
//! The right annihilator of a matrix power is handled columnwise: Y lies in
//! r(Aⁿ) exactly when every column of Y solves Aⁿ·v = 0, so "EY = 0 for all
//! Y in r(Aⁿ)" reduces to "E·v = 0 for every solution vector v". Candidate
//! projections are drawn from the star-fixed matrices (diagonal over the
//! star-fixed base elements, free strict upper triangle, forced lower
//! triangle), which is a strict superset of the projections.

use rayon::prelude::*;

use crate::classify::GrpResult;
use crate::error::{Error, Result};
use crate::projections::{star_fixed_matrix_code_with, Projection};
use crate::ring::{FiniteStarRing, Kernel, RingElement};

/// Outcome of one witness scan.
#[derive(Debug, Clone)]
pub struct MatrixGrpScan {
    /// The certified GRP, if any candidate passed both clauses.
    pub result: Option<GrpResult>,
    /// Star-fixed candidates enumerated.
    pub candidates: u64,
    /// How many of them were projections (idempotent).
    pub projections: u64,
    /// Distinct powers of the witness examined before repetition.
    pub distinct_powers: u32,
}

struct MatrixView<'r> {
    base: &'r FiniteStarRing,
    k: usize,
}

impl<'r> MatrixView<'r> {
    fn mat_of(&self, r: &FiniteStarRing, code: u64) -> Vec<u64> {
        r.kernel().decode(code)
    }

    /// Matrix-vector product over the base ring.
    fn apply(&self, mat: &[u64], v: &[u64]) -> Vec<u64> {
        let k = self.k;
        (0..k)
            .map(|i| {
                let mut acc = self.base.zero_code();
                for j in 0..k {
                    acc = self
                        .base
                        .raw_add(acc, self.base.raw_mul(mat[i * k + j], v[j]));
                }
                acc
            })
            .collect()
    }

    /// All v with mat·v = 0, by scanning the |base|^k column vectors.
    fn kernel_vectors(&self, mat: &[u64]) -> Vec<Vec<u64>> {
        let k = self.k;
        let m = self.base.size();
        let zero = vec![self.base.zero_code(); k];
        let count = m.pow(k as u32);
        (0..count)
            .filter_map(|idx| {
                let v = crate::ring::decode_digits(idx, m, k);
                if self.apply(mat, &v) == zero {
                    Some(v)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Search for GRP(x) in a matrix ring of any size: powers of x up to
/// repetition, candidate projections from the star-fixed scan, clause two
/// decided on the columnwise solution space of each power.
pub fn matrix_grp_scan(r: &FiniteStarRing, x: RingElement) -> Result<MatrixGrpScan> {
    let xc = r.check_member(x)?;
    let Kernel::Matrix { base, k, .. } = r.kernel() else {
        return Err(Error::BadParameter(
            "witness-mode GRP search needs a matrix ring".into(),
        ));
    };
    let k = *k as usize;
    let view = MatrixView { base, k };

    // distinct powers x, x^2, ... with their annihilator solution spaces
    let mut power_codes: Vec<u64> = Vec::new();
    let mut power = xc;
    while !power_codes.contains(&power) {
        power_codes.push(power);
        power = r.raw_mul(power, xc);
    }
    let power_solutions: Vec<Vec<Vec<u64>>> = power_codes
        .iter()
        .map(|&p| {
            let mat = view.mat_of(r, p);
            view.kernel_vectors(&mat)
        })
        .collect();

    let star_fixed_base: Vec<u64> = base
        .carrier_codes()
        .into_iter()
        .filter(|&c| base.raw_star(c) == c)
        .collect();
    let m = base.size();
    let candidates = (star_fixed_base.len() as u64)
        .checked_pow(k as u32)
        .and_then(|d| m.checked_pow((k * (k - 1) / 2) as u32).map(|o| d * o))
        .ok_or_else(|| Error::BadParameter("star-fixed candidate count overflows".into()))?;
    if candidates > r.options().max_star_scan {
        return Err(Error::TooLarge {
            what: "star-fixed witness scan",
            size: candidates,
            bound: r.options().max_star_scan,
        });
    }

    let zero_vec = vec![base.zero_code(); k];
    let hits: Vec<(u32, u64, bool)> = (0..candidates)
        .into_par_iter()
        .filter_map(|idx| {
            let e = star_fixed_matrix_code_with(base, k, &star_fixed_base, idx);
            if r.raw_mul(e, e) != e {
                return None;
            }
            let emat = view.mat_of(r, e);
            for (n, sols) in power_solutions.iter().enumerate() {
                let pcode = power_codes[n];
                // clause 1: xⁿ e = xⁿ
                if r.raw_mul(pcode, e) != pcode {
                    continue;
                }
                // clause 2: e kills every solution of xⁿ v = 0
                if sols.iter().all(|v| view.apply(&emat, v) == zero_vec) {
                    return Some((n as u32 + 1, e, true));
                }
            }
            Some((0, e, false)) // projection, but certifies nothing
        })
        .collect();

    let projections = hits.len() as u64;
    let result = hits
        .iter()
        .filter(|&&(_, _, ok)| ok)
        .map(|&(n, e, _)| (n, e))
        .min()
        .map(|(n, e)| {
            Ok::<GrpResult, Error>(GrpResult {
                e: Projection::certify(r, r.element(e)?)?,
                n,
            })
        })
        .transpose()?;

    Ok(MatrixGrpScan {
        result,
        candidates,
        projections,
        distinct_powers: power_codes.len() as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::grp;
    use crate::projections::projection_codes;
    use crate::ring::{build_ring, ConstructionSpec};

    #[test]
    fn witness_scan_agrees_with_full_search_on_m2z3() {
        let r = build_ring(&ConstructionSpec::MatrixRing(
            Box::new(ConstructionSpec::ZMod(3)),
            2,
        ))
        .unwrap();
        for code in (0..r.size()).step_by(11) {
            let x = r.element(code).unwrap();
            let full = grp(&r, x).unwrap();
            let scan = matrix_grp_scan(&r, x).unwrap().result;
            assert_eq!(
                full.map(|g| (g.e.code(), g.n)),
                scan.map(|g| (g.e.code(), g.n)),
                "x = {code}"
            );
        }
    }

    #[test]
    fn candidate_count_matches_projection_enumeration() {
        let r = build_ring(&ConstructionSpec::MatrixRing(
            Box::new(ConstructionSpec::ZMod(3)),
            2,
        ))
        .unwrap();
        let x = r.element(1).unwrap();
        let scan = matrix_grp_scan(&r, x).unwrap();
        assert_eq!(scan.candidates, 27); // 3 diagonal star-fixed choices^2 * 3 off-diagonal
        assert_eq!(
            scan.projections,
            projection_codes(&r).unwrap().len() as u64
        );
    }
}
