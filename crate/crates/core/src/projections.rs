//! Projections and the order / equivalence theory on them.
//!
//! A projection is a self-adjoint idempotent (e = e* = e²). The partial
//! order is e ≤ f iff e = ef; e ~ f iff some w has w*w = e and ww* = f;
//! e ≲ f iff e ~ g ≤ f for some projection g. Meets and joins are taken in
//! the projection poset by brute force, with non-existence reported as a
//! first-class outcome.

use crate::error::{Error, Result};
use crate::ring::{FiniteStarRing, Kernel, RingElement};

/// A ring element certified self-adjoint idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Projection(RingElement);

impl Projection {
    /// Certify e² = e and e* = e, or fail with `NotAProjection`.
    pub fn certify(r: &FiniteStarRing, el: RingElement) -> Result<Projection> {
        let code = r.check_member(el)?;
        if r.raw_mul(code, code) != code || r.raw_star(code) != code {
            return Err(Error::NotAProjection(code));
        }
        Ok(Projection(el))
    }

    pub fn element(&self) -> RingElement {
        self.0
    }

    pub fn code(&self) -> u64 {
        self.0.code()
    }
}

impl std::fmt::Display for Projection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A witness for e ~ f: w*w = e and ww* = f.
#[derive(Debug, Clone, Copy)]
pub struct EquivalenceWitness {
    pub w: RingElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

/// Result of a meet/join computation: the bound, or which way it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundOutcome {
    Found(Projection),
    /// The pair has no common lower/upper bound at all.
    NoCommonBound,
    /// Bounds exist but none of them is least/greatest.
    NoExtremum,
}

impl BoundOutcome {
    pub fn found(&self) -> Option<Projection> {
        match self {
            BoundOutcome::Found(p) => Some(*p),
            _ => None,
        }
    }
}

pub(crate) fn is_projection_code(r: &FiniteStarRing, e: u64) -> bool {
    r.raw_mul(e, e) == e && r.raw_star(e) == e
}

fn certify_code(r: &FiniteStarRing, code: u64) -> Result<Projection> {
    Projection::certify(r, r.element(code)?)
}

/// Number of star-fixed candidates scanned when enumerating projections of
/// a matrix ring: diagonal entries range over the star-fixed elements of the
/// base, strict upper entries are free, and the lower triangle is forced.
pub(crate) fn star_fixed_matrix_count(r: &FiniteStarRing) -> Option<u64> {
    match r.kernel() {
        Kernel::Matrix { base, k, .. } => {
            let fix = base
                .carrier_codes()
                .into_iter()
                .filter(|&c| base.raw_star(c) == c)
                .count() as u64;
            let m = base.size();
            let k = *k as u64;
            let off = k * (k - 1) / 2;
            let count = fix
                .checked_pow(k as u32)?
                .checked_mul(m.checked_pow(off as u32)?)?;
            Some(count)
        }
        _ => None,
    }
}

pub(crate) fn star_fixed_matrix_code_with(
    base: &FiniteStarRing,
    k: usize,
    star_fixed_base: &[u64],
    mut idx: u64,
) -> u64 {
    let m = base.size();
    let mut coords = vec![0u64; k * k];
    for i in 0..k {
        let d = idx % star_fixed_base.len() as u64;
        idx /= star_fixed_base.len() as u64;
        coords[i * k + i] = star_fixed_base[d as usize];
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let d = idx % m;
            idx /= m;
            coords[i * k + j] = d;
            coords[j * k + i] = base.raw_star(d);
        }
    }
    crate::ring::encode_digits(&coords, m)
}

pub(crate) fn projection_codes(r: &FiniteStarRing) -> Result<Vec<u64>> {
    if let Some(count) = star_fixed_matrix_count(r) {
        if count > r.options().max_star_scan {
            return Err(Error::TooLarge {
                what: "star-fixed projection scan",
                size: count,
                bound: r.options().max_star_scan,
            });
        }
        let Kernel::Matrix { base, k, .. } = r.kernel() else {
            unreachable!()
        };
        let fix: Vec<u64> = base
            .carrier_codes()
            .into_iter()
            .filter(|&c| base.raw_star(c) == c)
            .collect();
        let mut out: Vec<u64> = (0..count)
            .filter_map(|idx| {
                let code = star_fixed_matrix_code_with(base, *k as usize, &fix, idx);
                if r.raw_mul(code, code) == code {
                    Some(code)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    } else {
        r.ensure_enumerable("projection enumeration")?;
        Ok(r.carrier_codes()
            .into_iter()
            .filter(|&e| is_projection_code(r, e))
            .collect())
    }
}

/// All projections of R in canonical code order.
pub fn enumerate_projections(r: &FiniteStarRing) -> Result<Vec<Projection>> {
    projection_codes(r)?
        .into_iter()
        .map(|c| certify_code(r, c))
        .collect()
}

/// e ≤ f iff e = ef.
pub fn proj_leq(r: &FiniteStarRing, e: Projection, f: Projection) -> Result<bool> {
    let (e, f) = (r.check_member(e.element())?, r.check_member(f.element())?);
    Ok(leq_code(r, e, f))
}

pub(crate) fn leq_code(r: &FiniteStarRing, e: u64, f: u64) -> bool {
    r.raw_mul(e, f) == e
}

/// Code-level bound outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CodeBound {
    Found(u64),
    NoCommonBound,
    NoExtremum,
}

impl CodeBound {
    pub(crate) fn found(self) -> Option<u64> {
        match self {
            CodeBound::Found(g) => Some(g),
            _ => None,
        }
    }
}

pub(crate) fn bound_code(
    r: &FiniteStarRing,
    e: u64,
    f: u64,
    kind: BoundKind,
    projs: &[u64],
) -> CodeBound {
    let bounds: Vec<u64> = projs
        .iter()
        .copied()
        .filter(|&g| match kind {
            BoundKind::Meet => leq_code(r, g, e) && leq_code(r, g, f),
            BoundKind::Join => leq_code(r, e, g) && leq_code(r, f, g),
        })
        .collect();
    if bounds.is_empty() {
        return CodeBound::NoCommonBound;
    }
    let ext = bounds.iter().copied().find(|&m| {
        bounds.iter().all(|&g| match kind {
            BoundKind::Meet => leq_code(r, g, m),
            BoundKind::Join => leq_code(r, m, g),
        })
    });
    match ext {
        Some(g) => CodeBound::Found(g),
        None => CodeBound::NoExtremum,
    }
}

/// The meet/join of e and f in the projection poset.
pub fn proj_bound(
    r: &FiniteStarRing,
    e: Projection,
    f: Projection,
    kind: BoundKind,
) -> Result<BoundOutcome> {
    let (ec, fc) = (r.check_member(e.element())?, r.check_member(f.element())?);
    let projs = projection_codes(r)?;
    Ok(match bound_code(r, ec, fc, kind, &projs) {
        CodeBound::NoCommonBound => BoundOutcome::NoCommonBound,
        CodeBound::NoExtremum => BoundOutcome::NoExtremum,
        CodeBound::Found(g) => BoundOutcome::Found(certify_code(r, g)?),
    })
}

pub(crate) fn equivalent_code(r: &FiniteStarRing, e: u64, f: u64) -> Result<Option<u64>> {
    r.ensure_enumerable("equivalence witness scan")?;
    Ok(r.carrier_codes().into_iter().find(|&w| {
        let ws = r.raw_star(w);
        r.raw_mul(ws, w) == e && r.raw_mul(w, ws) == f
    }))
}

/// Search the whole carrier for a witness of e ~ f.
pub fn equivalent(
    r: &FiniteStarRing,
    e: Projection,
    f: Projection,
) -> Result<Option<EquivalenceWitness>> {
    let (ec, fc) = (r.check_member(e.element())?, r.check_member(f.element())?);
    Ok(equivalent_code(r, ec, fc)?.map(|w| EquivalenceWitness {
        w: r.element(w).expect("witness code is in the carrier"),
    }))
}

pub(crate) fn dominated_code(
    r: &FiniteStarRing,
    e: u64,
    f: u64,
    projs: &[u64],
) -> Result<bool> {
    for &g in projs {
        if leq_code(r, g, f) && equivalent_code(r, e, g)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// e ≲ f: some projection g ≤ f has e ~ g.
pub fn dominated(r: &FiniteStarRing, e: Projection, f: Projection) -> Result<bool> {
    let (ec, fc) = (r.check_member(e.element())?, r.check_member(f.element())?);
    let projs = projection_codes(r)?;
    dominated_code(r, ec, fc, &projs)
}

pub(crate) fn central_projection_codes(r: &FiniteStarRing) -> Result<Vec<u64>> {
    r.ensure_enumerable("central projection enumeration")?;
    let codes = r.carrier_codes();
    Ok(projection_codes(r)?
        .into_iter()
        .filter(|&e| codes.iter().all(|&x| r.raw_mul(e, x) == r.raw_mul(x, e)))
        .collect())
}

/// Projections commuting with every element of R.
pub fn central_projections(r: &FiniteStarRing) -> Result<Vec<Projection>> {
    central_projection_codes(r)?
        .into_iter()
        .map(|c| certify_code(r, c))
        .collect()
}

/// x and y are very orthogonal when some central projection h has hx = x
/// and hy = 0. Arbitrary elements are accepted, not just projections.
/// Returns the witnessing h.
pub fn very_orthogonal(
    r: &FiniteStarRing,
    x: RingElement,
    y: RingElement,
) -> Result<Option<RingElement>> {
    let (xc, yc) = (r.check_member(x)?, r.check_member(y)?);
    let zero = r.zero_code();
    for h in central_projection_codes(r)? {
        if r.raw_mul(h, xc) == xc && r.raw_mul(h, yc) == zero {
            return Ok(Some(r.element(h)?));
        }
    }
    Ok(None)
}

pub(crate) fn position_p_prime_code(
    r: &FiniteStarRing,
    e: u64,
    f: u64,
    projs: &[u64],
) -> Result<bool> {
    let one = r.unity_code().ok_or(Error::NoUnity)?;
    let compl = r.raw_sub(one, f);
    let meet = bound_code(r, e, compl, BoundKind::Meet, projs);
    let join = bound_code(r, e, compl, BoundKind::Join, projs);
    Ok(meet == CodeBound::Found(r.zero_code()) && join == CodeBound::Found(one))
}

/// e and f are in position p' iff e ∧ (1-f) = 0 and e ∨ (1-f) = 1; missing
/// bounds count as failure.
pub fn position_p_prime(r: &FiniteStarRing, e: Projection, f: Projection) -> Result<bool> {
    let (ec, fc) = (r.check_member(e.element())?, r.check_member(f.element())?);
    let projs = projection_codes(r)?;
    position_p_prime_code(r, ec, fc, &projs)
}
