//! Rickart-type classification with machine-checkable certificates.
//!
//! Every verdict carries either a witness (per-element generator maps,
//! per-pair comparability witnesses) or a concrete counterexample that can
//! be re-validated independently of the search that produced it.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

use crate::annihilators::{projection_generator_code, AnnihilatorSet, Side};
use crate::error::{Error, Result};
use crate::projections::{
    bound_code, central_projection_codes, dominated_code, equivalent_code, leq_code,
    projection_codes, BoundKind, EquivalenceWitness, Projection,
};
use crate::ring::{FiniteStarRing, RingElement};

/// A certified generalized right (or left) projection: xⁿe = xⁿ, and
/// xⁿy = 0 forces ey = 0 (left-handed duals for GLP).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrpResult {
    pub e: Projection,
    pub n: u32,
}

/// Search the annihilator chain and projection list for the generalized
/// right projection of x. Exponents are tried in increasing order until the
/// powers of x repeat, at which point every later exponent reproduces an
/// already-tested clause pair.
pub fn grp(r: &FiniteStarRing, x: RingElement) -> Result<Option<GrpResult>> {
    let xc = r.check_member(x)?;
    r.ensure_enumerable("grp search")?;
    let codes = r.carrier_codes();
    let projs = projection_codes(r)?;
    Ok(match grp_code(r, &codes, &projs, xc) {
        Some((e, n)) => Some(GrpResult {
            e: Projection::certify(r, r.element(e)?)?,
            n,
        }),
        None => None,
    })
}

/// GLP(x): fxⁿ = xⁿ and yxⁿ = 0 forces yf = 0. Implemented natively; the
/// identity glp(x) = grp(x*) is a tested invariant, not the implementation.
pub fn glp(r: &FiniteStarRing, x: RingElement) -> Result<Option<GrpResult>> {
    let xc = r.check_member(x)?;
    r.ensure_enumerable("glp search")?;
    let codes = r.carrier_codes();
    let projs = projection_codes(r)?;
    Ok(match glp_code(r, &codes, &projs, xc) {
        Some((e, n)) => Some(GrpResult {
            e: Projection::certify(r, r.element(e)?)?,
            n,
        }),
        None => None,
    })
}

pub(crate) fn grp_code(
    r: &FiniteStarRing,
    codes: &[u64],
    projs: &[u64],
    x: u64,
) -> Option<(u64, u32)> {
    let zero = r.zero_code();
    let mut seen = HashSet::new();
    let mut power = x;
    let mut n = 1u32;
    while seen.insert(power) {
        let ann: Vec<u64> = codes
            .iter()
            .copied()
            .filter(|&y| r.raw_mul(power, y) == zero)
            .collect();
        for &e in projs {
            if r.raw_mul(power, e) == power && ann.iter().all(|&y| r.raw_mul(e, y) == zero) {
                return Some((e, n));
            }
        }
        power = r.raw_mul(power, x);
        n += 1;
    }
    None
}

pub(crate) fn glp_code(
    r: &FiniteStarRing,
    codes: &[u64],
    projs: &[u64],
    x: u64,
) -> Option<(u64, u32)> {
    let zero = r.zero_code();
    let mut seen = HashSet::new();
    let mut power = x;
    let mut n = 1u32;
    while seen.insert(power) {
        let ann: Vec<u64> = codes
            .iter()
            .copied()
            .filter(|&y| r.raw_mul(y, power) == zero)
            .collect();
        for &e in projs {
            if r.raw_mul(e, power) == power && ann.iter().all(|&y| r.raw_mul(y, e) == zero) {
                return Some((e, n));
            }
        }
        power = r.raw_mul(power, x);
        n += 1;
    }
    None
}

/// Every certified (projection, exponent) pair for x, across all exponents
/// up to power repetition and with no early exit. Used to check that the
/// certified projection is unique.
pub(crate) fn grp_certificates_code(
    r: &FiniteStarRing,
    codes: &[u64],
    projs: &[u64],
    x: u64,
) -> Vec<(u64, u32)> {
    let zero = r.zero_code();
    let mut seen = HashSet::new();
    let mut power = x;
    let mut n = 1u32;
    let mut out = Vec::new();
    while seen.insert(power) {
        let ann: Vec<u64> = codes
            .iter()
            .copied()
            .filter(|&y| r.raw_mul(power, y) == zero)
            .collect();
        for &e in projs {
            if r.raw_mul(power, e) == power && ann.iter().all(|&y| r.raw_mul(e, y) == zero) {
                out.push((e, n));
            }
        }
        power = r.raw_mul(power, x);
        n += 1;
    }
    out
}

/// Verdict status for one classification property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    True,
    False,
    Skipped,
}

/// Machine-checkable evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// A single offending/witnessing element.
    Element { x: u64 },
    /// An offending pair of elements.
    Pair { x: u64, y: u64 },
    /// An offending pair of projections.
    ProjPair { e: u64, f: u64 },
    /// x -> g with r(x) = gR.
    RickartMap {
        total: u64,
        entries: Vec<(u64, u64)>,
        truncated: bool,
    },
    /// x -> (n, g) with r(xⁿ) = gR.
    GenRickartMap {
        total: u64,
        entries: Vec<(u64, u32, u64)>,
        truncated: bool,
    },
    /// x -> (e, n) with e = GRP(x) certified at exponent n.
    GrpMap {
        total: u64,
        entries: Vec<(u64, u64, u32)>,
        truncated: bool,
    },
    /// (e, f) -> witness element (equivalence witness or central h).
    PairMap {
        total: u64,
        entries: Vec<(u64, u64, u64)>,
        truncated: bool,
    },
    /// (e, f) -> equivalent nonzero subprojections (e0, f0).
    SubprojMap {
        total: u64,
        entries: Vec<(u64, u64, u64, u64)>,
        truncated: bool,
    },
    /// Number of instances checked for a universally quantified property.
    Count { checked: u64 },
}

const CERT_FULL_LIMIT: usize = 128;
const CERT_TRUNC_KEEP: usize = 16;

fn cap<T: Clone>(entries: Vec<T>) -> (u64, Vec<T>, bool) {
    let total = entries.len() as u64;
    if entries.len() <= CERT_FULL_LIMIT {
        (total, entries, false)
    } else {
        (total, entries[..CERT_TRUNC_KEEP].to_vec(), true)
    }
}

/// One property verdict with its evidence.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyVerdict {
    pub property: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyVerdict {
    fn holds(property: &'static str, witness: Certificate) -> Self {
        PropertyVerdict {
            property,
            status: Status::True,
            witness: Some(witness),
            counterexample: None,
            note: None,
        }
    }

    fn fails(property: &'static str, counterexample: Certificate) -> Self {
        PropertyVerdict {
            property,
            status: Status::False,
            witness: None,
            counterexample: Some(counterexample),
            note: None,
        }
    }

    fn skipped(property: &'static str, note: String) -> Self {
        PropertyVerdict {
            property,
            status: Status::Skipped,
            witness: None,
            counterexample: None,
            note: Some(note),
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }

    pub fn is_true(&self) -> bool {
        self.status == Status::True
    }

    pub fn is_false(&self) -> bool {
        self.status == Status::False
    }
}

/// Shared scan state for the classification passes over one ring.
pub(crate) struct Analyzer<'r> {
    pub ring: &'r FiniteStarRing,
    pub codes: Vec<u64>,
    pub projs: Vec<u64>,
}

impl<'r> Analyzer<'r> {
    pub fn new(ring: &'r FiniteStarRing) -> Result<Self> {
        ring.ensure_enumerable("classification")?;
        Ok(Analyzer {
            ring,
            codes: ring.carrier_codes(),
            projs: projection_codes(ring)?,
        })
    }

    fn ann_set(&self, power: u64) -> AnnihilatorSet {
        let zero = self.ring.zero_code();
        AnnihilatorSet {
            side: Side::Right,
            elements: self
                .codes
                .iter()
                .copied()
                .filter(|&y| self.ring.raw_mul(power, y) == zero)
                .collect(),
            generator_of: vec![power],
        }
    }

    pub(crate) fn rickart(&self) -> PropertyVerdict {
        let results: Vec<std::result::Result<(u64, u64), u64>> = self
            .codes
            .par_iter()
            .map(|&x| {
                let ann = self.ann_set(x);
                match projection_generator_code(self.ring, &ann).expect("ring is enumerable") {
                    Some(g) => Ok((x, g)),
                    None => Err(x),
                }
            })
            .collect();
        for res in &results {
            if let Err(x) = res {
                return PropertyVerdict::fails("rickart", Certificate::Element { x: *x })
                    .with_note(format!("r({x}) has no projection generator"));
            }
        }
        let entries: Vec<(u64, u64)> = results.into_iter().map(|r| r.unwrap()).collect();
        let (total, entries, truncated) = cap(entries);
        PropertyVerdict::holds(
            "rickart",
            Certificate::RickartMap {
                total,
                entries,
                truncated,
            },
        )
    }

    pub(crate) fn generalized_rickart(&self) -> PropertyVerdict {
        let results: Vec<std::result::Result<(u64, u32, u64), u64>> = self
            .codes
            .par_iter()
            .map(|&x| {
                let (chain, _) =
                    crate::annihilators::ann_chain_codes(self.ring, x).expect("enumerable");
                for (i, ann) in chain.iter().enumerate() {
                    if let Some(g) =
                        projection_generator_code(self.ring, ann).expect("enumerable")
                    {
                        return Ok((x, i as u32 + 1, g));
                    }
                }
                Err(x)
            })
            .collect();
        for res in &results {
            if let Err(x) = res {
                return PropertyVerdict::fails(
                    "generalized_rickart",
                    Certificate::Element { x: *x },
                )
                .with_note(format!(
                    "no power of {x} has a projection-generated right annihilator"
                ));
            }
        }
        let entries: Vec<(u64, u32, u64)> = results.into_iter().map(|r| r.unwrap()).collect();
        let (total, entries, truncated) = cap(entries);
        PropertyVerdict::holds(
            "generalized_rickart",
            Certificate::GenRickartMap {
                total,
                entries,
                truncated,
            },
        )
    }

    pub(crate) fn generalized_weakly_rickart(&self) -> PropertyVerdict {
        let results: Vec<std::result::Result<(u64, u64, u32), u64>> = self
            .codes
            .par_iter()
            .map(|&x| match grp_code(self.ring, &self.codes, &self.projs, x) {
                Some((e, n)) => Ok((x, e, n)),
                None => Err(x),
            })
            .collect();
        for res in &results {
            if let Err(x) = res {
                return PropertyVerdict::fails(
                    "generalized_weakly_rickart",
                    Certificate::Element { x: *x },
                )
                .with_note(format!("{x} has no generalized right projection"));
            }
        }
        let entries: Vec<(u64, u64, u32)> = results.into_iter().map(|r| r.unwrap()).collect();
        let (total, entries, truncated) = cap(entries);
        PropertyVerdict::holds(
            "generalized_weakly_rickart",
            Certificate::GrpMap {
                total,
                entries,
                truncated,
            },
        )
    }

    pub(crate) fn weakly_proper(&self) -> PropertyVerdict {
        let zero = self.ring.zero_code();
        let mut checked = 0u64;
        for &x in &self.codes {
            if self.ring.raw_mul(x, self.ring.raw_star(x)) != zero {
                continue;
            }
            checked += 1;
            if !self.is_nilpotent(x) {
                return PropertyVerdict::fails("weakly_proper", Certificate::Element { x })
                    .with_note(format!("x x* = 0 but {x} is not nilpotent"));
            }
        }
        PropertyVerdict::holds("weakly_proper", Certificate::Count { checked })
    }

    pub(crate) fn is_nilpotent(&self, x: u64) -> bool {
        let zero = self.ring.zero_code();
        let mut seen = HashSet::new();
        let mut power = x;
        while seen.insert(power) {
            if power == zero {
                return true;
            }
            power = self.ring.raw_mul(power, x);
        }
        power == zero
    }

    pub(crate) fn parallelogram_law(&self) -> PropertyVerdict {
        let mut checked = 0u64;
        for &e in &self.projs {
            for &f in &self.projs {
                let meet = bound_code(self.ring, e, f, BoundKind::Meet, &self.projs).found();
                let join = bound_code(self.ring, e, f, BoundKind::Join, &self.projs).found();
                let (Some(m), Some(j)) = (meet, join) else {
                    continue;
                };
                checked += 1;
                let d1 = self.ring.raw_sub(e, m);
                let d2 = self.ring.raw_sub(j, f);
                if equivalent_code(self.ring, d1, d2)
                    .expect("enumerable")
                    .is_none()
                {
                    return PropertyVerdict::fails(
                        "parallelogram_law",
                        Certificate::ProjPair { e, f },
                    )
                    .with_note(format!("e - e∧f = {d1} is not equivalent to e∨f - f = {d2}"));
                }
            }
        }
        PropertyVerdict::holds("parallelogram_law", Certificate::Count { checked })
    }

    pub(crate) fn has_pc(&self) -> PropertyVerdict {
        let zero = self.ring.zero_code();
        let mut entries = Vec::new();
        for &e in &self.projs {
            for &f in &self.projs {
                let touches = self
                    .codes
                    .iter()
                    .any(|&a| self.ring.raw_mul(self.ring.raw_mul(e, a), f) != zero);
                if !touches {
                    continue;
                }
                let mut found = None;
                'search: for &e0 in &self.projs {
                    if e0 == zero || !leq_code(self.ring, e0, e) {
                        continue;
                    }
                    for &f0 in &self.projs {
                        if f0 == zero || !leq_code(self.ring, f0, f) {
                            continue;
                        }
                        if equivalent_code(self.ring, e0, f0)
                            .expect("enumerable")
                            .is_some()
                        {
                            found = Some((e0, f0));
                            break 'search;
                        }
                    }
                }
                match found {
                    Some((e0, f0)) => entries.push((e, f, e0, f0)),
                    None => {
                        return PropertyVerdict::fails("pc", Certificate::ProjPair { e, f })
                            .with_note(
                                "eRf != 0 but no equivalent nonzero subprojections exist"
                                    .to_string(),
                            )
                    }
                }
            }
        }
        let (total, entries, truncated) = cap(entries);
        PropertyVerdict::holds(
            "pc",
            Certificate::SubprojMap {
                total,
                entries,
                truncated,
            },
        )
    }

    fn generalized_comparable(
        &self,
        centrals: &[u64],
        one: u64,
        e: u64,
        f: u64,
    ) -> Result<Option<u64>> {
        for &h in centrals {
            let he = self.ring.raw_mul(h, e);
            let hf = self.ring.raw_mul(h, f);
            let ce = self.ring.raw_mul(self.ring.raw_sub(one, h), e);
            let cf = self.ring.raw_mul(self.ring.raw_sub(one, h), f);
            if dominated_code(self.ring, he, hf, &self.projs)?
                && dominated_code(self.ring, cf, ce, &self.projs)?
            {
                return Ok(Some(h));
            }
        }
        Ok(None)
    }

    pub(crate) fn has_gc(&self, orthogonal_only: bool) -> Result<PropertyVerdict> {
        let property: &'static str = if orthogonal_only { "orthogonal_gc" } else { "gc" };
        let one = self.ring.unity_code().ok_or(Error::NoUnity)?;
        let zero = self.ring.zero_code();
        let centrals = central_projection_codes(self.ring)?;
        let mut entries = Vec::new();
        for &e in &self.projs {
            for &f in &self.projs {
                if orthogonal_only && self.ring.raw_mul(e, f) != zero {
                    continue;
                }
                match self.generalized_comparable(&centrals, one, e, f)? {
                    Some(h) => entries.push((e, f, h)),
                    None => {
                        return Ok(PropertyVerdict::fails(
                            property,
                            Certificate::ProjPair { e, f },
                        )
                        .with_note(
                            "no central projection splits the pair into dominations".to_string(),
                        ))
                    }
                }
            }
        }
        let (total, entries, truncated) = cap(entries);
        Ok(PropertyVerdict::holds(
            property,
            Certificate::PairMap {
                total,
                entries,
                truncated,
            },
        ))
    }

    /// Check the proof-internal bound formulas e∨f = f + GRP(e(1-f)) and
    /// e∧f = e - GLP(e(1-f)) against the poset bounds, where both sides are
    /// defined. Recorded, never assumed.
    fn bound_formula_notes(&self, notes: &mut Vec<String>) {
        let Some(one) = self.ring.unity_code() else {
            return;
        };
        let mut join_checked = 0u64;
        let mut join_agree = 0u64;
        let mut meet_checked = 0u64;
        let mut meet_agree = 0u64;
        let mut disagreements: Vec<String> = Vec::new();
        for &e in &self.projs {
            for &f in &self.projs {
                let x = self.ring.raw_mul(e, self.ring.raw_sub(one, f));
                if let Some((g, _)) = grp_code(self.ring, &self.codes, &self.projs, x) {
                    if let Some(j) =
                        bound_code(self.ring, e, f, BoundKind::Join, &self.projs).found()
                    {
                        join_checked += 1;
                        if self.ring.raw_add(f, g) == j {
                            join_agree += 1;
                        } else if disagreements.len() < 4 {
                            disagreements.push(format!("join(e={e}, f={f})"));
                        }
                    }
                }
                if let Some((g, _)) = glp_code(self.ring, &self.codes, &self.projs, x) {
                    if let Some(m) =
                        bound_code(self.ring, e, f, BoundKind::Meet, &self.projs).found()
                    {
                        meet_checked += 1;
                        if self.ring.raw_sub(e, g) == m {
                            meet_agree += 1;
                        } else if disagreements.len() < 4 {
                            disagreements.push(format!("meet(e={e}, f={f})"));
                        }
                    }
                }
            }
        }
        if join_checked + meet_checked > 0 {
            notes.push(format!(
                "bound formulas vs poset: join f + GRP(e(1-f)) agrees on {join_agree}/{join_checked} \
                 pairs, meet e - GLP(e(1-f)) agrees on {meet_agree}/{meet_checked} pairs{}",
                if disagreements.is_empty() {
                    String::new()
                } else {
                    format!("; disagreements at {}", disagreements.join(", "))
                }
            ));
        }
    }

    /// GRP certificate audit. At a fixed exponent the certified projection
    /// is provably unique; a same-exponent collision goes to `deviations`.
    /// Across exponents distinct projections can genuinely certify (for a
    /// nilpotent x, the zero projection certifies once xⁿ = 0), which is
    /// flagged as an informational note.
    fn grp_uniqueness_notes(&self, notes: &mut Vec<String>, deviations: &mut Vec<String>) {
        if self.codes.len() as u64 > self.ring.options().validate_bound {
            return;
        }
        let mut multi_exponent = 0u64;
        let mut example = None;
        for &x in &self.codes {
            let certs = grp_certificates_code(self.ring, &self.codes, &self.projs, x);
            let mut by_n: std::collections::BTreeMap<u32, Vec<u64>> =
                std::collections::BTreeMap::new();
            for &(e, n) in &certs {
                by_n.entry(n).or_default().push(e);
            }
            for (n, es) in &by_n {
                if es.len() > 1 {
                    deviations.push(format!(
                        "grp uniqueness violated at fixed exponent {n} for x = {x}: {es:?}"
                    ));
                }
            }
            let mut distinct: Vec<u64> = certs.iter().map(|&(e, _)| e).collect();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() > 1 {
                multi_exponent += 1;
                example.get_or_insert_with(|| (x, certs.clone()));
            }
        }
        if let Some((x, certs)) = example {
            notes.push(format!(
                "grp certificates vary with the exponent for {multi_exponent} elements, \
                 e.g. x = {x}: {certs:?} (unique at each fixed exponent)"
            ));
        }
    }
}

/// The full classification record for one ring.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub name: String,
    pub construction: String,
    pub size: u64,
    pub unity: Option<u64>,
    pub projection_count: Option<u64>,
    /// Full projection list when small enough to print.
    pub projections: Option<Vec<u64>>,
    pub properties: Vec<PropertyVerdict>,
    pub notes: Vec<String>,
    pub deviations: Vec<String>,
}

impl ClassificationReport {
    pub fn property(&self, name: &str) -> Option<&PropertyVerdict> {
        self.properties.iter().find(|p| p.property == name)
    }

    /// Internal consistency: rickart ⇒ generalized rickart ⇒ generalized
    /// weakly rickart, and generalized rickart ⟺ weakly + unity.
    pub fn consistency_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let get = |n: &str| self.property(n).map(|p| p.status);
        let implies = |a: Option<Status>, b: Option<Status>| {
            !(a == Some(Status::True) && b == Some(Status::False))
        };
        if !implies(get("rickart"), get("generalized_rickart")) {
            out.push("rickart does not imply generalized_rickart".to_string());
        }
        if !implies(get("generalized_rickart"), get("generalized_weakly_rickart")) {
            out.push("generalized_rickart does not imply generalized_weakly_rickart".to_string());
        }
        if let (Some(gr), Some(gw)) = (get("generalized_rickart"), get("generalized_weakly_rickart")) {
            if gr != Status::Skipped && gw != Status::Skipped {
                let expect = gw == Status::True && self.unity.is_some();
                if (gr == Status::True) != expect {
                    out.push(
                        "generalized_rickart must equal weakly + unity (two-route check)"
                            .to_string(),
                    );
                }
            }
        }
        out
    }
}

const PROPERTY_ORDER: [&str; 8] = [
    "rickart",
    "generalized_rickart",
    "generalized_weakly_rickart",
    "weakly_proper",
    "parallelogram_law",
    "pc",
    "gc",
    "orthogonal_gc",
];

pub fn property_names() -> &'static [&'static str] {
    &PROPERTY_ORDER
}

fn construction_deviations(construction: &str) -> Vec<String> {
    let mut out = Vec::new();
    if construction.contains("quaternion_z2") {
        out.push(
            "quaternion conjugation coincides with the identity involution in characteristic 2"
                .to_string(),
        );
    }
    if construction.contains("poly_quotient") {
        out.push(
            "poly_quotient(p, n) is the finite F_p analog of the characteristic-0 local ring \
             C[x,y]/(x,y)^n"
                .to_string(),
        );
    }
    out
}

/// Classify a fully enumerable ring.
pub fn classify_ring(r: &FiniteStarRing) -> Result<ClassificationReport> {
    classify_named(r, r.construction().to_string())
}

pub fn classify_named(r: &FiniteStarRing, name: String) -> Result<ClassificationReport> {
    let az = Analyzer::new(r)?;
    let mut properties = vec![
        az.rickart(),
        az.generalized_rickart(),
        az.generalized_weakly_rickart(),
        az.weakly_proper(),
        az.parallelogram_law(),
        az.has_pc(),
    ];
    for orthogonal_only in [false, true] {
        let prop: &'static str = if orthogonal_only { "orthogonal_gc" } else { "gc" };
        match az.has_gc(orthogonal_only) {
            Ok(v) => properties.push(v),
            Err(Error::NoUnity) => {
                properties.push(PropertyVerdict::skipped(
                    prop,
                    "requires a unity element".to_string(),
                ));
            }
            Err(e) => return Err(e),
        }
    }
    let mut notes = Vec::new();
    az.bound_formula_notes(&mut notes);
    let mut deviations = construction_deviations(r.construction());
    az.grp_uniqueness_notes(&mut notes, &mut deviations);
    let report = ClassificationReport {
        name,
        construction: r.construction().to_string(),
        size: r.size(),
        unity: r.unity_code(),
        projection_count: Some(az.projs.len() as u64),
        projections: if az.projs.len() <= 512 {
            Some(az.projs.clone())
        } else {
            None
        },
        properties,
        notes,
        deviations,
    };
    debug_assert!(
        report.consistency_violations().is_empty(),
        "classification inconsistent: {:?}",
        report.consistency_violations()
    );
    Ok(report)
}

/// Per-property entry points mirroring the report content.
pub fn is_rickart(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Ok(Analyzer::new(r)?.rickart())
}

pub fn is_generalized_rickart(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Ok(Analyzer::new(r)?.generalized_rickart())
}

pub fn is_generalized_weakly_rickart(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Ok(Analyzer::new(r)?.generalized_weakly_rickart())
}

pub fn weakly_proper(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Ok(Analyzer::new(r)?.weakly_proper())
}

pub fn parallelogram_law(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Ok(Analyzer::new(r)?.parallelogram_law())
}

pub fn has_pc(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Ok(Analyzer::new(r)?.has_pc())
}

pub fn has_gc(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Analyzer::new(r)?.has_gc(false)
}

pub fn has_orthogonal_gc(r: &FiniteStarRing) -> Result<PropertyVerdict> {
    Analyzer::new(r)?.has_gc(true)
}

/// The certified orthogonal decomposition of a projection pair:
/// e = e' + e'', f = f' + f'' with e' ~ f' and ef'' = fe'' = 0.
#[derive(Debug, Clone)]
pub struct OrthogonalDecomposition {
    pub e_prime: Projection,
    pub e_second: Projection,
    pub f_prime: Projection,
    pub f_second: Projection,
    pub witness: EquivalenceWitness,
}

/// e' = GLP(ef), f' = GRP(ef), e'' = e - e', f'' = f - f'; `None` when the
/// generalized projections do not exist or any certificate fails.
pub fn orthogonal_decomposition(
    r: &FiniteStarRing,
    e: Projection,
    f: Projection,
) -> Result<Option<OrthogonalDecomposition>> {
    let az = Analyzer::new(r)?;
    let ec = r.check_member(e.element())?;
    let fc = r.check_member(f.element())?;
    let ef = r.raw_mul(ec, fc);
    let Some((ep, _)) = glp_code(r, &az.codes, &az.projs, ef) else {
        return Ok(None);
    };
    let Some((fp, _)) = grp_code(r, &az.codes, &az.projs, ef) else {
        return Ok(None);
    };
    // all four parts must be projections with the right order relations
    if !leq_code(r, ep, ec) || !leq_code(r, fp, fc) {
        return Ok(None);
    }
    let es = r.raw_sub(ec, ep);
    let fs = r.raw_sub(fc, fp);
    let all_proj = [ep, es, fp, fs]
        .iter()
        .all(|&p| crate::projections::is_projection_code(r, p));
    if !all_proj {
        return Ok(None);
    }
    let Some(w) = equivalent_code(r, ep, fp)? else {
        return Ok(None);
    };
    let zero = r.zero_code();
    if r.raw_mul(ec, fs) != zero || r.raw_mul(fc, es) != zero {
        return Ok(None);
    }
    if r.raw_add(ep, es) != ec || r.raw_add(fp, fs) != fc {
        return Ok(None);
    }
    Ok(Some(OrthogonalDecomposition {
        e_prime: Projection::certify(r, r.element(ep)?)?,
        e_second: Projection::certify(r, r.element(es)?)?,
        f_prime: Projection::certify(r, r.element(fp)?)?,
        f_second: Projection::certify(r, r.element(fs)?)?,
        witness: EquivalenceWitness {
            w: r.element(w)?,
        },
    }))
}

/// Classification in witness mode: certify or refute just the supplied
/// candidate elements on a ring too large to scan. A refuted witness decides
/// `generalized_weakly_rickart = false` (and with it the two stronger
/// properties); everything else is reported as skipped.
pub fn classify_witness(
    r: &FiniteStarRing,
    name: String,
    witnesses: &[RingElement],
) -> Result<ClassificationReport> {
    let mut properties = Vec::new();
    let mut refuted: Option<(u64, crate::witness::MatrixGrpScan)> = None;
    let mut passed: Vec<u64> = Vec::new();
    let mut scan_note = None;
    for &x in witnesses {
        let xc = r.check_member(x)?;
        let scan = crate::witness::matrix_grp_scan(r, x)?;
        scan_note.get_or_insert_with(|| {
            format!(
                "witness scan: {} star-fixed candidates, {} projections",
                scan.candidates, scan.projections
            )
        });
        if scan.result.is_none() {
            refuted = Some((xc, scan));
            break;
        }
        passed.push(xc);
    }
    match &refuted {
        Some((x, scan)) => {
            properties.push(
                PropertyVerdict::fails("rickart", Certificate::Element { x: *x })
                    .with_note("implied by generalized_weakly_rickart = false".to_string()),
            );
            properties.push(
                PropertyVerdict::fails("generalized_rickart", Certificate::Element { x: *x })
                    .with_note("implied by generalized_weakly_rickart = false".to_string()),
            );
            properties.push(
                PropertyVerdict::fails(
                    "generalized_weakly_rickart",
                    Certificate::Element { x: *x },
                )
                .with_note(format!(
                    "no projection satisfies both GRP clauses for the witness: scanned {} \
                     star-fixed candidates, {} of them projections, across {} distinct powers",
                    scan.candidates, scan.projections, scan.distinct_powers
                )),
            );
        }
        None => {
            let note = format!(
                "witness mode: elements {passed:?} all possess a GRP; full classification \
                 is out of scan bounds"
            );
            for prop in [
                "rickart",
                "generalized_rickart",
                "generalized_weakly_rickart",
            ] {
                properties.push(PropertyVerdict::skipped(prop, note.clone()));
            }
        }
    }
    for prop in [
        "weakly_proper",
        "parallelogram_law",
        "pc",
        "gc",
        "orthogonal_gc",
    ] {
        properties.push(PropertyVerdict::skipped(
            prop,
            "witness mode: full scans out of bounds".to_string(),
        ));
    }
    let mut notes = Vec::new();
    if let Some(n) = scan_note {
        notes.push(n);
    }
    Ok(ClassificationReport {
        name,
        construction: r.construction().to_string(),
        size: r.size(),
        unity: r.unity_code(),
        projection_count: None,
        projections: None,
        properties,
        notes,
        deviations: construction_deviations(r.construction()),
    })
}
