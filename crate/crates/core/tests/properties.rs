//! Property suites over the catalog: annihilator chains, GRP/GLP duality
//! and per-exponent uniqueness, the numbered-proposition instance checks,
//! the projection order/equivalence axioms, and randomized structural
//! invariants.

mod common;

use proptest::prelude::*;

use rickart::annihilators::{ann_chain, left_annihilator, right_annihilator};
use rickart::classify::{classify_named, Status};
use rickart::error::Error;
use rickart::parse::parse_construction;
use rickart::projections::{
    enumerate_projections, equivalent, proj_bound, proj_leq, very_orthogonal, BoundKind,
};
use rickart::ring::{build_ring, CayleySpec, ConstructionSpec};
use rickart::theorems::{run_suite, CheckStatus, SuiteOptions};

use common::scannable_catalog_rings;

#[test]
fn annihilator_chains_ascend_and_stabilize_permanently() {
    for (name, r) in scannable_catalog_rings() {
        for x in r.elements().unwrap() {
            let res = ann_chain(&r, x).unwrap();
            for w in res.chain.windows(2) {
                assert!(
                    w[0].elements.iter().all(|&c| w[1].contains(c)),
                    "{name}: chain of {x} is not ascending"
                );
            }
            // permanence for several exponents past stabilization
            let stable = res.stable().elements.clone();
            for extra in 1..=3u32 {
                let m = res.stabilization_n + extra;
                let xm = r.pow(x, m).unwrap();
                let ann = right_annihilator(&r, &[xm]).unwrap();
                assert_eq!(ann.elements, stable, "{name}: r(x^{m}) moved after stabilization");
            }
        }
    }
}

#[test]
fn annihilator_duality_left_equals_starred_right() {
    for (name, r) in scannable_catalog_rings() {
        for x in r.elements().unwrap() {
            let left = left_annihilator(&r, &[x]).unwrap();
            let xs = r.star(x).unwrap();
            let mut dual: Vec<u64> = right_annihilator(&r, &[xs])
                .unwrap()
                .elements
                .iter()
                .map(|&c| r.star(r.element(c).unwrap()).unwrap().code())
                .collect();
            dual.sort_unstable();
            assert_eq!(left.elements, dual, "{name}: duality fails at {x}");
        }
    }
}

/// GLP computed natively equals GRP of the star, with the same exponent;
/// and at each fixed exponent at most one projection certifies.
#[test]
fn grp_glp_duality_and_per_exponent_uniqueness() {
    for (name, r) in scannable_catalog_rings() {
        let projs: Vec<u64> = enumerate_projections(&r)
            .unwrap()
            .iter()
            .map(|p| p.code())
            .collect();
        for x in r.elements().unwrap() {
            let g = rickart::classify::glp(&r, x).unwrap();
            let d = rickart::classify::grp(&r, r.star(x).unwrap()).unwrap();
            assert_eq!(
                g.map(|v| (v.e.code(), v.n)),
                d.map(|v| (v.e.code(), v.n)),
                "{name}: GLP({x}) != GRP({x}*)"
            );
            // per-exponent uniqueness, checked directly from the definition
            let zero = r.zero_code();
            let mut power = x.code();
            let mut seen = std::collections::HashSet::new();
            while seen.insert(power) {
                let ann: Vec<u64> = r
                    .carrier_codes()
                    .into_iter()
                    .filter(|&y| {
                        r.mul(r.element(power).unwrap(), r.element(y).unwrap())
                            .unwrap()
                            .code()
                            == zero
                    })
                    .collect();
                let certified: Vec<u64> = projs
                    .iter()
                    .copied()
                    .filter(|&e| {
                        let pe = r
                            .mul(r.element(power).unwrap(), r.element(e).unwrap())
                            .unwrap()
                            .code();
                        pe == power
                            && ann.iter().all(|&y| {
                                r.mul(r.element(e).unwrap(), r.element(y).unwrap())
                                    .unwrap()
                                    .code()
                                    == zero
                            })
                    })
                    .collect();
                assert!(
                    certified.len() <= 1,
                    "{name}: two projections {certified:?} certify x = {x} at one exponent"
                );
                power = r
                    .mul(r.element(power).unwrap(), x)
                    .unwrap()
                    .code();
            }
        }
    }
}

/// Props 2.3(2), 2.6, 2.7, 2.8, 2.10, 2.11 as instance checks: the suite
/// must produce no failure on any catalog ring.
#[test]
fn proposition_instance_checks_have_zero_failures() {
    let selection: Vec<String> = [
        "prop-2.3", "prop-2.6", "prop-2.7", "prop-2.8", "prop-2.10", "prop-2.11",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for (name, r) in scannable_catalog_rings() {
        let checks = run_suite(&r, Some(&selection), &SuiteOptions::default()).unwrap();
        for c in &checks {
            assert_ne!(
                c.status,
                CheckStatus::Fail,
                "{name}: {} failed: {} ({:?})",
                c.id,
                c.detail,
                c.counterexample
            );
        }
    }
}

#[test]
fn equivalence_is_an_equivalence_relation_on_catalog_rings() {
    for (name, r) in scannable_catalog_rings() {
        let projs = enumerate_projections(&r).unwrap();
        if projs.len() > 100 {
            continue;
        }
        for &e in &projs {
            assert!(equivalent(&r, e, e).unwrap().is_some(), "{name}: not reflexive");
            for &f in &projs {
                let ef = equivalent(&r, e, f).unwrap().is_some();
                assert_eq!(
                    ef,
                    equivalent(&r, f, e).unwrap().is_some(),
                    "{name}: not symmetric"
                );
                if !ef {
                    continue;
                }
                for &g in &projs {
                    if equivalent(&r, f, g).unwrap().is_some() {
                        assert!(
                            equivalent(&r, e, g).unwrap().is_some(),
                            "{name}: not transitive at ({}, {}, {})",
                            e.code(),
                            f.code(),
                            g.code()
                        );
                    }
                }
            }
        }
    }
}

/// Position-p' ⟺ GLP/GRP characterization and parallelogram ⟺
/// p'-implies-equivalence, via the theorem suite on unital rings.
#[test]
fn position_p_prime_characterizations_hold() {
    let selection: Vec<String> = ["prop-4-pprime", "prop-4-plaw-equiv"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for (name, r) in scannable_catalog_rings() {
        let checks = run_suite(&r, Some(&selection), &SuiteOptions::default()).unwrap();
        for c in &checks {
            assert_ne!(c.status, CheckStatus::Fail, "{name}: {} — {}", c.id, c.detail);
        }
    }
}

/// Very orthogonal pairs are orthogonal, kill each other's generalized
/// projections, and satisfy eRf = 0 (scanned directly, not via the suite).
#[test]
fn very_orthogonal_implications() {
    for (name, r) in scannable_catalog_rings() {
        let projs = enumerate_projections(&r).unwrap();
        for &e in &projs {
            for &f in &projs {
                let Some(_h) = very_orthogonal(&r, e.element(), f.element()).unwrap() else {
                    continue;
                };
                let ef = r.mul(e.element(), f.element()).unwrap();
                assert_eq!(ef.code(), r.zero_code(), "{name}: not orthogonal");
                let ge = rickart::classify::grp(&r, e.element()).unwrap().unwrap();
                let lf = rickart::classify::glp(&r, f.element()).unwrap().unwrap();
                let prod = r.mul(ge.e.element(), lf.e.element()).unwrap();
                assert_eq!(prod.code(), r.zero_code(), "{name}: GRP·GLP != 0");
                for a in r.elements().unwrap() {
                    let eaf = r
                        .mul(r.mul(e.element(), a).unwrap(), f.element())
                        .unwrap();
                    assert_eq!(eaf.code(), r.zero_code(), "{name}: eRf != 0");
                }
            }
        }
    }
}

/// The report's bound-formula cross-check must agree with the poset on
/// every generalized Rickart catalog ring (recorded, then asserted here).
#[test]
fn grp_join_formula_agrees_with_poset_bounds() {
    for (name, r) in scannable_catalog_rings() {
        let report = classify_named(&r, name.to_string()).unwrap();
        if report.property("generalized_rickart").unwrap().status != Status::True {
            continue;
        }
        for note in &report.notes {
            if note.starts_with("bound formulas") {
                assert!(
                    !note.contains("disagreements"),
                    "{name}: {note}"
                );
            }
        }
    }
}

#[test]
fn meet_join_soundness_on_catalog_rings() {
    for (name, r) in scannable_catalog_rings() {
        let projs = enumerate_projections(&r).unwrap();
        if projs.len() > 40 {
            continue;
        }
        for &e in &projs {
            for &f in &projs {
                if let Some(m) = proj_bound(&r, e, f, BoundKind::Meet).unwrap().found() {
                    assert!(proj_leq(&r, m, e).unwrap() && proj_leq(&r, m, f).unwrap());
                    for &g in &projs {
                        if proj_leq(&r, g, e).unwrap() && proj_leq(&r, g, f).unwrap() {
                            assert!(proj_leq(&r, g, m).unwrap(), "{name}: meet not greatest");
                        }
                    }
                }
                if let Some(j) = proj_bound(&r, e, f, BoundKind::Join).unwrap().found() {
                    assert!(proj_leq(&r, e, j).unwrap() && proj_leq(&r, f, j).unwrap());
                    for &g in &projs {
                        if proj_leq(&r, e, g).unwrap() && proj_leq(&r, f, g).unwrap() {
                            assert!(proj_leq(&r, j, g).unwrap(), "{name}: join not least");
                        }
                    }
                }
            }
        }
    }
}

/// A classification counterexample must reproduce when re-run through the
/// underlying operation (soundness of emitted certificates).
#[test]
fn counterexamples_reproduce_in_isolation() {
    let r = common::build("m2z3");
    let report = classify_named(&r, "m2z3".into()).unwrap();
    let plaw = report.property("parallelogram_law").unwrap();
    let Some(rickart::classify::Certificate::ProjPair { e, f }) = plaw.counterexample else {
        panic!("expected a projection-pair counterexample");
    };
    let pe = rickart::projections::Projection::certify(&r, r.element(e).unwrap()).unwrap();
    let pf = rickart::projections::Projection::certify(&r, r.element(f).unwrap()).unwrap();
    let m = proj_bound(&r, pe, pf, BoundKind::Meet).unwrap().found().unwrap();
    let j = proj_bound(&r, pe, pf, BoundKind::Join).unwrap().found().unwrap();
    let d1 = r.sub(pe.element(), m.element()).unwrap();
    let d2 = r.sub(j.element(), pf.element()).unwrap();
    let p1 = rickart::projections::Projection::certify(&r, d1).unwrap();
    let p2 = rickart::projections::Projection::certify(&r, d2).unwrap();
    assert!(equivalent(&r, p1, p2).unwrap().is_none(), "counterexample must re-verify");
}

fn squarefree(mut n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        while n.is_multiple_of(d) {
            n /= d;
        }
        d += 1;
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Z_n is always generalized Rickart; it is Rickart exactly when n is
    /// squarefree (no nilpotents).
    #[test]
    fn zmod_classification_matches_number_theory(n in 2u64..60) {
        let r = build_ring(&ConstructionSpec::ZMod(n)).unwrap();
        let report = classify_named(&r, format!("zmod{n}")).unwrap();
        prop_assert_eq!(
            report.property("generalized_rickart").unwrap().status,
            Status::True
        );
        let expect = if squarefree(n) { Status::True } else { Status::False };
        prop_assert_eq!(report.property("rickart").unwrap().status, expect);
    }

    /// Corrupting one multiplication cell of a valid table is always caught
    /// by axiom validation.
    #[test]
    fn corrupted_cayley_tables_are_rejected(
        n in 3u64..8,
        cell in 0usize..48,
        delta in 1u64..7,
    ) {
        let r = build_ring(&ConstructionSpec::ZMod(n)).unwrap();
        let dense = r.to_dense().unwrap();
        let nn = (n * n) as usize;
        let mut mul: Vec<u64> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a * b) % n))
            .collect();
        let add: Vec<u64> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        let idx = cell % nn;
        mul[idx] = (mul[idx] + (delta % (n - 1)) + 1) % n;
        let spec = ConstructionSpec::CayleyTable(CayleySpec {
            size: n,
            add,
            mul,
            star: (0..n).collect(),
        });
        let err = build_ring(&spec);
        prop_assert!(matches!(err, Err(Error::AxiomViolation { .. })),
            "corruption at cell {idx} must be caught, got {err:?}");
        let _ = dense;
    }

    /// Construction expressions render and re-parse to the same tree.
    #[test]
    fn construction_grammar_round_trips(
        n in 2u64..12,
        k in 1u32..3,
        p_idx in 0usize..3,
        kind_idx in 0usize..5,
        tri_n in 2u32..5,
    ) {
        let p = [2u64, 3, 5][p_idx];
        let kind = [
            rickart::ring::TriangularKind::S,
            rickart::ring::TriangularKind::A,
            rickart::ring::TriangularKind::B,
            rickart::ring::TriangularKind::U,
            rickart::ring::TriangularKind::V,
        ][kind_idx];
        let specs = vec![
            ConstructionSpec::ZMod(n),
            ConstructionSpec::MatrixRing(Box::new(ConstructionSpec::ZMod(n)), k),
            ConstructionSpec::PolyQuotient { p, n: tri_n },
            ConstructionSpec::GroupAlgebra { p, invariants: vec![1, 2] },
            ConstructionSpec::Triangular {
                kind,
                n: tri_n,
                base: Box::new(ConstructionSpec::ZMod(n)),
            },
            ConstructionSpec::DirectSum(
                Box::new(ConstructionSpec::ZMod(n)),
                Box::new(ConstructionSpec::QuaternionZ2),
            ),
            ConstructionSpec::Unitify {
                base: Box::new(ConstructionSpec::ZMod(p)),
                p,
            },
        ];
        for spec in specs {
            let text = spec.to_string();
            let parsed = parse_construction(&text).unwrap();
            prop_assert_eq!(parsed, spec);
        }
    }
}

/// The subring operations feed the theorem suite; spot-check that they stay
/// closed and unital where expected on a noncommutative ring.
#[test]
fn subring_surfaces_behave_on_m2z3() {
    let r = common::build("m2z3");
    let center = r.center().unwrap();
    assert_eq!(center.size(), 3);
    assert!(center.unity_code().is_some());
    let projs = enumerate_projections(&r).unwrap();
    for e in projs {
        let corner = r.corner(e.element()).unwrap();
        assert_eq!(corner.unity_code(), Some(e.code()));
    }
}
