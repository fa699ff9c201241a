//! Shared helpers for the integration suites.

use rickart::catalog;
use rickart::ring::FiniteStarRing;

/// Every catalog ring that admits full scans (everything but m4z4), built
/// once per call with default options.
pub fn scannable_catalog_rings() -> Vec<(&'static str, FiniteStarRing)> {
    catalog::entries()
        .iter()
        .filter(|e| !e.witness_mode)
        .map(|e| (e.name, e.build().expect("catalog entry builds")))
        .collect()
}

#[allow(dead_code)]
pub fn build(name: &str) -> FiniteStarRing {
    catalog::find(name)
        .expect("known catalog entry")
        .build()
        .expect("catalog entry builds")
}
