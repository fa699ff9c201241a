//! Built-in example rings with their expected classification fragments.
//!
//! The expected fragments are the regression backbone: `classify` on every
//! catalog entry must reproduce them exactly.

use serde::Serialize;

use crate::error::Result;
use crate::ring::{
    build_ring_with, BuildOptions, CayleySpec, ConstructionSpec, FiniteStarRing, TriangularKind,
};

/// A named example ring, its construction, and the classification verdicts
/// it is expected to produce.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    /// (property, expected verdict) pairs checked by the regression suite.
    pub expected: &'static [(&'static str, bool)],
    pub provenance: &'static str,
    /// Too large for full scans; classify/prove need --witness-mode.
    pub witness_mode: bool,
    #[serde(skip)]
    build: fn() -> ConstructionSpec,
    /// Built-in witness element (matrix entries, row-major) for
    /// witness-mode entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_coords: Option<&'static [u64]>,
}

impl CatalogEntry {
    pub fn construction(&self) -> ConstructionSpec {
        (self.build)()
    }

    pub fn build(&self) -> Result<FiniteStarRing> {
        self.build_with(&BuildOptions::default())
    }

    pub fn build_with(&self, opts: &BuildOptions) -> Result<FiniteStarRing> {
        build_ring_with(&self.construction(), opts)
    }
}

fn zmod(n: u64) -> Box<ConstructionSpec> {
    Box::new(ConstructionSpec::ZMod(n))
}

/// The 2-element zero-product ring, presented by tables; isomorphic to the
/// non-unital *-subring {0, 2} of Z_4 (code 1 plays the role of 2).
fn zero_square_two() -> ConstructionSpec {
    ConstructionSpec::CayleyTable(CayleySpec {
        size: 2,
        add: vec![0, 1, 1, 0],
        mul: vec![0, 0, 0, 0],
        star: vec![0, 1],
    })
}

/// Row of ones: the witness refuting a GRP in M_4(Z_4).
const M4Z4_WITNESS: [u64; 16] = [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0];

const GEN_NOT_RICKART: &[(&str, bool)] = &[
    ("rickart", false),
    ("generalized_rickart", true),
    ("generalized_weakly_rickart", true),
    ("weakly_proper", true),
];

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "zmod4",
        summary: "Z/4Z with the identity involution",
        expected: GEN_NOT_RICKART,
        provenance: "generalized Rickart but not Rickart: r(2) = {0,2} has no projection generator",
        witness_mode: false,
        build: || ConstructionSpec::ZMod(4),
        witness_coords: None,
    },
    CatalogEntry {
        name: "zmod12",
        summary: "Z/12Z; projections 0, 1, 4, 9 with GRP(2) = 4 and GLP(3) = 9",
        expected: GEN_NOT_RICKART,
        provenance: "GRP(2)·GLP(3) = 0 while 2·3 = 6 ≠ 0 (converse of the product rule fails)",
        witness_mode: false,
        build: || ConstructionSpec::ZMod(12),
        witness_coords: None,
    },
    CatalogEntry {
        name: "m2z3",
        summary: "2x2 matrices over Z_3 with transpose involution",
        expected: &[
            ("parallelogram_law", false),
            ("pc", false),
            ("gc", false),
        ],
        provenance: "E11 and the all-twos matrix are inequivalent; PC, GC and the parallelogram law all fail",
        witness_mode: false,
        build: || ConstructionSpec::MatrixRing(zmod(3), 2),
        witness_coords: None,
    },
    CatalogEntry {
        name: "m4z4",
        summary: "4x4 matrices over Z_4 (witness mode: 2^32 elements)",
        expected: &[("generalized_weakly_rickart", false)],
        provenance: "the row-of-ones matrix has no generalized right projection",
        witness_mode: true,
        build: || ConstructionSpec::MatrixRing(zmod(4), 4),
        witness_coords: Some(&M4Z4_WITNESS),
    },
    CatalogEntry {
        name: "quaternion-z2",
        summary: "Hamilton quaternions over Z_2 (16 elements, commutative)",
        expected: GEN_NOT_RICKART,
        provenance: "every element is invertible or nilpotent; generalized Rickart but not Rickart",
        witness_mode: false,
        build: || ConstructionSpec::QuaternionZ2,
        witness_coords: None,
    },
    CatalogEntry {
        name: "f2c2",
        summary: "group algebra F_2[C_2] (4 elements)",
        expected: GEN_NOT_RICKART,
        provenance: "finite local group algebra; r(1+g) = {0, 1+g} has no projection generator",
        witness_mode: false,
        build: || ConstructionSpec::GroupAlgebra {
            p: 2,
            invariants: vec![1],
        },
        witness_coords: None,
    },
    CatalogEntry {
        name: "polyquot-2-2",
        summary: "F_2[x,y]/(x,y)^2 (8 elements, local)",
        expected: GEN_NOT_RICKART,
        provenance: "finite analog of the complex local-ring example; every element is a unit or nilpotent",
        witness_mode: false,
        build: || ConstructionSpec::PolyQuotient { p: 2, n: 2 },
        witness_coords: None,
    },
    CatalogEntry {
        name: "polyquot-2-3",
        summary: "F_2[x,y]/(x,y)^3 (64 elements, local)",
        expected: GEN_NOT_RICKART,
        provenance: "finite analog of the complex local-ring example",
        witness_mode: false,
        build: || ConstructionSpec::PolyQuotient { p: 2, n: 3 },
        witness_coords: None,
    },
    CatalogEntry {
        name: "polyquot-3-2",
        summary: "F_3[x,y]/(x,y)^2 (27 elements, local)",
        expected: GEN_NOT_RICKART,
        provenance: "finite analog of the complex local-ring example",
        witness_mode: false,
        build: || ConstructionSpec::PolyQuotient { p: 3, n: 2 },
        witness_coords: None,
    },
    CatalogEntry {
        name: "zmod8",
        summary: "Z/8Z",
        expected: GEN_NOT_RICKART,
        provenance: "Z_{p^n} component of the direct-sum example family",
        witness_mode: false,
        build: || ConstructionSpec::ZMod(8),
        witness_coords: None,
    },
    CatalogEntry {
        name: "zmod16",
        summary: "Z/16Z",
        expected: GEN_NOT_RICKART,
        provenance: "Z_{p^n} component of the direct-sum example family",
        witness_mode: false,
        build: || ConstructionSpec::ZMod(16),
        witness_coords: None,
    },
    CatalogEntry {
        name: "tri-s3-z2",
        summary: "triangular family S_3 over Z_2 (16 elements)",
        expected: &[],
        provenance: "finite-base instance of the triangular families (no printed claim to pin)",
        witness_mode: false,
        build: || ConstructionSpec::Triangular {
            kind: TriangularKind::S,
            n: 3,
            base: zmod(2),
        },
        witness_coords: None,
    },
    CatalogEntry {
        name: "tri-a4-z2",
        summary: "triangular family A_4 over Z_2 (32 elements)",
        expected: &[],
        provenance: "finite-base instance of the triangular families",
        witness_mode: false,
        build: || ConstructionSpec::Triangular {
            kind: TriangularKind::A,
            n: 4,
            base: zmod(2),
        },
        witness_coords: None,
    },
    CatalogEntry {
        name: "tri-b4-z2",
        summary: "triangular family B_4 over Z_2 (128 elements)",
        expected: &[],
        provenance: "finite-base instance of the triangular families",
        witness_mode: false,
        build: || ConstructionSpec::Triangular {
            kind: TriangularKind::B,
            n: 4,
            base: zmod(2),
        },
        witness_coords: None,
    },
    CatalogEntry {
        name: "tri-u4-z2",
        summary: "triangular family U_4 over Z_2 (32 elements)",
        expected: &[],
        provenance: "finite-base instance of the triangular families",
        witness_mode: false,
        build: || ConstructionSpec::Triangular {
            kind: TriangularKind::U,
            n: 4,
            base: zmod(2),
        },
        witness_coords: None,
    },
    CatalogEntry {
        name: "tri-v4-z2",
        summary: "triangular family V_4 over Z_2 (16 elements)",
        expected: &[],
        provenance: "finite-base instance of the triangular families",
        witness_mode: false,
        build: || ConstructionSpec::Triangular {
            kind: TriangularKind::V,
            n: 4,
            base: zmod(2),
        },
        witness_coords: None,
    },
    CatalogEntry {
        name: "unitify-demo",
        summary: "unitification of the zero-product ring {0,2} in Z_4 over F_2",
        expected: &[
            ("rickart", false),
            ("generalized_rickart", true),
            ("generalized_weakly_rickart", true),
        ],
        provenance: "the embedding theorem instance: a non-unital weakly ring becomes generalized Rickart",
        witness_mode: false,
        build: || ConstructionSpec::Unitify {
            base: Box::new(zero_square_two()),
            p: 2,
        },
        witness_coords: None,
    },
];

/// All catalog entries, in stable listing order.
pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_named, classify_witness, Status};

    #[test]
    fn every_entry_matches_its_expected_fragment() {
        for entry in entries() {
            let ring = entry.build().unwrap();
            let report = if entry.witness_mode {
                let w = ring
                    .element_from_coords(entry.witness_coords.expect("witness entries carry one"))
                    .unwrap();
                classify_witness(&ring, entry.name.to_string(), &[w]).unwrap()
            } else {
                classify_named(&ring, entry.name.to_string()).unwrap()
            };
            for &(prop, want) in entry.expected {
                let got = report
                    .property(prop)
                    .unwrap_or_else(|| panic!("{}: missing property {prop}", entry.name));
                let got_bool = match got.status {
                    Status::True => true,
                    Status::False => false,
                    Status::Skipped => panic!("{}: {prop} skipped", entry.name),
                };
                assert_eq!(
                    got_bool, want,
                    "{}: property {prop} expected {want}",
                    entry.name
                );
            }
            assert!(
                report.consistency_violations().is_empty(),
                "{}: {:?}",
                entry.name,
                report.consistency_violations()
            );
        }
    }

    #[test]
    fn names_are_unique_and_findable() {
        let mut names: Vec<_> = entries().iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), entries().len());
        assert!(find("zmod4").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn m4z4_entry_carries_the_builtin_witness() {
        let e = find("m4z4").unwrap();
        assert!(e.witness_mode);
        let coords = e.witness_coords.unwrap();
        assert_eq!(coords.len(), 16);
        assert_eq!(&coords[..4], &[1, 1, 1, 1]);
    }
}
