//! Finite *-rings: construction, annihilators, projection order theory, and
//! exhaustive Rickart-type classification.
//!
//! The crate builds finite rings with involution from a closed construction
//! algebra (`zmod`, `matrix`, `group_algebra`, `quaternion_z2`, `direct_sum`,
//! `poly_quotient`, `triangular`, `unitify`, `cayley`), then decides, by
//! exhaustive computation with machine-checkable certificates:
//!
//! - one-sided annihilators, annihilator chains of powers, and principal
//!   projection generators;
//! - the projection poset (order, meet/join, equivalence, domination,
//!   central projections, very orthogonal pairs, position p');
//! - generalized right/left projections and the Rickart / generalized
//!   Rickart / generalized weakly Rickart classification, weak properness,
//!   the parallelogram law, and the PC/GC comparability axioms;
//! - a replayable suite of the structure theorems relating all of the
//!   above, each reported pass / fail / hypothesis-not-met with a concrete
//!   counterexample on failure.

pub mod annihilators;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod hasse;
pub mod parse;
pub mod projections;
pub mod report;
pub mod ring;
pub mod theorems;
pub mod witness;

pub use error::{Error, Result};
pub use ring::{
    build_ring, build_ring_with, BuildOptions, CayleySpec, ConstructionSpec, FiniteStarRing,
    RingElement, TriangularKind,
};
