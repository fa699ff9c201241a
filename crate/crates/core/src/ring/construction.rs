//! Construction expressions for finite *-rings.
//!
//! A [`ConstructionSpec`] is a closed expression tree over the available
//! constructors. Building it (see [`crate::ring::build_ring`]) validates the
//! constructor preconditions and the *-ring axioms of the result.

use std::fmt;

use crate::error::{Error, Result};

/// The five triangular matrix subring families, each a sub-*-ring of the
/// upper triangular matrices spanned by the identity, powers of the shift
/// V = sum of E_{i,i+1}, and a block of matrix units E_ij.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum TriangularKind {
    S,
    A,
    B,
    U,
    V,
}

impl TriangularKind {
    pub fn letter(self) -> char {
        match self {
            TriangularKind::S => 'S',
            TriangularKind::A => 'A',
            TriangularKind::B => 'B',
            TriangularKind::U => 'U',
            TriangularKind::V => 'V',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'S' => Some(TriangularKind::S),
            'A' => Some(TriangularKind::A),
            'B' => Some(TriangularKind::B),
            'U' => Some(TriangularKind::U),
            'V' => Some(TriangularKind::V),
            _ => None,
        }
    }
}

/// Explicit Cayley tables for a ring on codes `0..size`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleySpec {
    pub size: u64,
    pub add: Vec<u64>,
    pub mul: Vec<u64>,
    pub star: Vec<u64>,
}

/// Expression tree over the ring constructors.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstructionSpec {
    /// Z/nZ with the identity involution.
    ZMod(u64),
    /// k-by-k matrices over a base ring; involution is transpose composed
    /// entrywise with the base involution.
    MatrixRing(Box<ConstructionSpec>, u32),
    /// Group algebra F_p[G] for the abelian p-group G with the given
    /// invariant factors (G = direct sum of Z_{p^k} for k in `invariants`);
    /// involution sends each group element to its inverse.
    GroupAlgebra { p: u64, invariants: Vec<u32> },
    /// Hamilton quaternions over Z_2 (conjugation coincides with the
    /// identity in characteristic 2).
    QuaternionZ2,
    /// Componentwise direct sum.
    DirectSum(Box<ConstructionSpec>, Box<ConstructionSpec>),
    /// F_p[x,y]/(x,y)^n with the identity involution.
    PolyQuotient { p: u64, n: u32 },
    /// Triangular matrix subring of the given kind over a commutative
    /// unital base; involution is the anti-transpose.
    Triangular {
        kind: TriangularKind,
        n: u32,
        base: Box<ConstructionSpec>,
    },
    /// Unitification R + F_p on pairs (a, lambda).
    Unitify {
        base: Box<ConstructionSpec>,
        p: u64,
    },
    /// Explicit Cayley tables.
    CayleyTable(CayleySpec),
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::ZMod(n) => write!(f, "zmod({n})"),
            ConstructionSpec::MatrixRing(base, k) => write!(f, "matrix({base}, {k})"),
            ConstructionSpec::GroupAlgebra { p, invariants } => {
                write!(f, "group_algebra({p}")?;
                for k in invariants {
                    write!(f, ", {k}")?;
                }
                write!(f, ")")
            }
            ConstructionSpec::QuaternionZ2 => write!(f, "quaternion_z2"),
            ConstructionSpec::DirectSum(a, b) => write!(f, "direct_sum({a}, {b})"),
            ConstructionSpec::PolyQuotient { p, n } => write!(f, "poly_quotient({p}, {n})"),
            ConstructionSpec::Triangular { kind, n, base } => {
                write!(f, "triangular({}, {n}, {base})", kind.letter())
            }
            ConstructionSpec::Unitify { base, p } => write!(f, "unitify({base}, {p})"),
            ConstructionSpec::CayleyTable(t) => write!(f, "cayley(size={})", t.size),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// One basis atom of a triangular family: the set of matrix positions
/// (0-based) sharing a single base-ring coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Atom {
    pub positions: Vec<(u32, u32)>,
}

impl Atom {
    fn single(i: u32, j: u32) -> Self {
        Atom {
            positions: vec![(i, j)],
        }
    }

    fn diagonal(n: u32) -> Self {
        Atom {
            positions: (0..n).map(|i| (i, i)).collect(),
        }
    }

    /// V^m: the m-th superdiagonal.
    fn shift_power(n: u32, m: u32) -> Self {
        Atom {
            positions: (0..n - m).map(|i| (i, i + m)).collect(),
        }
    }
}

/// Basis atoms for `kind`_n per its defining index formulas, with `[.]`
/// read as floor and empty summation ranges contributing nothing. The
/// redundant identity atom is dropped when single-entry atoms already cover
/// the whole diagonal (this happens for B_2 and B_3, where the family
/// degenerates to the full upper triangular ring).
pub(crate) fn triangular_atoms(kind: TriangularKind, n: u32) -> Result<Vec<Atom>> {
    if n < 2 {
        return Err(Error::BadParameter(format!(
            "triangular families need n >= 2, got {n}"
        )));
    }
    if n > 16 {
        return Err(Error::BadParameter(format!(
            "triangular size n = {n} exceeds the supported bound 16"
        )));
    }
    let half = n / 2; // [n/2]
    let half_up = n.div_ceil(2); // [(n+1)/2]
    let mut atoms = vec![Atom::diagonal(n)];
    let push_unit = |atoms: &mut Vec<Atom>, i: u32, j: u32| {
        // formulas are 1-based
        let a = Atom::single(i - 1, j - 1);
        if !atoms.contains(&a) {
            atoms.push(a);
        }
    };
    match kind {
        TriangularKind::S => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    push_unit(&mut atoms, i, j);
                }
            }
        }
        TriangularKind::A => {
            for l in 2..=half {
                atoms.push(Atom::shift_power(n, l - 1));
            }
            for i in 1..=half_up {
                for j in (half + i)..=n {
                    push_unit(&mut atoms, i, j);
                }
            }
        }
        TriangularKind::B => {
            for l in 3..=half {
                atoms.push(Atom::shift_power(n, l - 2));
            }
            for i in 1..=(half_up + 1).min(n) {
                for j in (half + i - 1).max(1)..=n {
                    if j >= i {
                        push_unit(&mut atoms, i, j);
                    }
                }
            }
        }
        TriangularKind::U => {
            let mid = (n - 1) / 2; // [(n-1)/2]
            for i in 1..=mid {
                for j in (half + 1)..=n {
                    push_unit(&mut atoms, i, j);
                }
            }
            let row = mid + 1;
            for j in (row + 1)..=n {
                push_unit(&mut atoms, row, j);
            }
        }
        TriangularKind::V => {
            for l in 2..=n {
                atoms.push(Atom::shift_power(n, l - 1));
            }
        }
    }

    // Drop the identity atom when redundant (covered by single diagonal
    // entries), so atoms stay support-disjoint.
    let diag_covered = (0..n).all(|i| {
        atoms[1..]
            .iter()
            .any(|a| a.positions == vec![(i, i)])
    });
    if diag_covered {
        atoms.remove(0);
    }

    // The encoding relies on atoms being support-disjoint.
    let mut seen = std::collections::HashSet::new();
    for a in &atoms {
        for &pos in &a.positions {
            if !seen.insert(pos) {
                return Err(Error::BadParameter(format!(
                    "triangular family {}_{n} has overlapping atoms at {pos:?}",
                    kind.letter()
                )));
            }
        }
    }
    Ok(atoms)
}

impl ConstructionSpec {
    /// Parameter preconditions that can be checked without building anything.
    pub(crate) fn check_params(&self) -> Result<()> {
        match self {
            ConstructionSpec::ZMod(n) => {
                if *n < 2 {
                    return Err(Error::BadParameter(format!("zmod needs n >= 2, got {n}")));
                }
            }
            ConstructionSpec::MatrixRing(base, k) => {
                if *k == 0 {
                    return Err(Error::BadParameter("matrix needs k >= 1".into()));
                }
                base.check_params()?;
            }
            ConstructionSpec::GroupAlgebra { p, invariants } => {
                if !is_prime(*p) {
                    return Err(Error::BadParameter(format!(
                        "group_algebra needs a prime p, got {p}"
                    )));
                }
                if invariants.is_empty() || invariants.contains(&0) {
                    return Err(Error::BadParameter(
                        "group_algebra needs nonempty positive invariant factors".into(),
                    ));
                }
            }
            ConstructionSpec::QuaternionZ2 => {}
            ConstructionSpec::DirectSum(a, b) => {
                a.check_params()?;
                b.check_params()?;
            }
            ConstructionSpec::PolyQuotient { p, n } => {
                if !is_prime(*p) {
                    return Err(Error::BadParameter(format!(
                        "poly_quotient needs a prime p, got {p}"
                    )));
                }
                if *n < 1 {
                    return Err(Error::BadParameter("poly_quotient needs n >= 1".into()));
                }
            }
            ConstructionSpec::Triangular { kind, n, base } => {
                triangular_atoms(*kind, *n)?;
                base.check_params()?;
            }
            ConstructionSpec::Unitify { base, p } => {
                if !is_prime(*p) {
                    return Err(Error::BadParameter(format!(
                        "unitify needs a prime p, got {p}"
                    )));
                }
                base.check_params()?;
            }
            ConstructionSpec::CayleyTable(t) => {
                let n = t.size;
                if n == 0 {
                    return Err(Error::BadParameter("cayley table needs size >= 1".into()));
                }
                let nn = (n * n) as usize;
                if t.add.len() != nn || t.mul.len() != nn || t.star.len() != n as usize {
                    return Err(Error::BadParameter(format!(
                        "cayley table shape mismatch for size {n}"
                    )));
                }
                if t.add.iter().chain(&t.mul).chain(&t.star).any(|&c| c >= n) {
                    return Err(Error::BadParameter(
                        "cayley table entry out of range".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}
