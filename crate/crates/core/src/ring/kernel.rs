//! Arithmetic kernels: one evaluator per constructor.
//!
//! Every element of a ring is a canonical code in `0..size`. Base (leaf)
//! kernels act on codes directly; composite kernels decode a code into
//! coordinates over a dense base ring, operate, and re-encode. Codes are
//! mixed-radix words, least significant coordinate first.

// convolutions and structure-constant sums read better with explicit indices
#![allow(clippy::needless_range_loop)]

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::construction::{triangular_atoms, Atom, TriangularKind};
use crate::ring::FiniteStarRing;

pub(crate) fn decode_digits(mut code: u64, radix: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(code % radix);
        code /= radix;
    }
    out
}

pub(crate) fn encode_digits(digits: &[u64], radix: u64) -> u64 {
    let mut code = 0u64;
    for &d in digits.iter().rev() {
        code = code * radix + d;
    }
    code
}

#[derive(Debug)]
pub(crate) struct CayleyData {
    pub size: u64,
    pub add: Vec<u32>,
    pub mul: Vec<u32>,
    pub star: Vec<u32>,
    pub neg: Vec<u32>,
    pub zero: u64,
}

impl CayleyData {
    pub fn new(size: u64, add: Vec<u32>, mul: Vec<u32>, star: Vec<u32>) -> Result<Self> {
        let n = size as usize;
        // Locate the additive identity; its existence is an axiom.
        let zero = (0..n)
            .find(|&z| (0..n).all(|b| add[z * n + b] as usize == b))
            .ok_or(Error::AxiomViolation {
                axiom: "zero-identity",
                witness: vec![],
            })? as u64;
        let mut neg = vec![0u32; n];
        for a in 0..n {
            neg[a] = (0..n)
                .find(|&b| add[a * n + b] as u64 == zero)
                .ok_or(Error::AxiomViolation {
                    axiom: "neg-inverse",
                    witness: vec![a as u64],
                })? as u32;
        }
        Ok(CayleyData {
            size,
            add,
            mul,
            star,
            neg,
            zero,
        })
    }
}

#[derive(Debug)]
pub(crate) struct PolyData {
    pub p: u64,
    /// Monomials x^a y^b with a+b < n, sorted by (total degree, a).
    pub monomials: Vec<(u32, u32)>,
    /// prod_idx[s * dim + t] = index of the product monomial, or usize::MAX
    /// when the product falls into (x,y)^n and is truncated away.
    pub prod_idx: Vec<usize>,
    pub size: u64,
}

impl PolyData {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        let mut monomials = Vec::new();
        for deg in 0..n {
            for a in (0..=deg).rev() {
                monomials.push((a, deg - a));
            }
        }
        let dim = monomials.len();
        let size = p
            .checked_pow(dim as u32)
            .ok_or_else(|| Error::BadParameter(format!("poly_quotient({p}, {n}) overflows")))?;
        let idx_of = |a: u32, b: u32| monomials.iter().position(|&m| m == (a, b));
        let mut prod_idx = vec![usize::MAX; dim * dim];
        for s in 0..dim {
            for t in 0..dim {
                let (a1, b1) = monomials[s];
                let (a2, b2) = monomials[t];
                if a1 + b1 + a2 + b2 < n {
                    prod_idx[s * dim + t] = idx_of(a1 + a2, b1 + b2).unwrap();
                }
            }
        }
        Ok(PolyData {
            p,
            monomials,
            prod_idx,
            size,
        })
    }

    fn dim(&self) -> usize {
        self.monomials.len()
    }
}

#[derive(Debug)]
pub(crate) struct GroupAlgebraData {
    pub p: u64,
    pub gsize: usize,
    /// Group multiplication and inversion on group-element indices.
    pub gmul: Vec<u32>,
    pub ginv: Vec<u32>,
    pub size: u64,
}

impl GroupAlgebraData {
    pub fn new(p: u64, invariants: &[u32]) -> Result<Self> {
        let mut orders = Vec::new();
        for &k in invariants {
            let o = p
                .checked_pow(k)
                .ok_or_else(|| Error::BadParameter("group order overflows".into()))?;
            orders.push(o);
        }
        let gsize_u = orders
            .iter()
            .try_fold(1u64, |acc, &o| acc.checked_mul(o))
            .ok_or_else(|| Error::BadParameter("group order overflows".into()))?;
        if gsize_u > 4096 {
            return Err(Error::BadParameter(format!(
                "group of order {gsize_u} too large for a group algebra"
            )));
        }
        let gsize = gsize_u as usize;
        let size = p
            .checked_pow(gsize as u32)
            .filter(|_| (gsize as u32 as f64) * (p as f64).log2() <= 62.0)
            .ok_or_else(|| {
                Error::BadParameter(format!(
                    "group algebra F_{p}[G] with |G| = {gsize} overflows"
                ))
            })?;
        // index <-> tuple, mixed radix over the component orders
        let decode = |mut i: u64| -> Vec<u64> {
            orders
                .iter()
                .map(|&o| {
                    let d = i % o;
                    i /= o;
                    d
                })
                .collect()
        };
        let encode = |t: &[u64]| -> u64 {
            t.iter()
                .zip(&orders)
                .rev()
                .fold(0u64, |acc, (&d, &o)| acc * o + d)
        };
        let mut gmul = vec![0u32; gsize * gsize];
        let mut ginv = vec![0u32; gsize];
        for g in 0..gsize {
            let tg = decode(g as u64);
            let inv: Vec<u64> = tg
                .iter()
                .zip(&orders)
                .map(|(&d, &o)| (o - d) % o)
                .collect();
            ginv[g] = encode(&inv) as u32;
            for h in 0..gsize {
                let th = decode(h as u64);
                let s: Vec<u64> = tg
                    .iter()
                    .zip(&th)
                    .zip(&orders)
                    .map(|((&a, &b), &o)| (a + b) % o)
                    .collect();
                gmul[g * gsize + h] = encode(&s) as u32;
            }
        }
        Ok(GroupAlgebraData {
            p,
            gsize,
            gmul,
            ginv,
            size,
        })
    }
}

#[derive(Debug)]
pub(crate) struct TriangularData {
    pub base: Arc<FiniteStarRing>,
    pub atoms: Vec<Atom>,
    /// Anti-transpose permutation on atoms.
    pub star_perm: Vec<usize>,
    /// struct_consts[s * atoms + t]: integer decomposition of A_s * A_t.
    pub struct_consts: Vec<Vec<(usize, u32)>>,
    pub size: u64,
    pub unity_coords: Option<Vec<u64>>,
}

impl TriangularData {
    pub fn new(base: Arc<FiniteStarRing>, kind: TriangularKind, n: u32) -> Result<Self> {
        let atoms = triangular_atoms(kind, n)?;
        let m = base.size();
        let size = m
            .checked_pow(atoms.len() as u32)
            .filter(|_| (atoms.len() as f64) * (m as f64).log2() <= 62.0)
            .ok_or_else(|| {
                Error::BadParameter(format!(
                    "triangular({}, {n}) over a base of size {m} overflows",
                    kind.letter()
                ))
            })?;

        let nn = n as usize;
        let dense = |a: &Atom| -> Vec<u32> {
            let mut mat = vec![0u32; nn * nn];
            for &(i, j) in &a.positions {
                mat[i as usize * nn + j as usize] = 1;
            }
            mat
        };

        // Anti-transpose must permute the atom set.
        let mut star_perm = Vec::with_capacity(atoms.len());
        for a in &atoms {
            let mut mapped: Vec<(u32, u32)> = a
                .positions
                .iter()
                .map(|&(i, j)| (n - 1 - j, n - 1 - i))
                .collect();
            mapped.sort_unstable();
            let target = atoms
                .iter()
                .position(|b| {
                    let mut pos = b.positions.clone();
                    pos.sort_unstable();
                    pos == mapped
                })
                .ok_or(Error::AxiomViolation {
                    axiom: "triangular-star-closure",
                    witness: vec![],
                })?;
            star_perm.push(target);
        }

        // Integer structure constants; failure here means the family is not
        // multiplicatively closed.
        let count = atoms.len();
        let mut struct_consts = vec![Vec::new(); count * count];
        for s in 0..count {
            let ms = dense(&atoms[s]);
            for t in 0..count {
                let mt = dense(&atoms[t]);
                let mut prod = vec![0u32; nn * nn];
                for i in 0..nn {
                    for l in 0..nn {
                        if ms[i * nn + l] == 0 {
                            continue;
                        }
                        for j in 0..nn {
                            prod[i * nn + j] += ms[i * nn + l] * mt[l * nn + j];
                        }
                    }
                }
                let mut terms = Vec::new();
                for (u, atom) in atoms.iter().enumerate() {
                    let (i0, j0) = atom.positions[0];
                    let c = prod[i0 as usize * nn + j0 as usize];
                    for &(i, j) in &atom.positions {
                        if prod[i as usize * nn + j as usize] != c {
                            return Err(Error::AxiomViolation {
                                axiom: "triangular-multiplicative-closure",
                                witness: vec![s as u64, t as u64],
                            });
                        }
                    }
                    if c != 0 {
                        terms.push((u, c));
                        for &(i, j) in &atom.positions {
                            prod[i as usize * nn + j as usize] = 0;
                        }
                    }
                }
                if prod.iter().any(|&c| c != 0) {
                    return Err(Error::AxiomViolation {
                        axiom: "triangular-multiplicative-closure",
                        witness: vec![s as u64, t as u64],
                    });
                }
                struct_consts[s * count + t] = terms;
            }
        }

        // Unity: the identity matrix expressed in the atom basis, when the
        // base is unital and the expression exists.
        let unity_coords = base.unity_code().and_then(|one| {
            let zero = base.zero_code();
            let mut coords = vec![zero; count];
            let mut covered = vec![false; nn];
            for (u, atom) in atoms.iter().enumerate() {
                if atom.positions.iter().all(|&(i, j)| i == j) {
                    coords[u] = one;
                    for &(i, _) in &atom.positions {
                        covered[i as usize] = true;
                    }
                }
            }
            if covered.iter().all(|&c| c) {
                Some(coords)
            } else {
                None
            }
        });

        Ok(TriangularData {
            base,
            atoms,
            star_perm,
            struct_consts,
            size,
            unity_coords,
        })
    }
}

/// Klein-group basis products for the quaternions over Z_2: with signs
/// vanishing mod 2, {1, i, j, k} multiply like Z_2 x Z_2.
const QUAT_BASIS_MUL: [[usize; 4]; 4] = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
];

#[derive(Debug)]
pub(crate) enum Kernel {
    ZMod {
        n: u64,
    },
    Cayley(CayleyData),
    QuaternionZ2,
    PolyQuotient(PolyData),
    GroupAlgebra(GroupAlgebraData),
    Matrix {
        base: Arc<FiniteStarRing>,
        k: u32,
        size: u64,
    },
    DirectSum {
        left: Arc<FiniteStarRing>,
        right: Arc<FiniteStarRing>,
    },
    Triangular(TriangularData),
    Unitify {
        base: Arc<FiniteStarRing>,
        p: u64,
    },
}

impl Kernel {
    pub fn size(&self) -> u64 {
        match self {
            Kernel::ZMod { n } => *n,
            Kernel::Cayley(d) => d.size,
            Kernel::QuaternionZ2 => 16,
            Kernel::PolyQuotient(d) => d.size,
            Kernel::GroupAlgebra(d) => d.size,
            Kernel::Matrix { size, .. } => *size,
            Kernel::DirectSum { left, right } => left.size() * right.size(),
            Kernel::Triangular(d) => d.size,
            Kernel::Unitify { base, p } => base.size() * p,
        }
    }

    pub fn zero(&self) -> u64 {
        match self {
            Kernel::ZMod { .. } | Kernel::QuaternionZ2 => 0,
            Kernel::Cayley(d) => d.zero,
            Kernel::PolyQuotient(_) | Kernel::GroupAlgebra(_) => 0,
            Kernel::Matrix { base, k, .. } => {
                let kk = (*k * *k) as usize;
                encode_digits(&vec![base.zero_code(); kk], base.size())
            }
            Kernel::DirectSum { left, right } => {
                left.zero_code() + right.zero_code() * left.size()
            }
            Kernel::Triangular(d) => {
                encode_digits(&vec![d.base.zero_code(); d.atoms.len()], d.base.size())
            }
            Kernel::Unitify { base, .. } => base.zero_code(),
        }
    }

    /// Unity derived from the construction, when one is known. Callers must
    /// still verify it on the actual carrier.
    pub fn structural_unity(&self) -> Option<u64> {
        match self {
            Kernel::ZMod { .. } => Some(1),
            Kernel::Cayley(_) => None,
            Kernel::QuaternionZ2 => Some(1),
            Kernel::PolyQuotient(d) => {
                // the constant monomial is first
                let mut coords = vec![0u64; d.dim()];
                coords[0] = 1;
                Some(encode_digits(&coords, d.p))
            }
            Kernel::GroupAlgebra(d) => {
                // delta at the neutral group element (index 0)
                let mut coords = vec![0u64; d.gsize];
                coords[0] = 1;
                Some(encode_digits(&coords, d.p))
            }
            Kernel::Matrix { base, k, .. } => {
                let one = base.unity_code()?;
                let zero = base.zero_code();
                let kk = *k as usize;
                let mut coords = vec![zero; kk * kk];
                for i in 0..kk {
                    coords[i * kk + i] = one;
                }
                Some(encode_digits(&coords, base.size()))
            }
            Kernel::DirectSum { left, right } => {
                Some(left.unity_code()? + right.unity_code()? * left.size())
            }
            Kernel::Triangular(d) => d
                .unity_coords
                .as_ref()
                .map(|c| encode_digits(c, d.base.size())),
            Kernel::Unitify { base, .. } => Some(base.size()),
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Kernel::ZMod { n } => (a + b) % n,
            Kernel::Cayley(d) => d.add[(a * d.size + b) as usize] as u64,
            Kernel::QuaternionZ2 => a ^ b,
            Kernel::PolyQuotient(d) => {
                let x = decode_digits(a, d.p, d.dim());
                let y = decode_digits(b, d.p, d.dim());
                let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % d.p).collect();
                encode_digits(&s, d.p)
            }
            Kernel::GroupAlgebra(d) => {
                let x = decode_digits(a, d.p, d.gsize);
                let y = decode_digits(b, d.p, d.gsize);
                let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % d.p).collect();
                encode_digits(&s, d.p)
            }
            Kernel::Matrix { base, k, .. } => {
                let kk = (*k * *k) as usize;
                let m = base.size();
                let x = decode_digits(a, m, kk);
                let y = decode_digits(b, m, kk);
                let s: Vec<u64> = x
                    .iter()
                    .zip(&y)
                    .map(|(&u, &v)| base.raw_add(u, v))
                    .collect();
                encode_digits(&s, m)
            }
            Kernel::DirectSum { left, right } => {
                let ls = left.size();
                left.raw_add(a % ls, b % ls) + right.raw_add(a / ls, b / ls) * ls
            }
            Kernel::Triangular(d) => {
                let m = d.base.size();
                let x = decode_digits(a, m, d.atoms.len());
                let y = decode_digits(b, m, d.atoms.len());
                let s: Vec<u64> = x
                    .iter()
                    .zip(&y)
                    .map(|(&u, &v)| d.base.raw_add(u, v))
                    .collect();
                encode_digits(&s, m)
            }
            Kernel::Unitify { base, p } => {
                let bs = base.size();
                base.raw_add(a % bs, b % bs) + ((a / bs + b / bs) % p) * bs
            }
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        match self {
            Kernel::ZMod { n } => (n - a) % n,
            Kernel::Cayley(d) => d.neg[a as usize] as u64,
            Kernel::QuaternionZ2 => a,
            Kernel::PolyQuotient(d) => {
                let x = decode_digits(a, d.p, d.dim());
                let s: Vec<u64> = x.iter().map(|&u| (d.p - u) % d.p).collect();
                encode_digits(&s, d.p)
            }
            Kernel::GroupAlgebra(d) => {
                let x = decode_digits(a, d.p, d.gsize);
                let s: Vec<u64> = x.iter().map(|&u| (d.p - u) % d.p).collect();
                encode_digits(&s, d.p)
            }
            Kernel::Matrix { base, k, .. } => {
                let kk = (*k * *k) as usize;
                let m = base.size();
                let x = decode_digits(a, m, kk);
                let s: Vec<u64> = x.iter().map(|&u| base.raw_neg(u)).collect();
                encode_digits(&s, m)
            }
            Kernel::DirectSum { left, right } => {
                let ls = left.size();
                left.raw_neg(a % ls) + right.raw_neg(a / ls) * ls
            }
            Kernel::Triangular(d) => {
                let m = d.base.size();
                let x = decode_digits(a, m, d.atoms.len());
                let s: Vec<u64> = x.iter().map(|&u| d.base.raw_neg(u)).collect();
                encode_digits(&s, m)
            }
            Kernel::Unitify { base, p } => {
                let bs = base.size();
                base.raw_neg(a % bs) + ((p - a / bs) % p) * bs
            }
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            Kernel::ZMod { n } => (a * b) % n,
            Kernel::Cayley(d) => d.mul[(a * d.size + b) as usize] as u64,
            Kernel::QuaternionZ2 => {
                let mut out = 0u64;
                for i in 0..4 {
                    if a >> i & 1 == 0 {
                        continue;
                    }
                    for j in 0..4 {
                        if b >> j & 1 == 1 {
                            out ^= 1 << QUAT_BASIS_MUL[i][j];
                        }
                    }
                }
                out
            }
            Kernel::PolyQuotient(d) => {
                let dim = d.dim();
                let x = decode_digits(a, d.p, dim);
                let y = decode_digits(b, d.p, dim);
                let mut out = vec![0u64; dim];
                for s in 0..dim {
                    if x[s] == 0 {
                        continue;
                    }
                    for t in 0..dim {
                        let u = d.prod_idx[s * dim + t];
                        if u != usize::MAX && y[t] != 0 {
                            out[u] = (out[u] + x[s] * y[t]) % d.p;
                        }
                    }
                }
                encode_digits(&out, d.p)
            }
            Kernel::GroupAlgebra(d) => {
                let x = decode_digits(a, d.p, d.gsize);
                let y = decode_digits(b, d.p, d.gsize);
                let mut out = vec![0u64; d.gsize];
                for g in 0..d.gsize {
                    if x[g] == 0 {
                        continue;
                    }
                    for h in 0..d.gsize {
                        if y[h] != 0 {
                            let gh = d.gmul[g * d.gsize + h] as usize;
                            out[gh] = (out[gh] + x[g] * y[h]) % d.p;
                        }
                    }
                }
                encode_digits(&out, d.p)
            }
            Kernel::Matrix { base, k, .. } => {
                let kk = *k as usize;
                let m = base.size();
                let x = decode_digits(a, m, kk * kk);
                let y = decode_digits(b, m, kk * kk);
                let zero = base.zero_code();
                let mut out = vec![zero; kk * kk];
                for i in 0..kk {
                    for l in 0..kk {
                        let xi = x[i * kk + l];
                        if xi == zero {
                            continue;
                        }
                        for j in 0..kk {
                            let prod = base.raw_mul(xi, y[l * kk + j]);
                            out[i * kk + j] = base.raw_add(out[i * kk + j], prod);
                        }
                    }
                }
                encode_digits(&out, m)
            }
            Kernel::DirectSum { left, right } => {
                let ls = left.size();
                left.raw_mul(a % ls, b % ls) + right.raw_mul(a / ls, b / ls) * ls
            }
            Kernel::Triangular(d) => {
                let m = d.base.size();
                let count = d.atoms.len();
                let x = decode_digits(a, m, count);
                let y = decode_digits(b, m, count);
                let zero = d.base.zero_code();
                let mut out = vec![zero; count];
                for s in 0..count {
                    if x[s] == zero {
                        continue;
                    }
                    for t in 0..count {
                        if y[t] == zero {
                            continue;
                        }
                        let prod = d.base.raw_mul(x[s], y[t]);
                        for &(u, mult) in &d.struct_consts[s * count + t] {
                            for _ in 0..mult {
                                out[u] = d.base.raw_add(out[u], prod);
                            }
                        }
                    }
                }
                encode_digits(&out, m)
            }
            Kernel::Unitify { base, p } => {
                // (a, l)(b, m) = (ab + m a + l b, l m)
                let bs = base.size();
                let (xa, la) = (a % bs, a / bs);
                let (xb, lb) = (b % bs, b / bs);
                let mut r = base.raw_mul(xa, xb);
                for _ in 0..lb {
                    r = base.raw_add(r, xa);
                }
                for _ in 0..la {
                    r = base.raw_add(r, xb);
                }
                r + (la * lb % p) * bs
            }
        }
    }

    pub fn star(&self, a: u64) -> u64 {
        match self {
            Kernel::ZMod { .. } | Kernel::QuaternionZ2 => a,
            Kernel::Cayley(d) => d.star[a as usize] as u64,
            Kernel::PolyQuotient(_) => a,
            Kernel::GroupAlgebra(d) => {
                let x = decode_digits(a, d.p, d.gsize);
                let mut out = vec![0u64; d.gsize];
                for g in 0..d.gsize {
                    out[d.ginv[g] as usize] = x[g];
                }
                encode_digits(&out, d.p)
            }
            Kernel::Matrix { base, k, .. } => {
                let kk = *k as usize;
                let m = base.size();
                let x = decode_digits(a, m, kk * kk);
                let mut out = vec![0u64; kk * kk];
                for i in 0..kk {
                    for j in 0..kk {
                        out[j * kk + i] = base.raw_star(x[i * kk + j]);
                    }
                }
                encode_digits(&out, m)
            }
            Kernel::DirectSum { left, right } => {
                let ls = left.size();
                left.raw_star(a % ls) + right.raw_star(a / ls) * ls
            }
            Kernel::Triangular(d) => {
                let m = d.base.size();
                let count = d.atoms.len();
                let x = decode_digits(a, m, count);
                let mut out = vec![0u64; count];
                for s in 0..count {
                    out[d.star_perm[s]] = d.base.raw_star(x[s]);
                }
                encode_digits(&out, m)
            }
            Kernel::Unitify { base, .. } => {
                let bs = base.size();
                base.raw_star(a % bs) + (a / bs) * bs
            }
        }
    }

    /// Number of coordinates in the canonical decomposition of an element.
    pub fn coords_len(&self) -> usize {
        match self {
            Kernel::ZMod { .. } | Kernel::Cayley(_) => 1,
            Kernel::QuaternionZ2 => 4,
            Kernel::PolyQuotient(d) => d.dim(),
            Kernel::GroupAlgebra(d) => d.gsize,
            Kernel::Matrix { k, .. } => (*k * *k) as usize,
            Kernel::DirectSum { .. } | Kernel::Unitify { .. } => 2,
            Kernel::Triangular(d) => d.atoms.len(),
        }
    }

    pub fn decode(&self, code: u64) -> Vec<u64> {
        match self {
            Kernel::ZMod { .. } | Kernel::Cayley(_) => vec![code],
            Kernel::QuaternionZ2 => decode_digits(code, 2, 4),
            Kernel::PolyQuotient(d) => decode_digits(code, d.p, d.dim()),
            Kernel::GroupAlgebra(d) => decode_digits(code, d.p, d.gsize),
            Kernel::Matrix { base, k, .. } => {
                decode_digits(code, base.size(), (*k * *k) as usize)
            }
            Kernel::DirectSum { left, .. } => {
                let ls = left.size();
                vec![code % ls, code / ls]
            }
            Kernel::Triangular(d) => decode_digits(code, d.base.size(), d.atoms.len()),
            Kernel::Unitify { base, .. } => {
                let bs = base.size();
                vec![code % bs, code / bs]
            }
        }
    }

    pub fn encode(&self, coords: &[u64]) -> Result<u64> {
        let expect = self.coords_len();
        if coords.len() != expect {
            return Err(Error::BadParameter(format!(
                "expected {expect} coordinates, got {}",
                coords.len()
            )));
        }
        let radices: Vec<u64> = match self {
            Kernel::ZMod { n } => vec![*n],
            Kernel::Cayley(d) => vec![d.size],
            Kernel::QuaternionZ2 => vec![2; 4],
            Kernel::PolyQuotient(d) => vec![d.p; d.dim()],
            Kernel::GroupAlgebra(d) => vec![d.p; d.gsize],
            Kernel::Matrix { base, k, .. } => vec![base.size(); (*k * *k) as usize],
            Kernel::DirectSum { left, right } => vec![left.size(), right.size()],
            Kernel::Triangular(d) => vec![d.base.size(); d.atoms.len()],
            Kernel::Unitify { base, p } => vec![base.size(), *p],
        };
        let mut code = 0u64;
        let mut scale = 1u64;
        for (&c, &r) in coords.iter().zip(&radices) {
            if c >= r {
                return Err(Error::BadParameter(format!(
                    "coordinate {c} out of range 0..{r}"
                )));
            }
            code += c * scale;
            scale *= r;
        }
        Ok(code)
    }
}
