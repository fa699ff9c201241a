//! Ring axiom validation: exhaustive on small carriers, sampled above.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::FiniteStarRing;

fn check_triple(r: &FiniteStarRing, a: u64, b: u64, c: u64) -> Result<()> {
    let viol = |axiom: &'static str, witness: Vec<u64>| Error::AxiomViolation { axiom, witness };
    let zero = r.zero_code();
    if r.raw_add(a, b) != r.raw_add(b, a) {
        return Err(viol("add-commutative", vec![a, b]));
    }
    if r.raw_add(r.raw_add(a, b), c) != r.raw_add(a, r.raw_add(b, c)) {
        return Err(viol("add-associative", vec![a, b, c]));
    }
    if r.raw_add(a, zero) != a {
        return Err(viol("zero-identity", vec![a]));
    }
    if r.raw_add(a, r.raw_neg(a)) != zero {
        return Err(viol("neg-inverse", vec![a]));
    }
    if r.raw_mul(r.raw_mul(a, b), c) != r.raw_mul(a, r.raw_mul(b, c)) {
        return Err(viol("mul-associative", vec![a, b, c]));
    }
    if r.raw_mul(a, r.raw_add(b, c)) != r.raw_add(r.raw_mul(a, b), r.raw_mul(a, c)) {
        return Err(viol("distributive-left", vec![a, b, c]));
    }
    if r.raw_mul(r.raw_add(a, b), c) != r.raw_add(r.raw_mul(a, c), r.raw_mul(b, c)) {
        return Err(viol("distributive-right", vec![a, b, c]));
    }
    if r.raw_star(r.raw_add(a, b)) != r.raw_add(r.raw_star(a), r.raw_star(b)) {
        return Err(viol("star-additive", vec![a, b]));
    }
    if r.raw_star(r.raw_mul(a, b)) != r.raw_mul(r.raw_star(b), r.raw_star(a)) {
        return Err(viol("star-anti-multiplicative", vec![a, b]));
    }
    if r.raw_star(r.raw_star(a)) != a {
        return Err(viol("star-involutive", vec![a]));
    }
    Ok(())
}

/// Validate the *-ring axioms of a freshly built ring: exhaustively when the
/// carrier fits under `validate_bound`, otherwise on at least
/// `sample_triples` deterministically seeded random triples.
pub(crate) fn validate(r: &FiniteStarRing) -> Result<()> {
    let n = r.size();
    if n <= r.options().validate_bound {
        let codes: Vec<u64> = r.carrier_codes();
        for &a in &codes {
            for &b in &codes {
                for &c in &codes {
                    check_triple(r, a, b, c)?;
                }
            }
        }
    } else {
        let mut seed = [0u8; 32];
        let h = fxhash(r.construction().as_bytes());
        seed[..8].copy_from_slice(&h.to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(seed);
        let pick = |rng: &mut ChaCha8Rng| -> u64 {
            let i = rng.next_u64() % n;
            r.code_at(i)
        };
        for _ in 0..r.options().sample_triples {
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            check_triple(r, a, b, c)?;
        }
    }
    Ok(())
}

fn fxhash(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}
