//! DOT emission of the projection Hasse diagram.

use crate::error::Result;
use crate::projections::{leq_code, projection_codes};
use crate::ring::FiniteStarRing;

/// The covering relation of the projection order e ≤ f (e = ef) as a DOT
/// digraph, edges pointing upward.
pub fn hasse_dot(r: &FiniteStarRing) -> Result<String> {
    let projs = projection_codes(r)?;
    let mut out = String::new();
    out.push_str("digraph hasse {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for &e in &projs {
        let mark = if Some(e) == r.unity_code() {
            " (1)"
        } else if e == r.zero_code() {
            " (0)"
        } else {
            ""
        };
        out.push_str(&format!("  p{e} [label=\"{e}{mark}\"];\n"));
    }
    for &e in &projs {
        for &f in &projs {
            if e == f || !leq_code(r, e, f) {
                continue;
            }
            let covered = projs.iter().any(|&g| {
                g != e && g != f && leq_code(r, e, g) && leq_code(r, g, f)
            });
            if !covered {
                out.push_str(&format!("  p{e} -> p{f};\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, ConstructionSpec};

    #[test]
    fn z12_diagram_has_the_diamond() {
        let r = build_ring(&ConstructionSpec::ZMod(12)).unwrap();
        let dot = hasse_dot(&r).unwrap();
        // 0 < {4, 9} < 1 with 4, 9 incomparable
        assert!(dot.contains("p0 -> p4;"));
        assert!(dot.contains("p0 -> p9;"));
        assert!(dot.contains("p4 -> p1;"));
        assert!(dot.contains("p9 -> p1;"));
        assert!(!dot.contains("p0 -> p1;"), "transitive edge must be absent");
    }
}
