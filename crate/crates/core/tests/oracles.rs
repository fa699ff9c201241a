//! Independent arithmetic oracles for the composite kernels: each
//! construction is checked against a second computation route that shares
//! no code with it.

use rickart::ring::{build_ring, ConstructionSpec, FiniteStarRing, TriangularKind};

/// Triangular rings versus the dense matrix ring: expanding coefficient
/// vectors into 4x4 matrices over the base must turn the triangular
/// product into the matrix product, and the involution into the
/// anti-transpose.
#[test]
fn triangular_arithmetic_matches_dense_matrices() {
    // A_4 over Z_2: atoms I, V = E12+E23+E34, E13, E14, E24
    let atoms: [&[(usize, usize)]; 5] = [
        &[(0, 0), (1, 1), (2, 2), (3, 3)],
        &[(0, 1), (1, 2), (2, 3)],
        &[(0, 2)],
        &[(0, 3)],
        &[(1, 3)],
    ];
    let tri = build_ring(&ConstructionSpec::Triangular {
        kind: TriangularKind::A,
        n: 4,
        base: Box::new(ConstructionSpec::ZMod(2)),
    })
    .unwrap();
    assert_eq!(tri.size(), 32);
    let mat = build_ring(&ConstructionSpec::MatrixRing(
        Box::new(ConstructionSpec::ZMod(2)),
        4,
    ))
    .unwrap();

    let expand = |r: &FiniteStarRing, code: u64| -> u64 {
        let coeffs = r.coords(r.element(code).unwrap()).unwrap();
        let mut entries = [0u64; 16];
        for (t, positions) in atoms.iter().enumerate() {
            for &(i, j) in *positions {
                entries[i * 4 + j] = coeffs[t];
            }
        }
        mat.element_from_coords(&entries).unwrap().code()
    };

    for a in 0..tri.size() {
        let ea = expand(&tri, a);
        // star = anti-transpose of the expansion
        let starred = expand(&tri, tri.star(tri.element(a).unwrap()).unwrap().code());
        let coords = mat.coords(mat.element(ea).unwrap()).unwrap();
        let mut anti = [0u64; 16];
        for i in 0..4 {
            for j in 0..4 {
                anti[(3 - j) * 4 + (3 - i)] = coords[i * 4 + j];
            }
        }
        assert_eq!(
            starred,
            mat.element_from_coords(&anti).unwrap().code(),
            "star mismatch at {a}"
        );
        for b in 0..tri.size() {
            let prod = tri
                .mul(tri.element(a).unwrap(), tri.element(b).unwrap())
                .unwrap();
            let dense_prod = mat
                .mul(mat.element(ea).unwrap(), mat.element(expand(&tri, b)).unwrap())
                .unwrap();
            assert_eq!(
                expand(&tri, prod.code()),
                dense_prod.code(),
                "product mismatch at ({a}, {b})"
            );
        }
    }
}

/// F_2[C_2] against the closed form (a+bg)(c+dg) = (ac+bd) + (ad+bc)g,
/// and F_3[C_3] against a hand-rolled cyclic convolution.
#[test]
fn group_algebra_matches_hand_convolution() {
    let f2c2 = build_ring(&ConstructionSpec::GroupAlgebra {
        p: 2,
        invariants: vec![1],
    })
    .unwrap();
    for a in 0..2u64 {
        for b in 0..2u64 {
            for c in 0..2u64 {
                for d in 0..2u64 {
                    let x = f2c2.element_from_coords(&[a, b]).unwrap();
                    let y = f2c2.element_from_coords(&[c, d]).unwrap();
                    let expect = f2c2
                        .element_from_coords(&[(a * c + b * d) % 2, (a * d + b * c) % 2])
                        .unwrap();
                    assert_eq!(f2c2.mul(x, y).unwrap(), expect);
                }
            }
        }
    }

    let f3c3 = build_ring(&ConstructionSpec::GroupAlgebra {
        p: 3,
        invariants: vec![1],
    })
    .unwrap();
    assert_eq!(f3c3.size(), 27);
    for xc in 0..f3c3.size() {
        let xs = f3c3.coords(f3c3.element(xc).unwrap()).unwrap();
        for yc in 0..f3c3.size() {
            let ys = f3c3.coords(f3c3.element(yc).unwrap()).unwrap();
            let mut conv = [0u64; 3];
            for i in 0..3 {
                for j in 0..3 {
                    conv[(i + j) % 3] = (conv[(i + j) % 3] + xs[i] * ys[j]) % 3;
                }
            }
            let got = f3c3
                .mul(f3c3.element(xc).unwrap(), f3c3.element(yc).unwrap())
                .unwrap();
            assert_eq!(got, f3c3.element_from_coords(&conv).unwrap());
        }
        // star sends the coefficient of g^i to g^{-i}
        let starred = f3c3.star(f3c3.element(xc).unwrap()).unwrap();
        let expect = [xs[0], xs[2], xs[1]];
        assert_eq!(starred, f3c3.element_from_coords(&expect).unwrap());
    }
}

/// F_2[x,y]/(x,y)^3 against hand-rolled truncated polynomial products on
/// the monomial list 1, x, y, x^2, xy, y^2.
#[test]
fn poly_quotient_matches_hand_truncation() {
    let r = build_ring(&ConstructionSpec::PolyQuotient { p: 2, n: 3 }).unwrap();
    assert_eq!(r.size(), 64);
    let monos: [(u32, u32); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
    let idx = |a: u32, b: u32| monos.iter().position(|&m| m == (a, b));
    for xc in 0..r.size() {
        let xs = r.coords(r.element(xc).unwrap()).unwrap();
        for yc in 0..r.size() {
            let ys = r.coords(r.element(yc).unwrap()).unwrap();
            let mut out = [0u64; 6];
            for (s, &(a1, b1)) in monos.iter().enumerate() {
                for (t, &(a2, b2)) in monos.iter().enumerate() {
                    if let Some(u) = idx(a1 + a2, b1 + b2) {
                        out[u] = (out[u] + xs[s] * ys[t]) % 2;
                    }
                }
            }
            let got = r
                .mul(r.element(xc).unwrap(), r.element(yc).unwrap())
                .unwrap();
            assert_eq!(got, r.element_from_coords(&out).unwrap());
        }
    }
}

/// The quaternions over Z_2 are the group algebra of the Klein four-group
/// in disguise: with 1, i, j, k matched to (0,0), (1,0), (0,1), (1,1) the
/// two multiplication tables must coincide.
#[test]
fn quaternions_match_klein_group_algebra() {
    let q = build_ring(&ConstructionSpec::QuaternionZ2).unwrap();
    let g = build_ring(&ConstructionSpec::GroupAlgebra {
        p: 2,
        invariants: vec![1, 1],
    })
    .unwrap();
    assert_eq!(q.size(), 16);
    assert_eq!(g.size(), 16);
    // both use 4 coefficient coordinates over F_2 with the same basis order
    for a in 0..16u64 {
        for b in 0..16u64 {
            let qa = q.coords(q.element(a).unwrap()).unwrap();
            let qb = q.coords(q.element(b).unwrap()).unwrap();
            let prod_q = q
                .coords(q.mul(q.element(a).unwrap(), q.element(b).unwrap()).unwrap())
                .unwrap();
            let ga = g.element_from_coords(&qa).unwrap();
            let gb = g.element_from_coords(&qb).unwrap();
            let prod_g = g.coords(g.mul(ga, gb).unwrap()).unwrap();
            assert_eq!(prod_q, prod_g, "products differ at ({a}, {b})");
        }
    }
}

/// The unitification product against the defining formula evaluated with
/// independent scalar arithmetic.
#[test]
fn unitify_product_matches_the_defining_formula() {
    let base = build_ring(&ConstructionSpec::ZMod(5)).unwrap();
    let r1 = base.unitify(5).unwrap();
    assert_eq!(r1.size(), 25);
    for a in 0..5u64 {
        for l in 0..5u64 {
            for b in 0..5u64 {
                for m in 0..5u64 {
                    let x = r1.element_from_coords(&[a, l]).unwrap();
                    let y = r1.element_from_coords(&[b, m]).unwrap();
                    // (a, l)(b, m) = (ab + m a + l b, l m) over Z_5
                    let first = (a * b + m * a + l * b) % 5;
                    let second = (l * m) % 5;
                    let expect = r1.element_from_coords(&[first, second]).unwrap();
                    assert_eq!(r1.mul(x, y).unwrap(), expect);
                }
            }
        }
    }
}
