//! Chevalley-basis construction for simply-laced root systems. Structure
//! constant signs come from a bimultiplicative asymmetry function on the
//! root lattice; the coroot bracket sign is a named constant pinned by the
//! conformance identities of the graded cases.

use super::{AlgebraError, LieAlgebra, Realization, SparseVec};
use crate::exact::{rint, CycMatrix, CycNum};
use crate::roots::RootSystem;
use std::sync::Arc;

/// Sign of `[e_alpha, e_(-alpha)] = sign * t_alpha`.
pub(crate) const COROOT_SIGN: i64 = -1;

/// Asymmetry function exponent table on simple roots: epsilon(alpha_i,
/// alpha_j) = (-1)^T[i][j]. Off-diagonal below the diagonal uses the Cartan
/// pairing; the diagonal is fixed to -1 (exponent 1), which the Jacobi
/// identity forces for roots of squared length 2.
pub(crate) fn asymmetry_exponents(rs: &RootSystem) -> Vec<Vec<u8>> {
    let n = rs.rank;
    let mut t = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                t[i][j] = 1;
            } else if i > j {
                t[i][j] = (rs.cartan()[i][j].rem_euclid(2)) as u8;
            }
        }
    }
    t
}

/// epsilon(alpha, beta) for lattice vectors in simple-root coordinates.
pub(crate) fn asymmetry_sign(t: &[Vec<u8>], a: &[i64], b: &[i64]) -> i64 {
    let mut e = 0i64;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 || t[i][j] == 0 {
                continue;
            }
            e += ai * bj;
        }
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Builds the Chevalley realization: basis `h_1..h_N`, then `e_alpha` per
/// root in root-system order, with
///   `[h, e_alpha] = alpha(h) e_alpha`,
///   `[e_alpha, e_beta] = eps(alpha,beta) e_(alpha+beta)` when the sum is a
///   root, and `[e_alpha, e_(-alpha)] = -t_alpha`.
pub fn build_chevalley(rs: &RootSystem) -> Result<LieAlgebra, AlgebraError> {
    let n = rs.rank;
    let num_roots = rs.num_roots();
    let dim = n + num_roots;
    let t = asymmetry_exponents(rs);

    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        labels.push(format!("h{}", i + 1));
    }
    for r in 0..num_roots {
        labels.push(format!("e{:?}", rs.root(r)));
    }

    let zero_vec: SparseVec = Vec::new();
    let mut table = vec![zero_vec; dim * dim];
    let mut put = |table: &mut Vec<SparseVec>, i: usize, j: usize, v: SparseVec| {
        table[i * dim + j] = v;
    };

    // [h_i, e_alpha] = (alpha_i, alpha) e_alpha
    for i in 0..n {
        for r in 0..num_roots {
            let mut simple = vec![0i64; n];
            simple[i] = 1;
            let c = rs.form_coords(&simple, rs.root(r));
            if c != 0 {
                put(
                    &mut table,
                    i,
                    n + r,
                    vec![(n + r, CycNum::from_int(c))],
                );
                put(
                    &mut table,
                    n + r,
                    i,
                    vec![(n + r, CycNum::from_int(-c))],
                );
            }
        }
    }

    // [e_alpha, e_beta]
    for a in 0..num_roots {
        for b in 0..num_roots {
            if a == b {
                continue;
            }
            let alpha = rs.root(a);
            let beta = rs.root(b);
            if b == rs.negate(a) {
                // coroot: COROOT_SIGN * t_alpha, h-coordinates are the
                // simple-root coordinates of alpha
                let mut v: SparseVec = Vec::new();
                for (i, &c) in alpha.iter().enumerate() {
                    if c != 0 {
                        v.push((i, CycNum::from_int(COROOT_SIGN * c)));
                    }
                }
                put(&mut table, n + a, n + b, v);
                continue;
            }
            let sum: Vec<i64> = alpha.iter().zip(beta).map(|(x, y)| x + y).collect();
            if let Some(s) = rs.index_of(&sum) {
                let sign = asymmetry_sign(&t, alpha, beta);
                put(
                    &mut table,
                    n + a,
                    n + b,
                    vec![(n + s, CycNum::from_int(sign))],
                );
            }
        }
    }

    // invariant form: (h_i, h_j) = cartan, (e_alpha, e_(-alpha)) = -1
    let mut form = CycMatrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            let c = rs.cartan()[i][j];
            if c != 0 {
                form.set(i, j, CycNum::from_int(c));
            }
        }
    }
    for r in 0..num_roots {
        let neg = rs.negate(r);
        form.set(n + r, n + neg, CycNum::from_rational(rint(COROOT_SIGN)));
    }

    Ok(LieAlgebra::from_parts(
        Realization::Chevalley {
            roots: Arc::new(rs.clone()),
        },
        labels,
        table,
        form,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootFamily;

    fn build(family: RootFamily, rank: usize) -> LieAlgebra {
        let rs = RootSystem::build(family, rank).unwrap();
        build_chevalley(&rs).unwrap()
    }

    #[test]
    fn classical_dimensions() {
        for n in 1..=5 {
            assert_eq!(build(RootFamily::A, n).dim, n * n + 2 * n);
        }
        for n in 3..=5 {
            assert_eq!(build(RootFamily::D, n).dim, n * (2 * n - 1));
        }
        assert_eq!(build(RootFamily::E6, 6).dim, 78);
    }

    #[test]
    fn a1_is_sl2() {
        let rs = RootSystem::build(RootFamily::A, 1).unwrap();
        let alg = build_chevalley(&rs).unwrap();
        // basis: h, e_(-a), e_a
        let pos = rs.index_of(&[1]).unwrap();
        let neg = rs.negate(pos);
        let h = alg.basis_element(0);
        let e = alg.basis_element(alg.root_vector_index(pos));
        let f = alg.basis_element(alg.root_vector_index(neg));
        // [h, e] = 2e and [e, f] spans the Cartan
        assert_eq!(alg.bracket(&h, &e), e.scale(&CycNum::from_int(2)));
        let ef = alg.bracket(&e, &f);
        assert!(!ef.is_zero());
        assert!(ef.coords()[1..].iter().all(|c| c.is_zero()));
        // the sl_2 triple closes: [[e,f],e] = +-2e
        let hef = alg.bracket(&ef, &e);
        assert_eq!(hef, e.scale(&CycNum::from_int(2 * COROOT_SIGN)));
    }

    #[test]
    fn antisymmetry_and_jacobi_d4_exhaustive() {
        let alg = build(RootFamily::D, 4);
        assert!(alg.verify_antisymmetry());
        assert_eq!(alg.verify_jacobi_exhaustive(), Ok(()));
    }

    #[test]
    fn jacobi_a3_exhaustive() {
        let alg = build(RootFamily::A, 3);
        assert_eq!(alg.verify_jacobi_exhaustive(), Ok(()));
    }

    #[test]
    fn form_associative_d4() {
        let alg = build(RootFamily::D, 4);
        assert_eq!(alg.verify_form_associative(), Ok(()));
    }

    #[test]
    fn form_associative_a3() {
        let alg = build(RootFamily::A, 3);
        assert_eq!(alg.verify_form_associative(), Ok(()));
    }
}
