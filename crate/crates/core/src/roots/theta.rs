//! Actions of a finite-order automorphism on a root system: the permutation
//! of roots, theta-orbits, and the omega-weighted orbit averages landing in
//! the graded pieces of the Cartan subalgebra.

use super::system::RootSystem;
use super::RootError;
use crate::exact::{CycMatrix, CycNum, Rational, Subspace};

/// Action of theta on the roots: a permutation of the root list together
/// with the induced integer matrix on the simple-root lattice.
#[derive(Debug, Clone)]
pub struct ThetaOnRoots {
    pub order: u32,
    perm: Vec<usize>,
    weight_action: Vec<Vec<i64>>,
}

#[derive(Debug, Clone)]
pub struct RootOrbit {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl RootOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl ThetaOnRoots {
    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank;
        let mut w = vec![vec![0i64; n]; n];
        for (i, row) in w.iter_mut().enumerate() {
            row[i] = 1;
        }
        ThetaOnRoots {
            order: 1,
            perm: (0..rs.num_roots()).collect(),
            weight_action: w,
        }
    }

    /// Built from a permutation of the simple roots (0-based images).
    pub fn from_simple_permutation(
        rs: &RootSystem,
        images: &[usize],
        order: u32,
    ) -> Result<Self, RootError> {
        let n = rs.rank;
        assert_eq!(images.len(), n);
        let mut w = vec![vec![0i64; n]; n];
        for (i, &pi) in images.iter().enumerate() {
            w[pi][i] = 1;
        }
        Self::from_coord_matrix(rs, w, order)
    }

    /// The negation action (Chevalley-involution shape on the root side).
    pub fn negation(rs: &RootSystem) -> Self {
        let n = rs.rank;
        let mut w = vec![vec![0i64; n]; n];
        for (i, row) in w.iter_mut().enumerate() {
            row[i] = -1;
        }
        Self::from_coord_matrix(rs, w, 2).expect("negation permutes roots")
    }

    /// General integer action on simple-root coordinates; columns are the
    /// images of the simple roots. Checked to permute the root set and to
    /// preserve the form.
    pub fn from_coord_matrix(
        rs: &RootSystem,
        weight_action: Vec<Vec<i64>>,
        order: u32,
    ) -> Result<Self, RootError> {
        let n = rs.rank;
        let apply = |coords: &[i64]| -> Vec<i64> {
            (0..n)
                .map(|i| (0..n).map(|j| weight_action[i][j] * coords[j]).sum())
                .collect()
        };
        let mut perm = Vec::with_capacity(rs.num_roots());
        for r in 0..rs.num_roots() {
            let img = apply(rs.root(r));
            match rs.index_of(&img) {
                Some(k) => perm.push(k),
                None => return Err(RootError::NotARootPermutation),
            }
        }
        // form preservation on all root pairs
        for i in 0..rs.num_roots() {
            for j in 0..rs.num_roots() {
                if rs.form(perm[i], perm[j]) != rs.form(i, j) {
                    return Err(RootError::FormNotPreserved);
                }
            }
        }
        // permutation order must divide the declared order
        let mut p: Vec<usize> = (0..rs.num_roots()).collect();
        for _ in 0..order {
            p = p.iter().map(|&i| perm[i]).collect();
        }
        if p.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(RootError::NotARootPermutation);
        }
        Ok(ThetaOnRoots {
            order,
            perm,
            weight_action,
        })
    }

    pub fn act(&self, root_idx: usize) -> usize {
        self.perm[root_idx]
    }

    pub fn act_iter(&self, root_idx: usize, times: u32) -> usize {
        let mut r = root_idx;
        for _ in 0..times {
            r = self.perm[r];
        }
        r
    }

    pub fn weight_action(&self) -> &[Vec<i64>] {
        &self.weight_action
    }

    pub fn orbit(&self, root_idx: usize) -> RootOrbit {
        let mut members = vec![root_idx];
        let mut cur = self.perm[root_idx];
        while cur != root_idx {
            members.push(cur);
            cur = self.perm[cur];
        }
        RootOrbit {
            representative: root_idx,
            members,
        }
    }
}

/// The omega-weighted orbit average of a root: exact simple-root coordinates
/// of `(1/m) * sum_i omega^(-i*j) theta^i(alpha)`, a vector in the
/// `omega^(-j)`-eigenspace of the weight action. The components over all
/// residues `j` sum back to the root.
pub fn alpha_component(
    rs: &RootSystem,
    theta: &ThetaOnRoots,
    root_idx: usize,
    j: i64,
) -> Vec<CycNum> {
    let m = theta.order as i64;
    let inv_m = CycNum::from_rational(Rational::new(1.into(), m.into()));
    let mut acc = vec![CycNum::zero(1); rs.rank];
    let mut cur = root_idx;
    for i in 0..m {
        let w = CycNum::root_of_unity(theta.order as u64, -i * j);
        for (k, c) in rs.root(cur).iter().enumerate() {
            if *c != 0 {
                acc[k] = acc[k].add(&w.scale(&Rational::from_integer((*c).into())));
            }
        }
        cur = theta.act(cur);
    }
    acc.iter().map(|c| c.mul(&inv_m)).collect()
}

/// Basis of the `omega^i`-eigenspace of the weight action on the complexified
/// root lattice.
pub fn weight_eigenspace(rs: &RootSystem, theta: &ThetaOnRoots, i: i64) -> Subspace {
    let n = rs.rank;
    let omega_i = CycNum::root_of_unity(theta.order as u64, i);
    let m = CycMatrix::from_fn(n, n, |r, c| {
        let mut v = CycNum::from_int(theta.weight_action()[r][c]);
        if r == c {
            v = v.sub(&omega_i);
        }
        v
    });
    Subspace::from_matrix_rows(&m.nullspace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rint;
    use crate::roots::RootFamily;

    #[test]
    fn negation_orbits_have_size_two() {
        let rs = RootSystem::build(RootFamily::A, 3).unwrap();
        let theta = ThetaOnRoots::negation(&rs);
        for r in 0..rs.num_roots() {
            let orbit = theta.orbit(r);
            assert_eq!(orbit.size(), 2);
            assert_eq!(orbit.members[1], rs.negate(r));
        }
    }

    #[test]
    fn identity_orbits_are_singletons() {
        let rs = RootSystem::build(RootFamily::A, 2).unwrap();
        let theta = ThetaOnRoots::identity(&rs);
        for r in 0..rs.num_roots() {
            assert_eq!(theta.orbit(r).size(), 1);
        }
    }

    /// The cyclic action on sl_m roots: theta sends alpha_k to alpha_(k-1)
    /// and alpha_1 to the lowest root.
    fn cyclic_sl(rs: &RootSystem, m: usize) -> ThetaOnRoots {
        let n = m - 1;
        let mut w = vec![vec![0i64; n]; n];
        for k in 1..n {
            // alpha_{k+1} -> alpha_k (0-based: column k gets e_{k-1})
            w[k - 1][k] = 1;
        }
        for row in w.iter_mut() {
            row[0] = -1; // alpha_1 -> -(alpha_1 + ... + alpha_{m-1})
        }
        ThetaOnRoots::from_coord_matrix(rs, w, m as u32).unwrap()
    }

    #[test]
    fn cyclic_orbits_parametrized_by_height() {
        for m in [2usize, 3, 4, 5] {
            let rs = RootSystem::build(RootFamily::A, m - 1).unwrap();
            let theta = cyclic_sl(&rs, m);
            for r in 0..rs.num_roots() {
                let orbit = theta.orbit(r);
                assert_eq!(orbit.size(), m, "orbit size is m");
                // all members share the height residue mod m
                let h0 = rs.height(r).rem_euclid(m as i64);
                for &mem in &orbit.members {
                    assert_eq!(rs.height(mem).rem_euclid(m as i64), h0);
                }
            }
            // the orbit of alpha_1 + ... + alpha_k is determined by k mod m
            let k = 1usize;
            let mut coords = vec![0i64; m - 1];
            coords[k - 1] = 1;
            let idx = rs.index_of(&coords).unwrap();
            assert_eq!(theta.orbit(idx).size(), m);
        }
    }

    #[test]
    fn components_sum_to_root() {
        // A_3 diagram flip and D_4 triality
        let rs = RootSystem::build(RootFamily::A, 3).unwrap();
        let theta = ThetaOnRoots::from_simple_permutation(&rs, &[2, 1, 0], 2).unwrap();
        check_component_sum(&rs, &theta);
        let rs = RootSystem::build(RootFamily::D, 4).unwrap();
        let theta = ThetaOnRoots::from_simple_permutation(&rs, &[2, 1, 3, 0], 3).unwrap();
        check_component_sum(&rs, &theta);
    }

    fn check_component_sum(rs: &RootSystem, theta: &ThetaOnRoots) {
        for r in 0..rs.num_roots() {
            let mut total = vec![CycNum::zero(1); rs.rank];
            for j in 0..theta.order as i64 {
                let comp = alpha_component(rs, theta, r, j);
                for (t, c) in total.iter_mut().zip(comp.iter()) {
                    *t = t.add(c);
                }
            }
            for (t, c) in total.iter().zip(rs.root(r)) {
                assert_eq!(t, &CycNum::from_int(*c));
            }
        }
    }

    #[test]
    fn fixed_root_has_zero_first_component() {
        let rs = RootSystem::build(RootFamily::A, 3).unwrap();
        let theta = ThetaOnRoots::from_simple_permutation(&rs, &[2, 1, 0], 2).unwrap();
        // alpha_2 (middle node) is theta-fixed
        let fixed = rs.simple_root_index(1);
        assert_eq!(theta.act(fixed), fixed);
        let comp = alpha_component(&rs, &theta, fixed, 1);
        assert!(comp.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn component_orthogonal_to_other_eigenspaces() {
        // pairing of alpha^(j) with an omega^i-eigenvector vanishes for i != -j
        for (rs, theta) in [
            (
                RootSystem::build(RootFamily::A, 3).unwrap(),
                ThetaOnRoots::from_simple_permutation(
                    &RootSystem::build(RootFamily::A, 3).unwrap(),
                    &[2, 1, 0],
                    2,
                )
                .unwrap(),
            ),
            (
                RootSystem::build(RootFamily::D, 4).unwrap(),
                ThetaOnRoots::from_simple_permutation(
                    &RootSystem::build(RootFamily::D, 4).unwrap(),
                    &[2, 1, 3, 0],
                    3,
                )
                .unwrap(),
            ),
        ] {
            let m = theta.order as i64;
            for j in 0..m {
                for i in 0..m {
                    if (i + j).rem_euclid(m) == 0 {
                        continue;
                    }
                    let eig = weight_eigenspace(&rs, &theta, i);
                    for w in eig.basis_vectors() {
                        for r in 0..rs.num_roots() {
                            let comp = alpha_component(&rs, &theta, r, j);
                            // (comp, w) via the Cartan form
                            let mut pairing = CycNum::zero(1);
                            for a in 0..rs.rank {
                                for b in 0..rs.rank {
                                    let f = rs.cartan()[a][b];
                                    if f == 0 {
                                        continue;
                                    }
                                    let t = comp[a].mul(&w[b]).scale(&rint(f));
                                    pairing = pairing.add(&t);
                                }
                            }
                            assert!(pairing.is_zero());
                        }
                    }
                }
            }
        }
    }
}
