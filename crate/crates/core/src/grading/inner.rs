//! Inner automorphisms of sl_(n+1) of positive rank, encoded by an ordered
//! partition (k_1, k_2, ...) of n+1: odd-indexed entries are runs of crossed
//! nodes on the affine diagram (starting at the lowest root), even-indexed
//! entries are uncrossed runs. The order m is the total number of crossed
//! nodes and the automorphism is conjugation by the block-diagonal matrix
//! with r cyclic-permutation blocks P and scalar blocks soaking up the
//! remaining eigenvalue multiplicities.

use super::{GradedAlgebra, GradingError};
use crate::algebra::{apply_matrix_conjugation, build_matrix_sl};
use crate::exact::{rat, CycMatrix, CycNum, Rational};

#[derive(Clone)]
pub struct InnerThetaData {
    pub partition: Vec<usize>,
    pub size: usize,
    pub m: u32,
    pub r: usize,
    /// Multiplicity of the eigenvalue omega^t of exp(2 pi i x), t = 0..m-1.
    pub eigen_multiplicities: Vec<usize>,
    /// The conjugating matrix of the normal form: diag(P, ..., P, scalars).
    pub g_matrix: CycMatrix,
    /// Exact logarithm: exp(2 pi i x_element) = g_matrix.
    pub x_element: CycMatrix,
    /// diag(1, omega, ..., omega^(m-1)).
    pub s_matrix: CycMatrix,
    /// The Cartan subspace generators s_1..s_r as (n+1)x(n+1) matrices.
    pub s_blocks: Vec<CycMatrix>,
    /// The central element completing h = t + h' + C*iota.
    pub iota: CycMatrix,
    /// Permutation of diagonal coordinates induced by the monomial g_matrix.
    pub coordinate_perm: Vec<usize>,
}

/// m x m cyclic permutation matrix with ones on the superdiagonal and in the
/// lower-left corner.
pub(crate) fn cyclic_matrix(m: usize) -> CycMatrix {
    let mut p = CycMatrix::zeros(m, m);
    for i in 0..m - 1 {
        p.set(i, i + 1, CycNum::one());
    }
    p.set(m - 1, 0, CycNum::one());
    p
}

pub fn make_inner_theta(
    partition: &[usize],
    declared_m: Option<u32>,
) -> Result<(GradedAlgebra, InnerThetaData), GradingError> {
    if partition.is_empty() || partition.iter().any(|&k| k == 0) {
        return Err(GradingError::InvalidPartition(
            "partition entries must be positive".into(),
        ));
    }
    let size: usize = partition.iter().sum();
    if size < 2 {
        return Err(GradingError::InvalidPartition(
            "partition must sum to at least 2".into(),
        ));
    }
    let m: usize = partition.iter().step_by(2).sum();
    if m < 2 {
        return Err(GradingError::InvalidPartition(
            "order m (sum of crossed runs) must be at least 2".into(),
        ));
    }
    if let Some(dm) = declared_m {
        if dm as usize != m {
            return Err(GradingError::InvalidPartition(format!(
                "declared order {dm} does not match the partition's crossed-node count {m}"
            )));
        }
    }

    // eigenvalue multiplicities of the diagonal normal form
    let mut mult = vec![0usize; m];
    let mut cur: i64 = -1;
    for (t, &k) in partition.iter().enumerate() {
        if t % 2 == 0 {
            for _ in 0..k {
                cur += 1;
                mult[cur as usize] += 1;
            }
        } else {
            mult[cur as usize] += k;
        }
    }
    debug_assert_eq!(mult.iter().sum::<usize>(), size);
    let r = *mult.iter().min().expect("m >= 2");

    let omega = CycNum::root_of_unity(m as u64, 1);

    // g = diag(P, ..., P, omega^t Id_(mult_t - r) ...)
    let mut g = CycMatrix::zeros(size, size);
    let p = cyclic_matrix(m);
    for b in 0..r {
        for i in 0..m {
            for j in 0..m {
                let v = p.get(i, j);
                if !v.is_zero() {
                    g.set(b * m + i, b * m + j, v.clone());
                }
            }
        }
    }
    let mut offset = r * m;
    let mut leftover_powers: Vec<i64> = Vec::new();
    for (t, &mt) in mult.iter().enumerate() {
        for _ in 0..mt - r {
            leftover_powers.push(t as i64);
        }
    }
    for &t in &leftover_powers {
        g.set(offset, offset, omega.pow(t).unwrap());
        offset += 1;
    }
    debug_assert_eq!(offset, size);

    // exact logarithm: in each P block, x = F diag(j/m) F^(-1); scalar blocks
    // log omega^t = t/m
    let f = CycMatrix::from_fn(m, m, |i, j| omega.pow((i * j) as i64).unwrap());
    let f_inv = CycMatrix::from_fn(m, m, |i, j| {
        omega
            .pow(-((i * j) as i64))
            .unwrap()
            .scale(&rat(1, m as i64))
    });
    let d_log = CycMatrix::from_fn(m, m, |i, j| {
        if i == j {
            CycNum::from_rational(Rational::new((i as i64).into(), (m as i64).into()))
        } else {
            CycNum::zero(1)
        }
    });
    let x_block = f.mul(&d_log).mul(&f_inv);
    let mut x_el = CycMatrix::zeros(size, size);
    for b in 0..r {
        for i in 0..m {
            for j in 0..m {
                let v = x_block.get(i, j);
                if !v.is_zero() {
                    x_el.set(b * m + i, b * m + j, v.clone());
                }
            }
        }
    }
    for (k, &t) in leftover_powers.iter().enumerate() {
        x_el.set(
            r * m + k,
            r * m + k,
            CycNum::from_rational(Rational::new(t.into(), (m as i64).into())),
        );
    }

    // s = diag(1, omega, ..., omega^(m-1)) and its block placements
    let s_matrix = CycMatrix::from_fn(m, m, |i, j| {
        if i == j {
            omega.pow(i as i64).unwrap()
        } else {
            CycNum::zero(1)
        }
    });
    let mut s_blocks = Vec::with_capacity(r);
    for b in 0..r {
        let mut sb = CycMatrix::zeros(size, size);
        for i in 0..m {
            sb.set(b * m + i, b * m + i, omega.pow(i as i64).unwrap());
        }
        s_blocks.push(sb);
    }

    // iota = diag((n+1-rm) Id_rm, -rm Id_(n+1-rm))
    let mut iota = CycMatrix::zeros(size, size);
    for i in 0..r * m {
        iota.set(i, i, CycNum::from_int((size - r * m) as i64));
    }
    for i in r * m..size {
        iota.set(i, i, CycNum::from_int(-((r * m) as i64)));
    }

    // coordinate permutation of the monomial matrix: column j supports row perm(j)
    let mut coordinate_perm = vec![0usize; size];
    for j in 0..size {
        let mut row = None;
        for i in 0..size {
            if !g.get(i, j).is_zero() {
                assert!(row.is_none(), "g must be monomial");
                row = Some(i);
            }
        }
        coordinate_perm[j] = row.expect("g has no zero column");
    }

    let alg = build_matrix_sl(size);
    let theta = apply_matrix_conjugation(&alg, &g)?;
    if theta.order_up_to(m as u32) != Some(m as u32) {
        return Err(GradingError::AutomorphismCheckFailed(format!(
            "inner theta does not have exact order {m}"
        )));
    }
    let graded = GradedAlgebra::new(alg, theta, m as u32)?;

    let data = InnerThetaData {
        partition: partition.to_vec(),
        size,
        m: m as u32,
        r,
        eigen_multiplicities: mult,
        g_matrix: g,
        x_element: x_el,
        s_matrix,
        s_blocks,
        iota,
        coordinate_perm,
    };
    Ok((graded, data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::spectral_exp_matrix_known;
    use crate::exact::rint;

    #[test]
    fn sl4_alternating_partition() {
        let (graded, data) = make_inner_theta(&[1, 1, 1, 1], Some(2)).unwrap();
        assert_eq!((data.m, data.r), (2, 2));
        // eigenvalues of diag(1,-1,1,-1) both have multiplicity 2
        assert_eq!(data.eigen_multiplicities, vec![2, 2]);
        // g = diag(P, P) with P the 2x2 swap
        let p = cyclic_matrix(2);
        for b in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(data.g_matrix.get(2 * b + i, 2 * b + j), p.get(i, j));
                }
            }
        }
        // theta^2 = id with exact order 2
        assert_eq!(graded.theta_order(), 2);
        assert!(graded.verify_dim_symmetry());
    }

    #[test]
    fn rank_is_minimal_multiplicity() {
        for (partition, want_m, want_r) in [
            (vec![2usize, 2], 2u32, 1usize),
            (vec![1, 2, 1], 2, 1),
            (vec![1, 1, 1, 1, 1], 3, 1),
            (vec![1, 1, 1, 1, 1, 1], 3, 2),
            (vec![1, 2, 1, 2], 2, 3),
            (vec![1, 1, 2, 2], 3, 1),
        ] {
            let (_, data) = make_inner_theta(&partition, None).unwrap();
            assert_eq!((data.m, data.r), (want_m, want_r), "{partition:?}");
        }
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(make_inner_theta(&[], None).is_err());
        assert!(make_inner_theta(&[2, 0, 1], None).is_err());
        // m = 1 not representable in this normal form
        assert!(make_inner_theta(&[1, 3], None).is_err());
        // declared order mismatch
        assert!(make_inner_theta(&[1, 1, 1, 1], Some(3)).is_err());
    }

    #[test]
    fn x_element_is_exact_logarithm() {
        for partition in [vec![1usize, 1, 1, 1], vec![2, 2], vec![1, 1, 1]] {
            let (_, data) = make_inner_theta(&partition, None).unwrap();
            // exp(2 pi i x) computed spectrally: eigenvalues of 2i*x are
            // 2i*t/m, so the spectrum handed in is {2t/m}
            let m = data.m as i64;
            let two_i = CycNum::root_of_unity(4, 1).scale(&rint(2));
            let arg = data.x_element.scale(&two_i);
            let spectrum: Vec<_> = (0..m).map(|t| rat(2 * t, m)).collect();
            let exp = spectral_exp_matrix_known(&rint(1), &arg, &spectrum).unwrap();
            assert_eq!(exp, data.g_matrix, "{partition:?}");
        }
    }

    #[test]
    fn cartan_line_scales_by_omega() {
        // theta restricted to each s_l is multiplication by omega
        let (graded, data) = make_inner_theta(&[1, 1, 1, 1, 1, 1], None).unwrap();
        for sb in &data.s_blocks {
            let el = graded.algebra.from_matrix(sb).unwrap();
            let img = graded.theta.apply(&el);
            assert_eq!(img, el.scale(&graded.omega));
        }
    }

    #[test]
    fn grading_checks_small() {
        let (graded, _) = make_inner_theta(&[1, 1, 1], None).unwrap();
        assert_eq!(graded.verify_bracket_containment(), Ok(()));
        assert_eq!(graded.verify_form_orthogonality(), Ok(()));
        assert!(graded.verify_dim_symmetry());
    }
}
