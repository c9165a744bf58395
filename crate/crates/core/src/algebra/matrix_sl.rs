//! sl_n as traceless n x n matrices: basis `H_1..H_(n-1)` (with
//! `H_i = E_ii - E_(i+1)(i+1)`) followed by the off-diagonal units `E_ij` in
//! row-major order. The form is the trace form, under which the long roots
//! already have squared length 2.

use super::{AlgElement, AlgebraError, LieAlgebra, Realization, SparseVec};
use crate::exact::{CycMatrix, CycNum};

/// Basis index of `E_ij` (0-based i, j; i != j) after the n-1 Cartan
/// generators.
pub fn unit_index(n: usize, i: usize, j: usize) -> usize {
    assert!(i != j && i < n && j < n);
    let mut idx = n - 1;
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            if (a, b) == (i, j) {
                return idx;
            }
            idx += 1;
        }
    }
    unreachable!()
}

/// Off-diagonal pairs (i, j) in basis order.
pub fn unit_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n - n);
    for a in 0..n {
        for b in 0..n {
            if a != b {
                out.push((a, b));
            }
        }
    }
    out
}

impl LieAlgebra {
    /// For the matrix realization: the element as an n x n matrix.
    pub fn to_matrix(&self, x: &AlgElement) -> CycMatrix {
        let Realization::MatrixSl { n } = self.realization else {
            panic!("to_matrix needs the matrix realization");
        };
        let mut m = CycMatrix::zeros(n, n);
        for k in 0..n - 1 {
            let c = x.get(k);
            if c.is_zero() {
                continue;
            }
            let t = m.get(k, k).add(c);
            m.set(k, k, t);
            let t = m.get(k + 1, k + 1).sub(c);
            m.set(k + 1, k + 1, t);
        }
        for (idx, (i, j)) in unit_pairs(n).iter().enumerate() {
            let c = x.get(n - 1 + idx);
            if !c.is_zero() {
                m.set(*i, *j, c.clone());
            }
        }
        m
    }

    /// For the matrix realization: expand a traceless matrix in the basis.
    pub fn from_matrix(&self, m: &CycMatrix) -> Result<AlgElement, AlgebraError> {
        let Realization::MatrixSl { n } = self.realization else {
            panic!("from_matrix needs the matrix realization");
        };
        assert_eq!((m.rows(), m.cols()), (n, n));
        let mut trace = CycNum::zero(1);
        for i in 0..n {
            trace = trace.add(m.get(i, i));
        }
        if !trace.is_zero() {
            return Err(AlgebraError::NotTraceless);
        }
        let mut coords = vec![CycNum::zero(1); self.dim];
        // diagonal part: coefficient of H_k is the partial sum d_1 + ... + d_k
        let mut partial = CycNum::zero(1);
        for k in 0..n - 1 {
            partial = partial.add(m.get(k, k));
            coords[k] = partial.clone();
        }
        for (idx, (i, j)) in unit_pairs(n).iter().enumerate() {
            coords[n - 1 + idx] = m.get(*i, *j).clone();
        }
        Ok(AlgElement::new(coords))
    }
}

/// Builds sl_n in the matrix realization; bracket is the commutator, the
/// form is `tr(xy)`.
pub fn build_matrix_sl(n: usize) -> LieAlgebra {
    assert!(n >= 2);
    let dim = n * n - 1;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..n - 1 {
        labels.push(format!("H{}", i + 1));
    }
    for (i, j) in unit_pairs(n) {
        labels.push(format!("E{},{}", i + 1, j + 1));
    }

    // temporary algebra handle for the matrix conversions
    let proto = LieAlgebra::from_parts(
        Realization::MatrixSl { n },
        labels.clone(),
        vec![Vec::new(); dim * dim],
        CycMatrix::zeros(dim, dim),
    );

    let basis_mats: Vec<CycMatrix> = (0..dim)
        .map(|k| proto.to_matrix(&AlgElement::basis(dim, k)))
        .collect();

    let mut table: Vec<SparseVec> = vec![Vec::new(); dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            let comm = basis_mats[a]
                .mul(&basis_mats[b])
                .sub(&basis_mats[b].mul(&basis_mats[a]));
            let el = proto.from_matrix(&comm).expect("commutators are traceless");
            let sparse: SparseVec = el
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect();
            table[a * dim + b] = sparse;
        }
    }

    let mut form = CycMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            let prod = basis_mats[a].mul(&basis_mats[b]);
            let mut tr = CycNum::zero(1);
            for i in 0..n {
                tr = tr.add(prod.get(i, i));
            }
            if !tr.is_zero() {
                form.set(a, b, tr);
            }
        }
    }

    LieAlgebra::from_parts(Realization::MatrixSl { n }, labels, table, form)
}
