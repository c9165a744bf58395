//! Concrete realizations of the Lie algebras: Chevalley structure constants
//! over a root system, and matrix units for type A. Brackets, the invariant
//! form, ad-matrices, centralizers, semisimplicity tests and exact
//! exponentials live here.

pub(crate) mod chevalley;
pub mod matrix_sl;
mod ops;

pub use chevalley::build_chevalley;
pub use matrix_sl::build_matrix_sl;
pub use ops::{
    apply_matrix_conjugation, centralizer, i_rational_spectrum, is_nilpotent, is_semisimple,
    minimal_polynomial, spectral_exp, spectral_exp_matrix, spectral_exp_matrix_known,
};

use crate::exact::{CycMatrix, CycNum, Subspace};
use crate::roots::RootSystem;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unsupported algebra type: {0}")]
    UnsupportedType(String),
    #[error("operator is not semisimple (minimal polynomial not squarefree)")]
    NotSemisimple,
    #[error("spectrum is not of the form i*q with rational q")]
    NonPeriodicSpectrum,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("bracket preservation failed on basis pair ({0}, {1})")]
    AutomorphismCheckFailed(usize, usize),
}

type SparseVec = Vec<(usize, CycNum)>;

#[derive(Debug, Clone)]
pub enum Realization {
    /// Chevalley basis: Cartan generators `h_1..h_N`, then a root vector per
    /// root in root-system order.
    Chevalley { roots: Arc<RootSystem> },
    /// Traceless n x n matrices: `H_1..H_(n-1)`, then the units `E_ij`,
    /// `i != j`, in row-major order.
    MatrixSl { n: usize },
}

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub dim: usize,
    pub realization: Realization,
    labels: Vec<String>,
    bracket_table: Vec<SparseVec>,
    form_matrix: CycMatrix,
}

/// An element of a Lie algebra as exact coordinates in the fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgElement {
    coords: Vec<CycNum>,
}

impl AlgElement {
    pub fn new(coords: Vec<CycNum>) -> Self {
        AlgElement { coords }
    }

    pub fn zero(dim: usize) -> Self {
        AlgElement {
            coords: vec![CycNum::zero(1); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = CycNum::one();
        e
    }

    pub fn coords(&self) -> &[CycNum] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<CycNum> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &CycNum {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, v: CycNum) {
        self.coords[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        AlgElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        AlgElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> AlgElement {
        AlgElement {
            coords: self.coords.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> AlgElement {
        AlgElement {
            coords: self.coords.iter().map(|x| x.mul(c)).collect(),
        }
    }
}

impl LieAlgebra {
    pub(crate) fn from_parts(
        realization: Realization,
        labels: Vec<String>,
        bracket_table: Vec<SparseVec>,
        form_matrix: CycMatrix,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(bracket_table.len(), dim * dim);
        LieAlgebra {
            dim,
            realization,
            labels,
            bracket_table,
            form_matrix,
        }
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        AlgElement::basis(self.dim, i)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, CycNum)] {
        &self.bracket_table[i * self.dim + j]
    }

    pub fn bracket(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = vec![CycNum::zero(1); self.dim];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k] = out[*k].add(&c.mul(&ab));
                }
            }
        }
        AlgElement::new(out)
    }

    /// The matrix of `ad(x)` in the fixed basis.
    pub fn ad_matrix(&self, x: &AlgElement) -> CycMatrix {
        let mut m = CycMatrix::zeros(self.dim, self.dim);
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.bracket_basis(i, j) {
                    let t = m.get(*k, j).add(&a.mul(c));
                    m.set(*k, j, t);
                }
            }
        }
        m
    }

    pub fn form(&self, x: &AlgElement, y: &AlgElement) -> CycNum {
        let mut s = CycNum::zero(1);
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let f = self.form_matrix.get(i, j);
                if !f.is_zero() {
                    s = s.add(&f.mul(&a.mul(b)));
                }
            }
        }
        s
    }

    pub fn form_matrix(&self) -> &CycMatrix {
        &self.form_matrix
    }

    /// Antisymmetry on all basis pairs, zero tolerance.
    pub fn verify_antisymmetry(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..=i {
                let xy = self.bracket(&self.basis_element(i), &self.basis_element(j));
                let yx = self.bracket(&self.basis_element(j), &self.basis_element(i));
                if !xy.add(&yx).is_zero() {
                    return false;
                }
                if i == j && !xy.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Jacobi identity on all unordered basis triples; with antisymmetry and
    /// bilinearity this covers every triple.
    pub fn verify_jacobi_exhaustive(&self) -> Result<(), (usize, usize, usize)> {
        for i in 0..self.dim {
            let bi = self.basis_element(i);
            for j in i + 1..self.dim {
                let bj = self.basis_element(j);
                let bij = self.bracket(&bi, &bj);
                for k in j + 1..self.dim {
                    let bk = self.basis_element(k);
                    let t1 = self.bracket(&bij, &bk);
                    let t2 = self.bracket(&self.bracket(&bj, &bk), &bi);
                    let t3 = self.bracket(&self.bracket(&bk, &bi), &bj);
                    if !t1.add(&t2).add(&t3).is_zero() {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Associativity of the invariant form on all basis triples.
    pub fn verify_form_associative(&self) -> Result<(), (usize, usize, usize)> {
        for i in 0..self.dim {
            let bi = self.basis_element(i);
            for j in 0..self.dim {
                let bj = self.basis_element(j);
                let bij = self.bracket(&bi, &bj);
                for k in 0..self.dim {
                    let bk = self.basis_element(k);
                    let lhs = self.form(&bij, &bk);
                    let rhs = self.form(&bi, &self.bracket(&bj, &bk));
                    if lhs != rhs {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// For the Chevalley realization, the basis index of the root vector.
    pub fn root_vector_index(&self, root_idx: usize) -> usize {
        match &self.realization {
            Realization::Chevalley { roots } => roots.rank + root_idx,
            Realization::MatrixSl { .. } => panic!("root_vector_index needs Chevalley basis"),
        }
    }

    /// For the Chevalley realization, the Cartan element identified with a
    /// weight-lattice vector via the normalized form: t_alpha has h-coords
    /// equal to the simple-root coordinates of alpha.
    pub fn cartan_element(&self, weight_coords: &[CycNum]) -> AlgElement {
        match &self.realization {
            Realization::Chevalley { .. } => {
                let mut e = AlgElement::zero(self.dim);
                for (i, c) in weight_coords.iter().enumerate() {
                    e.coords[i] = c.clone();
                }
                e
            }
            Realization::MatrixSl { .. } => panic!("cartan_element needs Chevalley basis"),
        }
    }
}

/// A linear automorphism of the algebra given by its matrix in the fixed
/// basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgAutomorphism {
    pub matrix: CycMatrix,
}

impl AlgAutomorphism {
    pub fn new(matrix: CycMatrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols());
        AlgAutomorphism { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        AlgAutomorphism {
            matrix: CycMatrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &AlgElement) -> AlgElement {
        AlgElement::new(self.matrix.apply(x.coords()))
    }

    pub fn compose(&self, other: &AlgAutomorphism) -> AlgAutomorphism {
        AlgAutomorphism {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn inverse(&self) -> Result<AlgAutomorphism, AlgebraError> {
        self.matrix
            .inverse()
            .map(AlgAutomorphism::new)
            .map_err(|_| AlgebraError::SingularMatrix)
    }

    pub fn pow(&self, e: u64) -> AlgAutomorphism {
        AlgAutomorphism {
            matrix: self.matrix.pow(e),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Smallest positive power equal to the identity, up to the cap.
    pub fn order_up_to(&self, cap: u32) -> Option<u32> {
        let mut acc = self.matrix.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(&self.matrix);
        }
        None
    }

    pub fn commutes_with(&self, other: &CycMatrix) -> bool {
        self.matrix.mul(other) == other.mul(&self.matrix)
    }

    /// Bracket preservation `M[x,y] = [Mx, My]` on every basis pair.
    pub fn verify_bracket_preservation(&self, alg: &LieAlgebra) -> Result<(), AlgebraError> {
        let images: Vec<AlgElement> = (0..alg.dim)
            .map(|j| AlgElement::new(self.matrix.col(j)))
            .collect();
        for i in 0..alg.dim {
            for j in i + 1..alg.dim {
                let lhs = self.apply(&alg.bracket(&alg.basis_element(i), &alg.basis_element(j)));
                let rhs = alg.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(AlgebraError::AutomorphismCheckFailed(i, j));
                }
            }
        }
        Ok(())
    }

    /// Bracket preservation on a deterministic subsample of basis pairs, for
    /// the cases where the exhaustive check would be run many times over a
    /// large algebra.
    pub fn verify_bracket_preservation_sampled(
        &self,
        alg: &LieAlgebra,
        samples: usize,
    ) -> Result<(), AlgebraError> {
        let n = alg.dim;
        let total = n * (n - 1) / 2;
        let step = (total / samples.max(1)).max(1);
        let mut count = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                count += 1;
                if count % step != 0 {
                    continue;
                }
                let mi = AlgElement::new(self.matrix.col(i));
                let mj = AlgElement::new(self.matrix.col(j));
                let lhs = self.apply(&alg.bracket(&alg.basis_element(i), &alg.basis_element(j)));
                let rhs = alg.bracket(&mi, &mj);
                if lhs != rhs {
                    return Err(AlgebraError::AutomorphismCheckFailed(i, j));
                }
            }
        }
        Ok(())
    }

    /// The automorphism maps the subspace into itself.
    pub fn preserves_subspace(&self, s: &Subspace) -> bool {
        s.basis_vectors()
            .iter()
            .all(|v| s.contains(&self.matrix.apply(v)))
    }
}
