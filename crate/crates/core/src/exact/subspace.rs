//! Linear subspaces given by a canonical (RREF) basis of row vectors.

use super::cyclotomic::CycNum;
use super::matrix::CycMatrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows, no zero rows; canonical per subspace.
    basis: CycMatrix,
}

impl Subspace {
    pub fn from_vectors(ambient: usize, vectors: &[Vec<CycNum>]) -> Self {
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: CycMatrix::zeros(0, ambient),
            };
        }
        let m = CycMatrix::from_rows(vectors.to_vec());
        assert_eq!(m.cols(), ambient);
        let (rref, pivots) = m.rref();
        let rows: Vec<Vec<CycNum>> = (0..pivots.len()).map(|i| rref.row(i)).collect();
        let basis = if rows.is_empty() {
            CycMatrix::zeros(0, ambient)
        } else {
            CycMatrix::from_rows(rows)
        };
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_vectors(ambient, &[])
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: CycMatrix::identity(ambient),
        }
    }

    /// Rows of a matrix as a subspace (its row space).
    pub fn from_matrix_rows(m: &CycMatrix) -> Self {
        let vectors: Vec<Vec<CycNum>> = (0..m.rows()).map(|i| m.row(i)).collect();
        Self::from_vectors(m.cols(), &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &CycMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<CycNum>> {
        (0..self.basis.rows()).map(|i| self.basis.row(i)).collect()
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        if self.dim() == 0 {
            return false;
        }
        let stacked = self
            .basis
            .vstack(&CycMatrix::from_rows(vec![v.to_vec()]));
        stacked.rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::from_vectors(self.ambient, &vs)
    }

    /// Intersection via the left nullspace of the stacked basis: a vector of
    /// the intersection is `x * A` where `(x, y)` annihilates `[A; B]` from
    /// the left.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let stacked = self.basis.vstack(&other.basis);
        let left_null = stacked.transpose().nullspace();
        let mut vectors = Vec::new();
        for r in 0..left_null.rows() {
            let xy = left_null.row(r);
            let mut v = vec![CycNum::zero(1); self.ambient];
            for (i, coef) in xy[..self.dim()].iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    let b = self.basis.get(i, j);
                    if !b.is_zero() {
                        v[j] = v[j].add(&coef.mul(b));
                    }
                }
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.ambient, &vectors)
    }
}
