//! Construction of the graded algebras: diagram automorphisms with exact
//! sign corrections, the transpose involution of sl_N, inner automorphisms
//! of sl_(n+1) from ordered partitions, the resulting eigenspace gradings,
//! Cartan subspaces, and the non-uniqueness demonstration for Jordan-like
//! decompositions.

mod cartan;
mod descriptor;
mod diagram;
mod inner;
mod jkv;

pub use cartan::CartanSubspace;
pub use descriptor::{CaseDescriptor, CaseKind};
pub use diagram::{make_chevalley_involution, make_diagram_theta, DiagramCase, DiagramKind};
pub use inner::{make_inner_theta, InnerThetaData};
pub use jkv::{jkv_check, JkvReport};

use crate::algebra::{AlgAutomorphism, AlgebraError, LieAlgebra};
use crate::exact::{CycNum, Subspace};
use crate::roots::RootError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("automorphism check failed: {0}")]
    AutomorphismCheckFailed(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("block is not nilpotent")]
    NotNilpotent,
    #[error("descriptor parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Roots(#[from] RootError),
}

/// A periodically graded algebra: an order-m automorphism together with its
/// eigenspace decomposition `g_i = ker(theta - omega^i)`.
#[derive(Clone)]
pub struct GradedAlgebra {
    pub algebra: LieAlgebra,
    pub theta: AlgAutomorphism,
    pub m: u32,
    pub omega: CycNum,
    components: Vec<Subspace>,
}

impl GradedAlgebra {
    pub fn new(
        algebra: LieAlgebra,
        theta: AlgAutomorphism,
        m: u32,
    ) -> Result<Self, GradingError> {
        assert!(m >= 1);
        if !theta.pow(m as u64).is_identity() {
            return Err(GradingError::AutomorphismCheckFailed(format!(
                "theta^{m} is not the identity"
            )));
        }
        let omega = CycNum::root_of_unity(m as u64, 1);
        let dim = algebra.dim;
        let mut components = Vec::with_capacity(m as usize);
        let mut total = 0usize;
        for i in 0..m {
            let omega_i = omega.pow(i as i64).unwrap();
            let mut shifted = theta.matrix.clone();
            for d in 0..dim {
                let v = shifted.get(d, d).sub(&omega_i);
                shifted.set(d, d, v);
            }
            let comp = Subspace::from_matrix_rows(&shifted.nullspace());
            total += comp.dim();
            components.push(comp);
        }
        if total != dim {
            return Err(GradingError::AutomorphismCheckFailed(format!(
                "eigenspace dimensions sum to {total}, expected {dim}"
            )));
        }
        Ok(GradedAlgebra {
            algebra,
            theta,
            m,
            omega,
            components,
        })
    }

    pub fn component(&self, i: i64) -> &Subspace {
        let idx = i.rem_euclid(self.m as i64) as usize;
        &self.components[idx]
    }

    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim()).collect()
    }

    /// Degree of a homogeneous element, if it is homogeneous.
    pub fn degree_of(&self, coords: &[CycNum]) -> Option<u32> {
        let img = self.theta.matrix.apply(coords);
        for i in 0..self.m {
            let omega_i = self.omega.pow(i as i64).unwrap();
            let ok = img
                .iter()
                .zip(coords)
                .all(|(a, b)| *a == b.mul(&omega_i));
            if ok {
                return Some(i);
            }
        }
        None
    }

    /// The exact order of theta (at most m by construction).
    pub fn theta_order(&self) -> u32 {
        self.theta.order_up_to(self.m).expect("theta^m = id")
    }

    /// Graded bracket containment `[g_i, g_j] in g_(i+j)` on all homogeneous
    /// basis pairs, checked through the eigenvalue equation.
    pub fn verify_bracket_containment(&self) -> Result<(), String> {
        for i in 0..self.m {
            for j in 0..self.m {
                let target = self
                    .omega
                    .pow(((i + j) % self.m) as i64)
                    .unwrap();
                for u in self.components[i as usize].basis_vectors() {
                    let ue = crate::algebra::AlgElement::new(u);
                    for v in self.components[j as usize].basis_vectors() {
                        let w = self
                            .algebra
                            .bracket(&ue, &crate::algebra::AlgElement::new(v));
                        if w.is_zero() {
                            continue;
                        }
                        let img = self.theta.matrix.apply(w.coords());
                        for (a, b) in img.iter().zip(w.coords()) {
                            if *a != b.mul(&target) {
                                return Err(format!(
                                    "bracket of degrees {i},{j} left its component"
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `(g_i, g_j) = 0` whenever `i + j != 0 (mod m)`.
    pub fn verify_form_orthogonality(&self) -> Result<(), String> {
        for i in 0..self.m {
            for j in 0..self.m {
                if (i + j) % self.m == 0 {
                    continue;
                }
                for u in self.components[i as usize].basis_vectors() {
                    let ue = crate::algebra::AlgElement::new(u);
                    for v in self.components[j as usize].basis_vectors() {
                        let f = self
                            .algebra
                            .form(&ue, &crate::algebra::AlgElement::new(v));
                        if !f.is_zero() {
                            return Err(format!(
                                "components {i} and {j} are not form-orthogonal"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `dim g_i = dim g_(-i)` for all degrees.
    pub fn verify_dim_symmetry(&self) -> bool {
        (0..self.m).all(|i| {
            self.components[i as usize].dim()
                == self.components[((self.m - i) % self.m) as usize].dim()
        })
    }
}
