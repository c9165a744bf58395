//! Cartan subspaces of the graded cases: the degree-1 part of a homogeneous
//! Cartan subalgebra, with full validation (abelian, semisimple generators,
//! expected dimension, and equality with h intersect g_1).

use super::diagram::DiagramCase;
use super::inner::InnerThetaData;
use super::{GradedAlgebra, GradingError};
use crate::algebra::{is_semisimple, AlgElement};
use crate::exact::Subspace;
use crate::roots::alpha_component;

#[derive(Clone)]
pub struct CartanSubspace {
    pub basis: Vec<AlgElement>,
    pub ambient_cartan: Vec<AlgElement>,
    pub expected_rank: usize,
}

impl CartanSubspace {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn subspace(&self, dim: usize) -> Subspace {
        Subspace::from_vectors(
            dim,
            &self
                .basis
                .iter()
                .map(|b| b.coords().to_vec())
                .collect::<Vec<_>>(),
        )
    }

    pub fn ambient_subspace(&self, dim: usize) -> Subspace {
        Subspace::from_vectors(
            dim,
            &self
                .ambient_cartan
                .iter()
                .map(|b| b.coords().to_vec())
                .collect::<Vec<_>>(),
        )
    }

    /// Validation per the construction contract: pairwise commuting
    /// semisimple basis inside g_1, of the expected dimension, equal to
    /// `h intersect g_1` for the recorded homogeneous Cartan subalgebra.
    pub fn validate(&self, graded: &GradedAlgebra) -> Result<(), GradingError> {
        let fail = |msg: String| Err(GradingError::ValidationFailed(msg));
        let dim = graded.algebra.dim;
        let c_space = self.subspace(dim);
        if c_space.dim() != self.basis.len() {
            return fail("Cartan subspace basis is linearly dependent".into());
        }
        if self.basis.len() != self.expected_rank {
            return fail(format!(
                "rank {} does not match expected {}",
                self.basis.len(),
                self.expected_rank
            ));
        }
        for (i, x) in self.basis.iter().enumerate() {
            if graded.degree_of(x.coords()) != Some(1 % graded.m) {
                return fail(format!("basis vector {i} is not of degree 1"));
            }
            for y in &self.basis[i..] {
                if !graded.algebra.bracket(x, y).is_zero() {
                    return fail("Cartan subspace is not abelian".into());
                }
            }
            if !is_semisimple(&graded.algebra, x) {
                return fail(format!("basis vector {i} is not semisimple"));
            }
        }
        // c = h intersect g_1
        let h_space = self.ambient_subspace(dim);
        let g1 = graded.component(1);
        let meet = h_space.intersect(g1);
        if !meet.equals(&c_space) {
            return fail("c does not equal h intersect g_1".into());
        }
        // the ambient Cartan must be homogeneous (theta-stable)
        if !graded.theta.preserves_subspace(&h_space) {
            return fail("ambient Cartan subalgebra is not theta-stable".into());
        }
        Ok(())
    }
}

/// Cartan subspace of a diagram case: the degree-1 orbit averages of one
/// simple root per moved orbit, inside the span of the Cartan generators.
pub fn diagram_cartan_subspace(case: &DiagramCase) -> CartanSubspace {
    let alg = &case.graded.algebra;
    let mut basis = Vec::new();
    for rep in case.kind.cartan_rep_indices() {
        let root_idx = case.rs.simple_root_index(rep);
        let comp = alpha_component(&case.rs, &case.theta_roots, root_idx, 1);
        basis.push(alg.cartan_element(&comp));
    }
    let ambient = (0..case.rs.rank).map(|i| alg.basis_element(i)).collect();
    CartanSubspace {
        expected_rank: basis.len(),
        basis,
        ambient_cartan: ambient,
    }
}

/// Cartan subspace of the transpose involution: the full diagonal Cartan.
pub fn transpose_cartan_subspace(graded: &GradedAlgebra, n: usize) -> CartanSubspace {
    let basis: Vec<AlgElement> = (0..n - 1)
        .map(|i| graded.algebra.basis_element(i))
        .collect();
    CartanSubspace {
        expected_rank: n - 1,
        ambient_cartan: basis.clone(),
        basis,
    }
}

/// Cartan subspace of an inner case: the lines spanned by s_1..s_r, inside
/// the diagonal Cartan.
pub fn inner_cartan_subspace(
    graded: &GradedAlgebra,
    data: &InnerThetaData,
) -> Result<CartanSubspace, GradingError> {
    let alg = &graded.algebra;
    let basis: Vec<AlgElement> = data
        .s_blocks
        .iter()
        .map(|sb| alg.from_matrix(sb).map_err(GradingError::from))
        .collect::<Result<_, _>>()?;
    let ambient = (0..data.size - 1).map(|i| alg.basis_element(i)).collect();
    Ok(CartanSubspace {
        expected_rank: data.r,
        basis,
        ambient_cartan: ambient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::diagram::{
        make_chevalley_involution, make_diagram_theta, DiagramKind,
    };
    use crate::grading::inner::make_inner_theta;

    #[test]
    fn diagram_cartan_subspaces_validate() {
        for kind in [
            DiagramKind::So2n2 { n: 2 },
            DiagramKind::Sl2n { n: 2 },
            DiagramKind::TrialitySo8,
        ] {
            let case = make_diagram_theta(kind).unwrap();
            let c = diagram_cartan_subspace(&case);
            assert_eq!(c.rank(), kind.expected_rank());
            c.validate(&case.graded).unwrap();
        }
    }

    #[test]
    fn transpose_cartan_subspace_validates() {
        let graded = make_chevalley_involution(3).unwrap();
        let c = transpose_cartan_subspace(&graded, 3);
        assert_eq!(c.rank(), 2);
        c.validate(&graded).unwrap();
    }

    #[test]
    fn inner_cartan_subspace_validates() {
        let (graded, data) = make_inner_theta(&[1, 1, 1, 1], None).unwrap();
        let c = inner_cartan_subspace(&graded, &data).unwrap();
        assert_eq!(c.rank(), 2);
        c.validate(&graded).unwrap();
    }
}
