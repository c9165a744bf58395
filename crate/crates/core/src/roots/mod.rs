//! Root systems of types A, D and E6 with the normalized invariant form
//! (all roots of squared length 2), actions of finite-order automorphisms on
//! roots, theta-orbits and their weighted averages.

mod labels;
mod system;
mod theta;

pub use labels::EpsilonLabeling;
pub use system::{RootFamily, RootSystem};
pub use theta::{alpha_component, weight_eigenspace, RootOrbit, ThetaOnRoots};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unsupported root system type {family:?} of rank {rank}")]
    UnsupportedType { family: String, rank: usize },
    #[error("map does not permute the root system")]
    NotARootPermutation,
    #[error("action does not preserve the bilinear form")]
    FormNotPreserved,
}
