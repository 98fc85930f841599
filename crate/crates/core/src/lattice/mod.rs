//! The lattice conformal vertex algebra `V_{1,1}` of `II_{1,1}`.

mod fock;
mod vector;
mod vertex;
mod virasoro;

use thiserror::Error;

pub use fock::{heisenberg_apply, schur_apply, weight_of, Axis, FockBasis, FockState, Mode};
pub(crate) use fock::rational_mode_apply;
pub use vector::{
    cocycle, hat_multiply, pairing, weyl_reflect, HatLatticeElement, LatticeVector, Sign, ALPHA, BETA, T1,
    T2,
};
pub use vertex::{lowest_power, vertex_coeff, vertex_iota_coeff};
pub use virasoro::{conformal_vector, is_primary, virasoro_apply, CENTRAL_CHARGE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vertex operator not supported for state {0}")]
    UnsupportedState(String),
}
