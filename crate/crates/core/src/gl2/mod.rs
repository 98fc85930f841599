//! `gl2` subalgebras of the Monster Lie algebra built from primary vectors.
//!
//! Elements live in the span of `e_{j,u} = u (x) iota(c_j)`,
//! `f_{j,v} = v (x) iota(c_j^{-1})` and the Cartan vectors
//! `1 (x) h(-1) iota(1)`, all taken modulo the radical. Brackets are zero
//! modes of the tensor product `V^natural (x) V_{1,1}`; the lattice factor
//! is computed exactly and the Moonshine factor only through weight
//! counting and the invariant form.

mod bracket;
mod element;
mod natural;
mod relations;

use thiserror::Error;

use crate::lattice::LatticeError;

pub use bracket::{bracket, Gl2Engine};
pub use element::{CartanVector, MElement, RootKey};
pub use natural::{
    contraction, natural_mode, natural_pairing, normalize_partner, symbol_pairing, FormalNaturalVector,
    NaturalSymbol, VACUUM_LABEL,
};
pub use relations::{
    cartan_entry, make_gl2, primality_of_representatives, simple_root, verify_relations, verify_relations_with,
    Gl2Generators, Gl2Report, RelationCheck, RelationGroup,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gl2Error {
    #[error("outside supported span: {0}")]
    OutsideSpan(String),
    #[error("{0} is not primary")]
    NotPrimary(String),
    #[error("{label} has weight {found}, expected {expected}")]
    WeightMismatch { label: String, expected: i64, found: u32 },
    #[error("pairing mismatch: expected {expected}, found {found}")]
    PairingMismatch { expected: String, found: String },
    #[error("pairing ({u}, {v}) is not known")]
    MissingPairing { u: String, v: String },
    #[error("index {0} is not in {{-1, 1, 2, ...}}")]
    InvalidIndex(i64),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("(u, u) = {0} is not positive")]
    NonPositiveNorm(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
