//! Exact arithmetic for the Monster Lie algebra and monstrous moonshine.
//!
//! * [`qseries`]: truncated q-series, `J`, the Euler product and the
//!   primary-dimension generating series.
//! * [`lattice`]: the lattice vertex algebra of the rank-2 Lorentzian lattice
//!   `II_{1,1}`, with Heisenberg, lattice and Virasoro operators.
//! * [`gl2`]: the bracket engine for the slice of the Monster Lie algebra
//!   spanned by `e_{j,u}`, `f_{j,v}` and the Cartan subalgebra.
//! * [`data`]: conjugacy-class data files.
//! * [`replication`]: McKay–Thompson coefficient extension, trivial
//!   multiplicities and the non-triviality report.

pub mod data;
pub mod gl2;
pub mod lattice;
pub mod qseries;
pub mod replication;
