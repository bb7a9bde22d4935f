//! Exact construction and certification of minimal informationally complete
//! POVMs built from finite-index subgroups of the modular group.
//!
//! The pipeline runs entirely in exact arithmetic:
//!
//! - [`modgroup`]: subgroups of `PSL(2, Z)` as transitive permutation pairs
//!   `(σ_e, σ_v)` with `σ_e² = σ_v³ = 1`, their signatures and congruence status.
//! - [`cyclotomic`]: elements of `Q(ζ_n)` with rational coefficients.
//! - [`linalg`]: dense matrices over cyclotomic fields, exact rank and kernels.
//! - [`pauli`]: clock/shift displacement operators on tensor factorizations.
//! - [`povm`]: Pauli orbits of fiducials and their IC / SIC certificates.
//! - [`search`]: fiducial candidates from eigenspaces of permutation gates.
//! - [`geometry`]: incidence structures carried by projector products.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod cyclotomic;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod modular;
pub mod modgroup;
pub mod pauli;
pub mod perm;
pub mod povm;
pub mod search;

pub use cyclotomic::{CycloField, CycloNum};
pub use error::{Error, Result};
pub use linalg::{CycloMatrix, CycloVector};
pub use modgroup::{PermPair, Signature};
pub use pauli::{DimFactorization, PauliOp};
pub use perm::Perm;
pub use povm::{Fiducial, ICCertificate};
