//! Two-particle Dirac bispinor entanglement under Lorentz boosts.
//!
//! Each Dirac particle is modelled as two qubits, intrinsic parity (P) and
//! spin (S), so a particle pair lives in a 16-dimensional space ordered as
//! `(P)A ⊗ (S)A ⊗ (P)B ⊗ (S)B`. The crate builds helicity bispinors and
//! their superpositions, applies the (non-unitary) bispinor boost, and
//! measures Meyer-Wallach global entanglement and spin-spin negativity.
//!
//! Module map:
//!
//! - [`tensor`]: dense complex vectors/matrices, Kronecker products, partial
//!   trace and transpose, Hermitian eigenvalues.
//! - [`kinematics`]: four-momenta, helicity spinors, bispinors, the boost
//!   matrices and chiral projectors.
//! - [`states`]: two-particle superpositions, the anti-symmetric scenarios,
//!   chiral projection and two-particle boosts.
//! - [`measures`]: linear entropy, Bloch vectors, global entanglement,
//!   negativity and the closed-form boosted Bloch vectors.
//! - [`sweep`]: `(ω, θ)` grid sweeps and CSV/JSON emission.
//! - [`verify`]: the acceptance checks behind `bispinor verify`.

// `!(x > 0.0)` deliberately rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod kinematics;
pub mod measures;
pub mod states;
pub mod sweep;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use kinematics::{BoostSpec, Chirality, FourMomentum, Helicity};
pub use states::{SuperpositionTerm, TwoParticleState};
pub use tensor::{ComplexMatrix, ComplexVector, Subsystem, SubsystemLayout};
