//! Intrinsic third-order phonon coupling in linear chains of trapped ions.
//!
//! The pipeline runs bottom-up:
//!
//! 1. [`equilibrium`] solves for the dimensionless ion positions `u_n`.
//! 2. [`modes`] builds the axial/transverse coupling matrices and their shared
//!    eigenbasis.
//! 3. [`coupling`] forms the cubic Coulomb tensors in the ion basis (`C`) and
//!    the mode basis (`D`).
//! 4. [`resonance`] finds the trap anisotropies at which three modes mix
//!    resonantly.
//! 5. [`quantum`] builds truncated Fock-space Hamiltonians and propagates the
//!    phonon down-conversion dynamics.
//! 6. [`classical`] integrates the exact Coulomb equations of motion as an
//!    independent check on frequencies and resonant energy exchange.
//!
//! Lengths are in units of the scale `ℓ`, times in units of `1/ω₃` and
//! energies in units of `ħω₃` (quantum) or `Mω₃²ℓ²` (classical) unless a
//! function says otherwise.

pub mod classical;
pub mod constants;
pub mod coupling;
pub mod equilibrium;
pub mod error;
pub mod modes;
pub mod quantum;
pub mod resonance;

pub use constants::IonSpecies;
pub use coupling::{CouplingTensors, IdentityReport, Tensor3};
pub use equilibrium::{EquilibriumChain, TrapConfig};
pub use error::{Error, Result};
pub use modes::ModeBasis;
pub use resonance::{Catalog, ResonanceEntry, ResonanceKind};
