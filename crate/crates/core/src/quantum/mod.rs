//! Quantized phonon dynamics in a truncated number-state basis.
//!
//! Energies are in units of `ħω₃` and times are the dimensionless `τ = ω₃t`.
//! The interaction Hamiltonian reads
//!
//! ```text
//! H_I/ħω₃ = ε Σ_{m,n,p} D_mnp/μ_p^{1/4} · Z_p · [ 2/(μ_mμ_n)^{1/4} Z_m Z_n
//!                                              − 3/(γ_mγ_n)^{1/4} (X_m X_n + Y_m Y_n) ]
//! ```
//!
//! with `X = b + b†` etc. and the sum over ordered triples.

mod entropy;
mod evolve;
mod fock;
mod hamiltonian;
mod nonlinearity;
mod three_state;

pub use entropy::entanglement_entropy;
pub use evolve::{evolve, Propagator, QuantumState};
pub use fock::{ActiveMode, Direction, FockBasis};
pub use hamiltonian::{
    build_free_hamiltonian, build_full_interaction, build_rwa_interaction, Flavor,
    HamiltonianMatrix, RwaSelection, CLOSURE_TOLERANCE, DEFAULT_DETUNING_CUTOFF,
};
pub use nonlinearity::{
    effective_coefficient, epsilon, epsilon_from_width, NonlinearityScale, EPSILON_WARNING,
};
pub use three_state::{down_conversion_states, three_state_solution, DownConversionStates};
