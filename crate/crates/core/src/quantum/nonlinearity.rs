//! Strength of the cubic nonlinearity for a given ion and trap.

use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use crate::constants::{fine_structure, IonSpecies, HBAR, SPEED_OF_LIGHT};
use crate::equilibrium::length_scale;
use crate::error::{Error, Result};
use crate::modes::ModeBasis;
use crate::resonance::ResonanceEntry;

/// Above this, the perturbative picture is doubtful.
pub const EPSILON_WARNING: f64 = 0.1;

/// ε = (1/4√2)·[ħω₃/(α_fsc²Mc²)]^{1/6}.
pub fn epsilon(species: &IonSpecies, omega3: f64) -> Result<f64> {
    check_omega(omega3)?;
    let a = fine_structure();
    let ratio = HBAR * omega3 / (a * a * species.mass * SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    Ok(ratio.powf(1.0 / 6.0) / (4.0 * SQRT_2))
}

/// ε = σ/4ℓ with the ground-state width σ = √(ħ/2Mω₃).
pub fn epsilon_from_width(species: &IonSpecies, omega3: f64) -> Result<f64> {
    check_omega(omega3)?;
    let sigma = (HBAR / (2.0 * species.mass * omega3)).sqrt();
    Ok(sigma / (4.0 * length_scale(species, omega3)))
}

fn check_omega(omega3: f64) -> Result<()> {
    if omega3 > 0.0 && omega3.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("omega3 must be positive, got {omega3}")))
    }
}

/// Resonant matrix-element coefficient of a three-mode process in units of
/// `εħω₃`: `k·3·D_mnp/⁴√(μ_p γ_m γ_n)`, where `k = 2` when the two transverse
/// modes differ (both orderings of the triple sum contribute) and 1 otherwise.
pub fn effective_coefficient(entry: &ResonanceEntry, modes: &ModeBasis) -> f64 {
    let (m, n, p) = (entry.m - 1, entry.n - 1, entry.p - 1);
    let multiplicity = if m == n { 1.0 } else { 2.0 };
    multiplicity * 3.0 * entry.coupling / (modes.mu[p] * modes.gamma[m] * modes.gamma[n]).powf(0.25)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonlinearityScale {
    pub epsilon: f64,
    /// Resonant coupling rate Γ = εω₃·(effective coefficient) in rad/s.
    pub gamma: Option<f64>,
}

impl NonlinearityScale {
    pub fn new(species: &IonSpecies, omega3: f64) -> Result<Self> {
        Ok(Self { epsilon: epsilon(species, omega3)?, gamma: None })
    }

    /// Attaches Γ for a target resonance; `modes.omega3` sets the time unit.
    pub fn with_resonance(mut self, entry: &ResonanceEntry, modes: &ModeBasis) -> Self {
        self.gamma = Some(self.epsilon * modes.omega3 * effective_coefficient(entry, modes));
        self
    }

    pub fn is_suspicious(&self) -> bool {
        self.epsilon > EPSILON_WARNING
    }
}
