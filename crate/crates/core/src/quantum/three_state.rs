//! Closed-form down-conversion dynamics of one axial phonon into a pair of
//! transverse phonons, shared between the `x` and `y` directions.
//!
//! With `⟨Φ|H|Ψ⟩ = ⟨χ|H|Ψ⟩ = −ħΓ` the amplitudes of `|Ψ⟩ = |1_p^z⟩`,
//! `|Φ⟩ = |1_mˣ 1_nˣ⟩` and `|χ⟩ = |1_mʸ 1_nʸ⟩` evolve as
//!
//! ```text
//! ψ(t) = ψ₀ cos(√2Γt) + i(φ₀ + χ₀)/√2 · sin(√2Γt)
//! φ(t) = iψ₀/√2 · sin(√2Γt) + φ₀ cos²(Γt/√2) − χ₀ sin²(Γt/√2)
//! χ(t) = iψ₀/√2 · sin(√2Γt) − φ₀ sin²(Γt/√2) + χ₀ cos²(Γt/√2)
//! ```

use std::f64::consts::SQRT_2;

use num_complex::Complex64 as C64;

use super::fock::{ActiveMode, FockBasis};
use crate::error::{Error, Result};
use crate::resonance::{ResonanceEntry, ResonanceKind};

/// Amplitudes `(ψ, φ, χ)` at time `t`; `gamma` and `t` may be in any
/// reciprocal pair of units.
pub fn three_state_solution(psi0: C64, phi0: C64, chi0: C64, gamma: f64, t: f64) -> (C64, C64, C64) {
    let w = SQRT_2 * gamma * t;
    let (s, c) = w.sin_cos();
    let h = gamma * t / SQRT_2;
    let cos2 = h.cos().powi(2);
    let sin2 = h.sin().powi(2);
    let i = C64::i();
    let psi = psi0 * c + i * (phi0 + chi0) / SQRT_2 * s;
    let feed = i * psi0 / SQRT_2 * s;
    let phi = feed + phi0 * cos2 - chi0 * sin2;
    let chi = feed - phi0 * sin2 + chi0 * cos2;
    (psi, phi, chi)
}

/// Basis indices of `|Ψ⟩`, `|Φ⟩`, `|χ⟩` for a second-kind resonance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DownConversionStates {
    pub psi: usize,
    pub phi: usize,
    pub chi: usize,
}

impl DownConversionStates {
    pub fn as_array(&self) -> [usize; 3] {
        [self.psi, self.phi, self.chi]
    }
}

pub fn down_conversion_states(basis: &FockBasis, entry: &ResonanceEntry) -> Result<DownConversionStates> {
    if entry.kind != ResonanceKind::Second {
        return Err(Error::InvalidParameter(format!(
            "{} is not a down-conversion resonance",
            entry.label()
        )));
    }
    let pair = |x: fn(usize) -> ActiveMode| [(x(entry.m), 1), (x(entry.n), 1)];
    Ok(DownConversionStates {
        psi: basis.index_of(&[(ActiveMode::z(entry.p), 1)])?,
        phi: basis.index_of(&pair(ActiveMode::x))?,
        chi: basis.index_of(&pair(ActiveMode::y))?,
    })
}
