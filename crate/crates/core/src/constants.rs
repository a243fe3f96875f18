//! Physical constants (CODATA 2018, SI units) and the ion species registry.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label written into run manifests.
pub const CONSTANTS_VERSION: &str = "CODATA 2018";

pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
pub const HBAR: f64 = 1.054_571_817e-34;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// Fine-structure constant derived from the table entries above, so that
/// formulas written in terms of it stay algebraically consistent with ones
/// written in terms of `e`, `ε₀`, `ħ` and `c`.
pub fn fine_structure() -> f64 {
    ELEMENTARY_CHARGE * ELEMENTARY_CHARGE
        / (4.0 * PI * VACUUM_PERMITTIVITY * HBAR * SPEED_OF_LIGHT)
}

/// Converts an ordinary frequency in MHz to an angular frequency in rad/s.
pub fn angular_from_mhz(mhz: f64) -> f64 {
    2.0 * PI * mhz * 1e6
}

/// Built-in species: (registry name, mass in u).
pub const BUILTIN_SPECIES: [(&str, f64); 4] = [
    ("Be9", 9.012),
    ("Ca40", 39.963),
    ("Sr88", 87.906),
    ("Cd112", 111.903),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IonSpecies {
    pub name: String,
    /// kg
    pub mass: f64,
    /// C
    pub charge: f64,
}

impl IonSpecies {
    pub fn new(name: impl Into<String>, mass: f64, charge: f64) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidParameter(format!("mass must be positive, got {mass}")));
        }
        if charge == 0.0 || !charge.is_finite() {
            return Err(Error::InvalidParameter("charge must be nonzero".into()));
        }
        Ok(Self { name: name.into(), mass, charge })
    }

    /// Singly charged ion with the given mass in atomic mass units.
    pub fn singly_charged(name: impl Into<String>, mass_u: f64) -> Result<Self> {
        Self::new(name, mass_u * ATOMIC_MASS_UNIT, ELEMENTARY_CHARGE)
    }

    /// Looks up a built-in species by name, ignoring case and a trailing `+`.
    /// Accepts both `Ca40` and `40Ca` spellings.
    pub fn lookup(name: &str) -> Result<Self> {
        let wanted = normalize(name);
        BUILTIN_SPECIES
            .iter()
            .find(|(n, _)| normalize(n) == wanted)
            .map(|&(n, m)| Self::singly_charged(n, m))
            .unwrap_or_else(|| {
                Err(Error::InvalidParameter(format!(
                    "unknown species '{name}' (known: {})",
                    BUILTIN_SPECIES.map(|(n, _)| n).join(", ")
                )))
            })
    }

    pub fn mass_u(&self) -> f64 {
        self.mass / ATOMIC_MASS_UNIT
    }
}

fn normalize(name: &str) -> String {
    let s = name.trim().trim_end_matches('+').to_ascii_lowercase();
    let digits: String = s.chars().filter(|c| c.is_ascii_digit()).collect();
    let letters: String = s.chars().filter(|c| c.is_ascii_alphabetic()).collect();
    format!("{letters}{digits}")
}
