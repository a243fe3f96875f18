//! Flat TOML run configurations.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use ionchain::IonSpecies;

use crate::UsageError;

fn default_species() -> String {
    "Ca40".into()
}

fn default_freq() -> f64 {
    2.0
}

/// Registry species, or a custom singly charged ion when `mass_u` is set.
pub fn resolve_species(species: &str, mass_u: Option<f64>) -> Result<IonSpecies> {
    Ok(match mass_u {
        Some(m) => IonSpecies::singly_charged(species, m)?,
        None => IonSpecies::lookup(species)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SimMode {
    Rwa,
    Full,
    Both,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Initial {
    /// `psi`, `phi` or `chi`.
    Named(String),
    /// Occupations keyed by mode label, e.g. `{ z5 = 1 }`.
    Occupations(BTreeMap<String, usize>),
}

fn default_resonance() -> [usize; 3] {
    [6, 5, 5]
}

fn default_active() -> Vec<String> {
    ["z5", "x5", "x6", "y5", "y6"].map(String::from).to_vec()
}

fn default_cutoff() -> usize {
    2
}

fn default_initial() -> Initial {
    Initial::Named("psi".into())
}

fn default_duration() -> f64 {
    4.0
}

fn default_samples() -> usize {
    200
}

fn default_sim_mode() -> SimMode {
    SimMode::Rwa
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateConfig {
    pub n: usize,
    /// Defaults to the exact resonant anisotropy of `resonance`.
    pub alpha: Option<f64>,
    #[serde(default = "default_species")]
    pub species: String,
    pub mass_u: Option<f64>,
    /// Axial trap frequency ω₃/2π in MHz.
    #[serde(default = "default_freq")]
    pub freq_mhz: f64,
    /// Overrides the value computed from the ion and trap.
    pub epsilon: Option<f64>,
    #[serde(default = "default_resonance")]
    pub resonance: [usize; 3],
    #[serde(default = "default_active")]
    pub active_modes: Vec<String>,
    #[serde(default = "default_cutoff")]
    pub cutoff: usize,
    /// Per-mode cutoffs; overrides `cutoff`.
    pub cutoffs: Option<Vec<usize>>,
    #[serde(default = "default_initial")]
    pub initial: Initial,
    /// In units of 2π/(√2Γ), the period of |ψ|².
    #[serde(default = "default_duration")]
    pub duration: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_sim_mode")]
    pub mode: SimMode,
    /// Subsystem for the entropy column; defaults to the active x modes.
    pub partition: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Excitation {
    pub mode: String,
    #[serde(default)]
    pub displacement: f64,
    #[serde(default)]
    pub velocity: f64,
}

fn default_dt() -> f64 {
    1e-3
}

fn default_stride() -> usize {
    50
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassicalConfig {
    pub n: usize,
    pub alpha: f64,
    #[serde(default = "default_dt")]
    pub dt: f64,
    /// In units of 1/ω₃.
    pub duration: f64,
    #[serde(default = "default_stride")]
    pub stride: usize,
    #[serde(default)]
    pub excite: Vec<Excitation>,
    /// Modes given the deterministic transverse seed amplitude.
    #[serde(default)]
    pub seed: Vec<String>,
    /// Modes whose summed energy gain is compared across `compare_alpha`.
    #[serde(default)]
    pub group: Vec<String>,
    #[serde(default)]
    pub compare_alpha: Vec<f64>,
}

pub fn load<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| UsageError(format!("invalid config {}: {e}", path.display())).into())
}
