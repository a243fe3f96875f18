//! Three-mode resonances between transverse and axial modes.
//!
//! A pair of transverse modes `(m, n)` and an axial mode `p` mix resonantly
//! when one of
//!
//! ```text
//! Δ⁺ = √γ_m + √γ_n − √μ_p = 0     (second kind: axial → two transverse)
//! Δ⁻ = √γ_m − √γ_n − √μ_p = 0     (first kind: transverse → axial + transverse)
//! ```
//!
//! holds. Both conditions square to the same closed form for `α`, so the
//! candidate is computed once and then classified by direct substitution.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coupling::{CouplingTensors, ZERO_COUPLING};
use crate::equilibrium::solve_equilibrium;
use crate::error::{Error, Result};
use crate::modes::{build_a, critical_anisotropy, diagonalize, transverse_eigenvalue, ModeBasis};

/// |Δ| below this at full precision counts as a resonance.
pub const RESONANCE_TOLERANCE: f64 = 1e-9;

/// Largest chain the catalog builds by default.
pub const DEFAULT_MAX_IONS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResonanceKind {
    /// `Δ⁻ = 0`
    First,
    /// `Δ⁺ = 0`
    Second,
}

impl fmt::Display for ResonanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResonanceKind::First => "first",
            ResonanceKind::Second => "second",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSign {
    Plus,
    Minus,
}

impl ResonanceKind {
    pub fn sign(self) -> DeltaSign {
        match self {
            ResonanceKind::First => DeltaSign::Minus,
            ResonanceKind::Second => DeltaSign::Plus,
        }
    }
}

/// `√γ_m ± √γ_n − √μ_p` at anisotropy `alpha`.
pub fn delta(mu_m: f64, mu_n: f64, mu_p: f64, alpha: f64, sign: DeltaSign) -> Result<f64> {
    let gm = transverse_eigenvalue(mu_m, alpha);
    let gn = transverse_eigenvalue(mu_n, alpha);
    for g in [gm, gn] {
        if !(g > 0.0) {
            return Err(Error::OutsideLinearRegime(g));
        }
    }
    let s = match sign {
        DeltaSign::Plus => 1.0,
        DeltaSign::Minus => -1.0,
    };
    Ok(gm.sqrt() + s * gn.sqrt() - mu_p.sqrt())
}

/// Anisotropy at which `Δ⁺` or `Δ⁻` can vanish, or `None` when the closed
/// form has a non-positive denominator.
pub fn candidate_alpha(mu_m: f64, mu_n: f64, mu_p: f64) -> Option<f64> {
    // 4μ_p² + μ_m² + μ_n² − 8μ_p + 4μ_pμ_m + 4μ_pμ_n − 2μ_mμ_n, grouped so
    // that swapping m and n is exact in floating point.
    let diff = mu_m - mu_n;
    let den = diff * diff + 4.0 * mu_p * (mu_p - 2.0 + (mu_m + mu_n));
    (den > 0.0).then(|| 16.0 * mu_p / den)
}

/// Which resonance, if any, the triple realises at `alpha`.
pub fn classify(mu_m: f64, mu_n: f64, mu_p: f64, alpha: f64) -> Result<Option<ResonanceKind>> {
    let plus = delta(mu_m, mu_n, mu_p, alpha, DeltaSign::Plus)?.abs() < RESONANCE_TOLERANCE;
    let minus = delta(mu_m, mu_n, mu_p, alpha, DeltaSign::Minus)?.abs() < RESONANCE_TOLERANCE;
    match (plus, minus) {
        (true, true) => Err(Error::AmbiguousResonance { m: 0, n: 0, p: 0 }),
        (true, false) => Ok(Some(ResonanceKind::Second)),
        (false, true) => Ok(Some(ResonanceKind::First)),
        (false, false) => Ok(None),
    }
}

/// Anisotropy below which no three-mode resonance exists.
pub fn alpha_min(mu: &[f64]) -> Result<f64> {
    let n = mu.len();
    if n < 2 {
        return Err(Error::SingleIon);
    }
    let top = mu[n - 1];
    if n.is_multiple_of(2) {
        Ok(4.0 / (3.0 * top - 2.0))
    } else {
        let next = mu[n - 2];
        Ok(16.0 * top / (top * (9.0 * top + 2.0 * next - 8.0) + next * next))
    }
}

/// One catalog row. Mode numbers are 1-based; `m`, `n` are transverse and `p`
/// is axial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResonanceEntry {
    pub n_ions: usize,
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub kind: ResonanceKind,
    pub alpha_res: f64,
    /// `D_mnp`
    pub coupling: f64,
    /// Matched Δ evaluated at `alpha_res`.
    pub delta_residual: f64,
}

impl ResonanceEntry {
    pub fn label(&self) -> String {
        format!("{{{},{},{}}}", self.m, self.n, self.p)
    }

    /// Whether this entry describes the process on `(m, n, p)`; for the
    /// second kind the two transverse modes may be given in either order.
    pub fn matches(&self, m: usize, n: usize, p: usize) -> bool {
        if self.p != p {
            return false;
        }
        match self.kind {
            ResonanceKind::First => self.m == m && self.n == n,
            ResonanceKind::Second => {
                (self.m == m && self.n == n) || (self.m == n && self.n == m)
            }
        }
    }

    /// Δ of this process at another anisotropy.
    pub fn detuning(&self, mu: &[f64], alpha: f64) -> Result<f64> {
        delta(mu[self.m - 1], mu[self.n - 1], mu[self.p - 1], alpha, self.kind.sign())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    pub n_ions: usize,
    pub alpha_crit: f64,
    pub alpha_min: f64,
    /// Sorted by `p`, then `m`, then `n`.
    pub entries: Vec<ResonanceEntry>,
}

impl Catalog {
    pub fn find(&self, m: usize, n: usize, p: usize) -> Option<&ResonanceEntry> {
        self.entries.iter().find(|e| e.matches(m, n, p))
    }

    pub fn of_kind(&self, kind: ResonanceKind) -> impl Iterator<Item = &ResonanceEntry> {
        self.entries.iter().filter(move |e| e.kind == kind)
    }
}

/// Resonance catalog for an `n_ions` chain (2 ≤ n_ions ≤ [`DEFAULT_MAX_IONS`]).
pub fn build_catalog(n_ions: usize) -> Result<Catalog> {
    build_catalog_capped(n_ions, DEFAULT_MAX_IONS)
}

pub fn build_catalog_capped(n_ions: usize, max_ions: usize) -> Result<Catalog> {
    if n_ions < 2 || n_ions > max_ions {
        return Err(Error::InvalidParameter(format!(
            "catalog needs 2 <= N <= {max_ions}, got {n_ions}"
        )));
    }
    let chain = solve_equilibrium(n_ions)?;
    // Any α below α_crit works here: the catalog only reads μ and D.
    let a = build_a(&chain.u);
    let probe = diagonalize(&a, 1e-3, 1.0)?;
    let tensors = CouplingTensors::new(&chain, &probe);
    catalog_from_parts(&probe, &tensors)
}

/// Enumerates every `(m, n, p)` with all indices ≥ 2.
///
/// Second-kind rows are keyed with `m ≥ n` (α is symmetric in `m`, `n`);
/// first-kind rows carry the ordering for which `Δ⁻` vanishes, which always
/// has `m < n`.
pub fn catalog_from_parts(basis: &ModeBasis, tensors: &CouplingTensors) -> Result<Catalog> {
    let n_ions = basis.n_modes();
    let mu = &basis.mu;
    let alpha_crit = critical_anisotropy(mu)?;
    let alpha_min = alpha_min(mu)?;
    let mut entries = Vec::new();
    for p in 1..n_ions {
        for m in 1..n_ions {
            for n in 1..n_ions {
                let coupling = tensors.d.get(m, n, p);
                if coupling.abs() <= ZERO_COUPLING {
                    continue;
                }
                let Some(alpha) = candidate_alpha(mu[m], mu[n], mu[p]) else {
                    continue;
                };
                if !(alpha > 0.0 && alpha < alpha_crit) {
                    continue;
                }
                let kind = match classify(mu[m], mu[n], mu[p], alpha) {
                    Ok(k) => k,
                    Err(Error::AmbiguousResonance { .. }) => {
                        return Err(Error::AmbiguousResonance { m: m + 1, n: n + 1, p: p + 1 })
                    }
                    Err(e) => return Err(e),
                };
                let Some(kind) = kind else { continue };
                if kind == ResonanceKind::Second && m < n {
                    continue;
                }
                let delta_residual = delta(mu[m], mu[n], mu[p], alpha, kind.sign())?;
                entries.push(ResonanceEntry {
                    n_ions,
                    m: m + 1,
                    n: n + 1,
                    p: p + 1,
                    kind,
                    alpha_res: alpha,
                    coupling,
                    delta_residual,
                });
            }
        }
    }
    Ok(Catalog { n_ions, alpha_crit, alpha_min, entries })
}
