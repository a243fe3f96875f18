//! Equilibrium positions of a linear ion chain.
//!
//! In units of the length scale `ℓ = (Q²/4πε₀Mω₃²)^{1/3}` the axial force
//! balance on ion `m` reads
//!
//! ```text
//! u_m − Σ_{n≠m} sgn(u_m − u_n)/(u_m − u_n)² = 0
//! ```
//!
//! and its Jacobian is exactly the axial coupling matrix `A` of
//! [`crate::modes::build_a`], so a Newton iteration needs nothing else.

use std::f64::consts::PI;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::constants::{IonSpecies, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};
use crate::modes::build_a;

/// Newton stops once the residual ∞-norm drops below this.
pub const NEWTON_TOLERANCE: f64 = 1e-12;
pub const NEWTON_MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrapConfig {
    pub n_ions: usize,
    pub species: IonSpecies,
    /// Axial angular frequency ω₃ in rad/s.
    pub omega3: f64,
    /// Anisotropy α = (ω₃/ω₁)².
    pub alpha: f64,
}

impl TrapConfig {
    pub fn new(n_ions: usize, species: IonSpecies, omega3: f64, alpha: f64) -> Result<Self> {
        if n_ions == 0 {
            return Err(Error::InvalidParameter("need at least one ion".into()));
        }
        if !(omega3 > 0.0 && omega3.is_finite()) {
            return Err(Error::InvalidParameter(format!("omega3 must be positive, got {omega3}")));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!("alpha must be positive, got {alpha}")));
        }
        Ok(Self { n_ions, species, omega3, alpha })
    }

    /// Transverse trap frequency ω₁ = ω₂ = ω₃/√α.
    pub fn transverse_frequency(&self) -> f64 {
        self.omega3 / self.alpha.sqrt()
    }

    pub fn length_scale(&self) -> f64 {
        length_scale(&self.species, self.omega3)
    }

    /// Equilibrium chain carrying the physical length scale of this trap.
    pub fn equilibrium(&self) -> Result<EquilibriumChain> {
        let mut chain = solve_equilibrium(self.n_ions)?;
        chain.ell = Some(self.length_scale());
        Ok(chain)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumChain {
    /// Dimensionless positions, strictly increasing.
    pub u: Vec<f64>,
    /// Length scale ℓ in meters, when a physical trap is attached.
    pub ell: Option<f64>,
}

impl EquilibriumChain {
    pub fn n_ions(&self) -> usize {
        self.u.len()
    }

    /// 𝒩 = √(Σ u_n²), the norm of the stretch-mode direction.
    pub fn norm(&self) -> f64 {
        self.u.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Physical positions in meters, if ℓ is known.
    pub fn positions_m(&self) -> Option<Vec<f64>> {
        self.ell.map(|l| self.u.iter().map(|x| x * l).collect())
    }
}

/// ℓ = (Q²/(4πε₀ M ω₃²))^{1/3} in meters.
pub fn length_scale(species: &IonSpecies, omega3: f64) -> f64 {
    let q2 = species.charge * species.charge;
    (q2 / (4.0 * PI * VACUUM_PERMITTIVITY * species.mass * omega3 * omega3)).cbrt()
}

/// Axial force imbalance on every ion at dimensionless positions `u`.
pub fn equilibrium_residual(u: &[f64]) -> Result<Vec<f64>> {
    let n = u.len();
    let mut r = Vec::with_capacity(n);
    for m in 0..n {
        let mut coulomb = 0.0;
        for k in 0..n {
            if k == m {
                continue;
            }
            let d = u[m] - u[k];
            if d == 0.0 {
                return Err(Error::DegenerateConfiguration(m.min(k) + 1, m.max(k) + 1));
            }
            coulomb += d.signum() / (d * d);
        }
        r.push(u[m] - coulomb);
    }
    Ok(r)
}

/// Uniform seed `u_n = s·(n − (N+1)/2)` with `s` chosen so the outermost ion
/// is in force balance: `s³ = 2·Σ_{k<N} k⁻² / (N−1)`.
fn uniform_seed(n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.0];
    }
    let h2: f64 = (1..n).map(|k| 1.0 / (k * k) as f64).sum();
    let s = (2.0 * h2 / (n - 1) as f64).cbrt();
    let centre = (n as f64 + 1.0) / 2.0;
    (1..=n).map(|k| s * (k as f64 - centre)).collect()
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

fn strictly_increasing(u: &[f64]) -> bool {
    u.windows(2).all(|w| w[0] < w[1])
}

/// Damped Newton solve for the dimensionless equilibrium of `n_ions` ions.
pub fn solve_equilibrium(n_ions: usize) -> Result<EquilibriumChain> {
    if n_ions == 0 {
        return Err(Error::InvalidParameter("need at least one ion".into()));
    }
    let mut u = uniform_seed(n_ions);
    let mut r = equilibrium_residual(&u)?;
    let mut norm = inf_norm(&r);
    let mut iterations = 0;

    while norm >= NEWTON_TOLERANCE {
        if iterations == NEWTON_MAX_ITERATIONS {
            return Err(Error::NoConvergence { iterations, residual: norm });
        }
        iterations += 1;

        let jac = build_a(&u);
        let rhs = -DVector::from_column_slice(&r);
        let step = jac
            .clone()
            .cholesky()
            .map(|c| c.solve(&rhs))
            .or_else(|| jac.lu().solve(&rhs))
            .ok_or(Error::NoConvergence { iterations, residual: norm })?;

        // Backtrack until the step keeps the ordering and reduces the residual.
        let mut lambda = 1.0;
        loop {
            let trial: Vec<f64> = u.iter().zip(step.iter()).map(|(a, d)| a + lambda * d).collect();
            if strictly_increasing(&trial) {
                let tr = equilibrium_residual(&trial)?;
                let tn = inf_norm(&tr);
                if tn < norm || lambda < 1e-6 {
                    u = trial;
                    r = tr;
                    norm = tn;
                    break;
                }
            }
            lambda *= 0.5;
            if lambda < 1e-12 {
                return Err(Error::NoConvergence { iterations, residual: norm });
            }
        }
    }

    // Enforce u_n = −u_{N+1−n} exactly.
    let reflected: Vec<f64> = u.iter().rev().map(|x| -x).collect();
    let u: Vec<f64> = u.iter().zip(&reflected).map(|(a, b)| 0.5 * (a + b)).collect();
    Ok(EquilibriumChain { u, ell: None })
}
