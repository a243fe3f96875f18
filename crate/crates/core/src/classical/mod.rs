//! Exact classical Coulomb dynamics, used as an independent check.
//!
//! Lengths are in units of `ℓ`, time in `1/ω₃` and energy in `Mω₃²ℓ²`.
//! Coordinates are ordered `[x, y, z]` with `z` along the chain. The
//! potential is
//!
//! ```text
//! V = ½ Σ_n (z_n² + (x_n² + y_n²)/α) + Σ_{n<m} 1/|r_n − r_m|
//! ```

mod spectrum;

pub use spectrum::{spectrum, SpectralPeak, MIN_SAMPLES};

use serde::{Deserialize, Serialize};

use crate::equilibrium::EquilibriumChain;
use crate::error::{Error, Result};
use crate::modes::ModeBasis;
use crate::quantum::{ActiveMode, Direction};

/// Coordinates beyond this magnitude abort the integration.
pub const INSTABILITY_THRESHOLD: f64 = 1e3;

/// Deterministic transverse seed amplitude for down-conversion studies.
pub const TRANSVERSE_SEED: f64 = 1e-6;

pub type Vec3 = [f64; 3];

fn axis(d: Direction) -> usize {
    match d {
        Direction::X => 0,
        Direction::Y => 1,
        Direction::Z => 2,
    }
}

fn check_separation(positions: &[Vec3]) -> Result<()> {
    for m in 0..positions.len() {
        for n in m + 1..positions.len() {
            if positions[m] == positions[n] {
                return Err(Error::DegenerateConfiguration(m + 1, n + 1));
            }
        }
    }
    Ok(())
}

/// Dimensionless accelerations from the exact trap-plus-Coulomb force.
pub fn accelerations(positions: &[Vec3], alpha: f64) -> Result<Vec<Vec3>> {
    check_separation(positions)?;
    let mut acc = vec![[0.0; 3]; positions.len()];
    accelerations_into(positions, alpha, &mut acc);
    Ok(acc)
}

fn accelerations_into(r: &[Vec3], alpha: f64, acc: &mut [Vec3]) {
    let k = 1.0 / alpha;
    for (a, p) in acc.iter_mut().zip(r) {
        *a = [-k * p[0], -k * p[1], -p[2]];
    }
    for m in 0..r.len() {
        for n in m + 1..r.len() {
            let d = [r[m][0] - r[n][0], r[m][1] - r[n][1], r[m][2] - r[n][2]];
            let r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
            let inv3 = 1.0 / (r2 * r2.sqrt());
            for i in 0..3 {
                acc[m][i] += d[i] * inv3;
                acc[n][i] -= d[i] * inv3;
            }
        }
    }
}

pub fn potential_energy(r: &[Vec3], alpha: f64) -> f64 {
    let mut v = 0.0;
    for p in r {
        v += 0.5 * (p[2] * p[2] + (p[0] * p[0] + p[1] * p[1]) / alpha);
    }
    for m in 0..r.len() {
        for n in m + 1..r.len() {
            let d = [r[m][0] - r[n][0], r[m][1] - r[n][1], r[m][2] - r[n][2]];
            v += 1.0 / (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        }
    }
    v
}

fn kinetic_energy(v: &[Vec3]) -> f64 {
    0.5 * v.iter().flatten().map(|x| x * x).sum::<f64>()
}

/// Initial displacement and velocity of one normal-mode coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeExcitation {
    pub mode: ActiveMode,
    pub displacement: f64,
    pub velocity: f64,
}

impl ModeExcitation {
    pub fn displaced(mode: ActiveMode, displacement: f64) -> Self {
        Self { mode, displacement, velocity: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrationSettings {
    pub dt: f64,
    pub duration: f64,
    /// Record every `stride`-th step.
    pub stride: usize,
}

impl IntegrationSettings {
    pub fn new(dt: f64, duration: f64, stride: usize) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidParameter(format!("dt must be positive, got {dt}")));
        }
        if !(duration > 0.0 && duration.is_finite()) {
            return Err(Error::InvalidParameter(format!("duration must be positive, got {duration}")));
        }
        if stride == 0 {
            return Err(Error::InvalidParameter("stride must be at least 1".into()));
        }
        Ok(Self { dt, duration, stride })
    }

    pub fn steps(&self) -> usize {
        (self.duration / self.dt).round() as usize
    }

    /// Spacing of recorded samples.
    pub fn sample_spacing(&self) -> f64 {
        self.dt * self.stride as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub alpha: f64,
    /// Equilibrium positions the displacements are measured from.
    pub u: Vec<f64>,
    pub times: Vec<f64>,
    pub positions: Vec<Vec<Vec3>>,
    pub velocities: Vec<Vec<Vec3>>,
    pub total_energy: Vec<f64>,
}

impl Trajectory {
    pub fn n_ions(&self) -> usize {
        self.u.len()
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// max |E(t) − E(0)| / |E(0)|
    pub fn relative_energy_drift(&self) -> f64 {
        let e0 = self.total_energy[0];
        self.total_energy.iter().fold(0.0f64, |a, e| a.max((e - e0).abs())) / e0.abs()
    }
}

/// Velocity-Verlet integration from the equilibrium of `chain`, displaced
/// along the listed normal modes of `basis` (whose anisotropy is used).
pub fn integrate(
    chain: &EquilibriumChain,
    basis: &ModeBasis,
    excitations: &[ModeExcitation],
    settings: &IntegrationSettings,
) -> Result<Trajectory> {
    let n = chain.n_ions();
    if basis.n_modes() != n {
        return Err(Error::DimensionMismatch(format!("{n} ions but {} modes", basis.n_modes())));
    }
    let alpha = basis.alpha;
    let mut r: Vec<Vec3> = chain.u.iter().map(|&z| [0.0, 0.0, z]).collect();
    let mut v = vec![[0.0; 3]; n];
    for e in excitations {
        if e.mode.mode == 0 || e.mode.mode > n {
            return Err(Error::InvalidParameter(format!("mode {} outside the chain", e.mode)));
        }
        let i = axis(e.mode.direction);
        for k in 0..n {
            let b = basis.component(k, e.mode.mode - 1);
            r[k][i] += b * e.displacement;
            v[k][i] += b * e.velocity;
        }
    }
    check_separation(&r)?;

    let steps = settings.steps();
    let mut out = Trajectory {
        alpha,
        u: chain.u.clone(),
        times: Vec::with_capacity(steps / settings.stride + 1),
        positions: Vec::new(),
        velocities: Vec::new(),
        total_energy: Vec::new(),
    };
    let record = |out: &mut Trajectory, t: f64, r: &[Vec3], v: &[Vec3]| {
        out.times.push(t);
        out.positions.push(r.to_vec());
        out.velocities.push(v.to_vec());
        out.total_energy.push(kinetic_energy(v) + potential_energy(r, alpha));
    };
    record(&mut out, 0.0, &r, &v);

    let dt = settings.dt;
    let mut a = vec![[0.0; 3]; n];
    accelerations_into(&r, alpha, &mut a);
    for step in 1..=steps {
        for k in 0..n {
            for i in 0..3 {
                v[k][i] += 0.5 * dt * a[k][i];
                r[k][i] += dt * v[k][i];
            }
        }
        accelerations_into(&r, alpha, &mut a);
        for k in 0..n {
            for i in 0..3 {
                v[k][i] += 0.5 * dt * a[k][i];
            }
        }
        let t = step as f64 * dt;
        let worst = r.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
        if !(worst <= INSTABILITY_THRESHOLD) {
            return Err(Error::Unstable { time: t, magnitude: worst });
        }
        if step % settings.stride == 0 {
            record(&mut out, t, &r, &v);
        }
    }
    Ok(out)
}

/// Coordinate, velocity and harmonic energy of one normal mode over time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeSeries {
    pub mode: ActiveMode,
    pub coordinate: Vec<f64>,
    pub velocity: Vec<f64>,
    /// ½(Ẋ² + γX²) transverse, ½(Ż² + μZ²) axial.
    pub energy: Vec<f64>,
}

/// Projects the displacements onto the normal modes of `basis`; one series
/// per mode, ordered x₁…x_N, y₁…y_N, z₁…z_N.
pub fn mode_projection(traj: &Trajectory, basis: &ModeBasis) -> Result<Vec<ModeSeries>> {
    let n = traj.n_ions();
    if basis.n_modes() != n {
        return Err(Error::DimensionMismatch(format!("{n} ions but {} modes", basis.n_modes())));
    }
    let mut out = Vec::with_capacity(3 * n);
    for dir in [Direction::X, Direction::Y, Direction::Z] {
        let i = axis(dir);
        for p in 0..n {
            let stiffness = if dir.is_axial() { basis.mu[p] } else { basis.gamma[p] };
            let project = |s: &[Vec3], offset: bool| -> f64 {
                (0..n)
                    .map(|k| {
                        let eq = if offset && dir.is_axial() { traj.u[k] } else { 0.0 };
                        basis.component(k, p) * (s[k][i] - eq)
                    })
                    .sum()
            };
            let coordinate: Vec<f64> = traj.positions.iter().map(|s| project(s, true)).collect();
            let velocity: Vec<f64> = traj.velocities.iter().map(|s| project(s, false)).collect();
            let energy = coordinate
                .iter()
                .zip(&velocity)
                .map(|(x, v)| 0.5 * (v * v + stiffness * x * x))
                .collect();
            out.push(ModeSeries { mode: ActiveMode::new(dir, p + 1), coordinate, velocity, energy });
        }
    }
    Ok(out)
}

/// Largest summed energy of `group` over the run divided by its initial value.
pub fn energy_gain(series: &[ModeSeries], group: &[ActiveMode]) -> Result<f64> {
    let chosen: Vec<&ModeSeries> = group
        .iter()
        .map(|m| {
            series
                .iter()
                .find(|s| s.mode == *m)
                .ok_or_else(|| Error::InvalidParameter(format!("no series for mode {m}")))
        })
        .collect::<Result<_>>()?;
    let len = chosen.first().map_or(0, |s| s.energy.len());
    let total = |t: usize| chosen.iter().map(|s| s.energy[t]).sum::<f64>();
    let e0 = total(0);
    if !(e0 > 0.0) {
        return Err(Error::InvalidParameter("group starts with no energy".into()));
    }
    Ok((0..len).map(total).fold(0.0, f64::max) / e0)
}
