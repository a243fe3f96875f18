//! Exact propagation under a time-independent Hamiltonian.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::hamiltonian::HamiltonianMatrix;
use crate::error::{Error, Result};

/// Allowed deviation of ‖ψ‖ from 1.
pub const NORM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantumState {
    pub amplitudes: DVector<C64>,
    /// Dimensionless time τ = ω₃t.
    pub time: f64,
}

impl QuantumState {
    pub fn new(amplitudes: DVector<C64>) -> Result<Self> {
        let s = Self { amplitudes, time: 0.0 };
        if (s.norm() - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidParameter(format!("state norm is {}", s.norm())));
        }
        Ok(s)
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn population(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    /// ⟨self|other⟩
    pub fn inner(&self, other: &QuantumState) -> C64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn fidelity(&self, other: &QuantumState) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// ⟨ψ|H|ψ⟩ in units of ħω₃.
    pub fn expectation(&self, h: &HamiltonianMatrix) -> f64 {
        self.amplitudes.dotc(&(&h.matrix * &self.amplitudes)).re
    }

    /// Physical time in seconds for axial frequency `omega3` (rad/s).
    pub fn time_seconds(&self, omega3: f64) -> f64 {
        self.time / omega3
    }
}

/// Cached eigendecomposition `H = V Λ V†`.
#[derive(Debug, Clone)]
pub struct Propagator {
    eigenvalues: DVector<f64>,
    vectors: DMatrix<C64>,
}

impl Propagator {
    pub fn new(h: &HamiltonianMatrix) -> Self {
        let eig = h.matrix.clone().symmetric_eigen();
        Self { eigenvalues: eig.eigenvalues, vectors: eig.eigenvectors }
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Applies `exp(−iHτ)` for a dimensionless duration `tau`.
    pub fn evolve(&self, state: &QuantumState, tau: f64) -> Result<QuantumState> {
        if state.dimension() != self.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "state has {} amplitudes, Hamiltonian is {}",
                state.dimension(),
                self.dimension()
            )));
        }
        let mut c = self.vectors.ad_mul(&state.amplitudes);
        for (ck, &e) in c.iter_mut().zip(self.eigenvalues.iter()) {
            *ck *= C64::from_polar(1.0, -e * tau);
        }
        Ok(QuantumState { amplitudes: &self.vectors * c, time: state.time + tau })
    }
}

/// One-shot propagation; use [`Propagator`] when sampling many times.
pub fn evolve(state: &QuantumState, h: &HamiltonianMatrix, tau: f64) -> Result<QuantumState> {
    Propagator::new(h).evolve(state, tau)
}
