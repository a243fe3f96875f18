//! Quadratic coupling matrices and the shared axial/transverse mode basis.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Eigenvalues closer than this are treated as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

/// Normal-mode basis shared by the axial matrix `A` and transverse matrix `B`.
///
/// Index `p` (0-based here, 1-based in printed output) orders modes by
/// ascending axial eigenvalue `μ_p`; the transverse eigenvalues `γ_p` are
/// therefore descending. Every eigenvector has a positive last component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeBasis {
    pub mu: Vec<f64>,
    pub gamma: Vec<f64>,
    /// Column `p` is `b^(p)`.
    pub vectors: DMatrix<f64>,
    /// Axial angular frequencies ν_p = ω₃√μ_p (rad/s).
    pub nu: Vec<f64>,
    /// Transverse angular frequencies Ω_p = ω₃√γ_p (rad/s).
    pub omega_t: Vec<f64>,
    pub alpha: f64,
    pub omega3: f64,
}

impl ModeBasis {
    pub fn n_modes(&self) -> usize {
        self.mu.len()
    }

    /// Component `n` of eigenvector `p` (both 0-based).
    pub fn component(&self, n: usize, p: usize) -> f64 {
        self.vectors[(n, p)]
    }

    /// Dimensionless axial frequency √μ_p.
    pub fn axial_frequency(&self, p: usize) -> f64 {
        self.mu[p].sqrt()
    }

    /// Dimensionless transverse frequency √γ_p.
    pub fn transverse_frequency(&self, p: usize) -> f64 {
        self.gamma[p].sqrt()
    }

    pub fn alpha_crit(&self) -> Result<f64> {
        critical_anisotropy(&self.mu)
    }

    /// Same eigenbasis at a different anisotropy.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        let mut out = self.clone();
        out.set_alpha(alpha)?;
        Ok(out)
    }

    fn set_alpha(&mut self, alpha: f64) -> Result<()> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!("alpha must be positive, got {alpha}")));
        }
        if self.mu.len() >= 2 {
            let alpha_crit = critical_anisotropy(&self.mu)?;
            if alpha >= alpha_crit {
                return Err(Error::ZigZag { alpha, alpha_crit });
            }
        }
        self.alpha = alpha;
        self.gamma = self.mu.iter().map(|&m| transverse_eigenvalue(m, alpha)).collect();
        self.omega_t = self.gamma.iter().map(|g| self.omega3 * g.sqrt()).collect();
        Ok(())
    }
}

/// γ = 1/α + 1/2 − μ/2.
pub fn transverse_eigenvalue(mu: f64, alpha: f64) -> f64 {
    1.0 / alpha + 0.5 - 0.5 * mu
}

/// Axial coupling matrix at dimensionless positions `u`.
pub fn build_a(u: &[f64]) -> DMatrix<f64> {
    let n = u.len();
    let mut a = DMatrix::zeros(n, n);
    for m in 0..n {
        let mut diag = 1.0;
        for k in 0..n {
            if k != m {
                let c = 2.0 / (u[m] - u[k]).abs().powi(3);
                a[(m, k)] = -c;
                diag += c;
            }
        }
        a[(m, m)] = diag;
    }
    a
}

/// Transverse coupling matrix `B = (1/α + 1/2)·I − A/2`.
pub fn build_b(a: &DMatrix<f64>, alpha: f64) -> DMatrix<f64> {
    let n = a.nrows();
    DMatrix::identity(n, n) * (1.0 / alpha + 0.5) - a * 0.5
}

/// α_crit = 2/(μ_N − 1), above which the lowest transverse mode goes soft.
pub fn critical_anisotropy(mu: &[f64]) -> Result<f64> {
    match mu.len() {
        0 => Err(Error::InvalidParameter("empty eigenvalue list".into())),
        1 => Err(Error::SingleIon),
        n => Ok(2.0 / (mu[n - 1] - 1.0)),
    }
}

/// Diagonalize `A`, sort ascending, fix eigenvector signs and attach the
/// transverse spectrum for anisotropy `alpha`.
pub fn diagonalize(a: &DMatrix<f64>, alpha: f64, omega3: f64) -> Result<ModeBasis> {
    let n = a.nrows();
    if n == 0 || a.ncols() != n {
        return Err(Error::DimensionMismatch(format!("A is {}x{}", a.nrows(), a.ncols())));
    }
    let eig = a.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));

    let mu: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    for w in mu.windows(2) {
        if (w[1] - w[0]).abs() < DEGENERACY_TOLERANCE {
            return Err(Error::DegenerateEigenvalues(w[0], w[1]));
        }
    }

    let mut vectors = DMatrix::zeros(n, n);
    for (p, &i) in order.iter().enumerate() {
        let col = eig.eigenvectors.column(i);
        let sign = if col[n - 1] < 0.0 { -1.0 } else { 1.0 };
        vectors.set_column(p, &(col * sign));
    }

    let mut basis = ModeBasis {
        nu: mu.iter().map(|m| omega3 * m.sqrt()).collect(),
        mu,
        gamma: Vec::new(),
        omega_t: Vec::new(),
        vectors,
        alpha,
        omega3,
    };
    basis.set_alpha(alpha)?;
    Ok(basis)
}
