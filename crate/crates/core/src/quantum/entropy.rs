use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use super::evolve::QuantumState;
use super::fock::{ActiveMode, FockBasis};
use crate::error::{Error, Result};

/// Eigenvalues of ρ_A below this are dropped from −Σ λ ln λ.
const EIGENVALUE_FLOOR: f64 = 1e-15;

/// Von Neumann entropy (nats) of the reduced state on `partition`.
pub fn entanglement_entropy(state: &QuantumState, basis: &FockBasis, partition: &[ActiveMode]) -> Result<f64> {
    if state.dimension() != basis.dimension() {
        return Err(Error::DimensionMismatch(format!(
            "state has {} amplitudes, basis {}",
            state.dimension(),
            basis.dimension()
        )));
    }
    let mut in_a = vec![false; basis.modes.len()];
    for m in partition {
        let k = basis
            .position(*m)
            .ok_or_else(|| Error::InvalidParameter(format!("mode {m} is not active")))?;
        in_a[k] = true;
    }
    let size_a: usize = (0..in_a.len()).filter(|&k| in_a[k]).map(|k| basis.cutoffs[k] + 1).product();
    let size_b = basis.dimension() / size_a;
    if partition.is_empty() || size_b == 0 || in_a.iter().all(|&a| a) {
        return Err(Error::InvalidParameter("partition must be a nonempty proper subset".into()));
    }

    let mut psi = DMatrix::from_element(size_a, size_b, C64::new(0.0, 0.0));
    for i in 0..basis.dimension() {
        let occ = basis.occupations(i);
        let (mut ia, mut ib) = (0, 0);
        for (k, &n) in occ.iter().enumerate() {
            let radix = basis.cutoffs[k] + 1;
            if in_a[k] {
                ia = ia * radix + n;
            } else {
                ib = ib * radix + n;
            }
        }
        psi[(ia, ib)] = state.amplitudes[i];
    }
    let rho = &psi * psi.adjoint();
    let s: f64 = rho
        .symmetric_eigenvalues()
        .iter()
        .filter(|&&l| l > EIGENVALUE_FLOOR)
        .map(|&l| -l * l.ln())
        .sum();
    // Eigenvalues a few ulp above 1 give a tiny negative sum for product states.
    Ok(s.max(0.0))
}
