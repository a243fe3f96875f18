//! Third-order Coulomb coupling tensors.
//!
//! `C` lives in the ion basis and is nonzero only when at least two of its
//! indices coincide. `D` is its triple contraction with the mode vectors and
//! sets the strength of three-mode mixing.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::equilibrium::EquilibriumChain;
use crate::modes::{build_a, ModeBasis};

/// |D| at or below this counts as an exact zero.
pub const ZERO_COUPLING: f64 = 1e-12;

/// Dense rank-3 tensor of side `n`, row-major in `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor3 {
    n: usize,
    data: Vec<f64>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.n && j < self.n && k < self.n);
        (i * self.n + j) * self.n + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[self.offset(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    /// Largest |T_ijk − T_σ(ijk)| over all index permutations σ.
    pub fn max_asymmetry(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    for w in [
                        self.get(i, k, j),
                        self.get(j, i, k),
                        self.get(j, k, i),
                        self.get(k, i, j),
                        self.get(k, j, i),
                    ] {
                        worst = worst.max((v - w).abs());
                    }
                }
            }
        }
        worst
    }

    /// Average over the six index permutations.
    fn symmetrized(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = self.get(i, j, k)
                        + self.get(i, k, j)
                        + self.get(j, i, k)
                        + self.get(j, k, i)
                        + self.get(k, i, j)
                        + self.get(k, j, i);
                    out.set(i, j, k, s / 6.0);
                }
            }
        }
        out
    }
}

/// Ion-basis tensor `C` from the equilibrium positions.
///
/// Filled from its defining cases (`m = n = p`, and two equal indices with
/// the distinct one in every slot), then symmetrized; the symmetrization must
/// not move any entry by more than 1e-14.
pub fn build_c(u: &[f64]) -> Tensor3 {
    let n = u.len();
    let mut c = Tensor3::zeros(n);
    for m in 0..n {
        let mut diag = 0.0;
        for q in 0..n {
            if q == m {
                continue;
            }
            let sgn = if q > m { 1.0 } else { -1.0 };
            let d4 = (u[q] - u[m]).powi(4);
            diag += sgn / d4;
            // Two indices equal to m, one equal to q.
            let pair = -sgn / d4;
            c.set(m, m, q, pair);
            c.set(m, q, m, pair);
            c.set(q, m, m, pair);
        }
        c.set(m, m, m, diag);
    }
    let sym = c.symmetrized();
    let drift = c
        .data
        .iter()
        .zip(&sym.data)
        .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()));
    assert!(drift <= 1e-14, "C symmetrization moved an entry by {drift:e}");
    sym
}

/// Mode-basis tensor `D_pqr = Σ C_lmn b_l^(p) b_m^(q) b_n^(r)`.
///
/// Contracted one index at a time in a fixed order, so every entry is summed
/// identically on every run.
pub fn build_d(c: &Tensor3, basis: &ModeBasis) -> Tensor3 {
    let n = c.dim();
    let b = &basis.vectors;
    let mut t1 = Tensor3::zeros(n);
    for l in 0..n {
        for m in 0..n {
            for r in 0..n {
                let s: f64 = (0..n).map(|k| c.get(l, m, k) * b[(k, r)]).sum();
                t1.set(l, m, r, s);
            }
        }
    }
    let mut t2 = Tensor3::zeros(n);
    for l in 0..n {
        for q in 0..n {
            for r in 0..n {
                let s: f64 = (0..n).map(|m| b[(m, q)] * t1.get(l, m, r)).sum();
                t2.set(l, q, r, s);
            }
        }
    }
    let mut d = Tensor3::zeros(n);
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let s: f64 = (0..n).map(|l| b[(l, p)] * t2.get(l, q, r)).sum();
                d.set(p, q, r, s);
            }
        }
    }
    d
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CouplingTensors {
    pub c: Tensor3,
    pub d: Tensor3,
    /// 𝒩 = √(Σ u_n²).
    pub norm: f64,
}

impl CouplingTensors {
    pub fn new(chain: &EquilibriumChain, basis: &ModeBasis) -> Self {
        let c = build_c(&chain.u);
        let d = build_d(&c, basis);
        Self { c, d, norm: chain.norm() }
    }

    pub fn n_modes(&self) -> usize {
        self.d.dim()
    }

    /// `D` with 1-based mode numbers, as printed in tables.
    pub fn d_numbered(&self, m: usize, n: usize, p: usize) -> f64 {
        self.d.get(m - 1, n - 1, p - 1)
    }

    /// Writes `# N=…`, `# norm=…`, a column header and one `m,n,p,C,D` record
    /// per entry with `C ≠ 0` or `|D| > ZERO_COUPLING`; indices are 1-based.
    pub fn write_dump<W: Write>(&self, mut out: W, fmt: impl Fn(f64) -> String) -> io::Result<()> {
        let n = self.n_modes();
        writeln!(out, "# N={n}")?;
        writeln!(out, "# norm={}", fmt(self.norm))?;
        writeln!(out, "m,n,p,C,D")?;
        for (m, k, p, c, d) in self.nonzero_entries() {
            writeln!(out, "{m},{k},{p},{},{}", fmt(c), fmt(d))?;
        }
        Ok(())
    }

    /// `(m, n, p, C, D)` with 1-based indices, lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, f64, f64)> {
        let n = self.n_modes();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.c.get(i, j, k);
                    let d = self.d.get(i, j, k);
                    if c != 0.0 || d.abs() > ZERO_COUPLING {
                        out.push((i + 1, j + 1, k + 1, c, d));
                    }
                }
            }
        }
        out
    }
}

/// Largest violation of each exact coupling identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    /// `Σ_p C_mnp = 0`.
    pub c_row_sum: f64,
    /// `D_mn1 = 0`.
    pub d_center_of_mass: f64,
    /// `Σ_p u_p C_mnp = (δ_mn − A_mn)/2`.
    pub c_position_moment: f64,
    /// `D_mn2 = (1 − μ_m) δ_mn / (2𝒩)`.
    pub d_stretch: f64,
}

impl IdentityReport {
    pub fn max(&self) -> f64 {
        self.c_row_sum
            .max(self.d_center_of_mass)
            .max(self.c_position_moment)
            .max(self.d_stretch)
    }
}

pub fn check_identities(tensors: &CouplingTensors, basis: &ModeBasis, u: &[f64]) -> IdentityReport {
    let n = u.len();
    let a = build_a(u);
    let c = &tensors.c;
    let d = &tensors.d;
    let mut report = IdentityReport {
        c_row_sum: 0.0,
        d_center_of_mass: 0.0,
        c_position_moment: 0.0,
        d_stretch: 0.0,
    };
    for m in 0..n {
        for k in 0..n {
            let row: f64 = (0..n).map(|p| c.get(m, k, p)).sum();
            report.c_row_sum = report.c_row_sum.max(row.abs());

            let moment: f64 = (0..n).map(|p| u[p] * c.get(m, k, p)).sum();
            let delta = if m == k { 1.0 } else { 0.0 };
            let target = 0.5 * (delta - a[(m, k)]);
            report.c_position_moment = report.c_position_moment.max((moment - target).abs());

            report.d_center_of_mass = report.d_center_of_mass.max(d.get(m, k, 0).abs());

            if n >= 2 {
                let stretch = delta * (1.0 - basis.mu[m]) / (2.0 * tensors.norm);
                report.d_stretch = report.d_stretch.max((d.get(m, k, 1) - stretch).abs());
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::solve_equilibrium;
    use crate::modes::diagonalize;

    fn setup(n: usize) -> (EquilibriumChain, ModeBasis, CouplingTensors) {
        let chain = solve_equilibrium(n).unwrap();
        let basis = diagonalize(&build_a(&chain.u), 1e-3, 1.0).unwrap();
        let t = CouplingTensors::new(&chain, &basis);
        (chain, basis, t)
    }

    #[test]
    fn c_vanishes_for_distinct_indices() {
        let (_, _, t) = setup(6);
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    if i != j && j != k && i != k {
                        assert_eq!(t.c.get(i, j, k), 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn c_pair_pattern() {
        let (chain, _, t) = setup(5);
        let u = &chain.u;
        let x = 1.0 / (u[1] - u[3]).powi(4);
        // 1-based C_224, C_242, C_422 and C_442 ...
        for (i, j, k) in [(1, 1, 3), (1, 3, 1), (3, 1, 1)] {
            assert!((t.c.get(i, j, k) + x).abs() < 1e-15);
        }
        for (i, j, k) in [(3, 3, 1), (1, 3, 3), (3, 1, 3)] {
            assert!((t.c.get(i, j, k) - x).abs() < 1e-15);
        }
    }

    #[test]
    fn c_diagonal_balances_pairs() {
        let (_, _, t) = setup(7);
        for m in 0..7 {
            let others: f64 = (0..7).filter(|&k| k != m).map(|k| t.c.get(m, m, k)).sum();
            assert!((t.c.get(m, m, m) + others).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_two_and_three_ions() {
        let (_, _, t2) = setup(2);
        assert!((t2.d_numbered(2, 2, 2) + 2f64.powf(1.0 / 6.0)).abs() < 1e-9);
        assert!(t2.d_numbered(2, 2, 1).abs() < 1e-12);

        let (_, _, t3) = setup(3);
        let d233 = -(3.0 / 2f64.sqrt()) * 0.8f64.powf(4.0 / 3.0);
        let d222 = -(1.0 / 2f64.sqrt()) * 0.8f64.powf(1.0 / 3.0);
        assert!((t3.d_numbered(2, 3, 3) - d233).abs() < 1e-9);
        assert!((t3.d_numbered(2, 2, 2) - d222).abs() < 1e-9);
        assert!((d233 + 1.5754).abs() < 1e-4);
    }

    #[test]
    fn stretch_identity_closed_form_two_ions() {
        let (chain, basis, t) = setup(2);
        assert!((chain.norm() - 2f64.powf(-1.0 / 6.0)).abs() < 1e-14);
        let expected = (1.0 - basis.mu[1]) / (2.0 * chain.norm());
        assert!((t.d_numbered(2, 2, 2) - expected).abs() < 1e-12);
    }

    #[test]
    fn six_ion_worked_coupling() {
        let (_, _, t) = setup(6);
        assert!((t.d_numbered(6, 5, 5) - 4.2528).abs() < 5e-3);
    }

    #[test]
    fn identities_and_symmetry_up_to_ten_ions() {
        for n in 2..=10 {
            let (chain, basis, t) = setup(n);
            let report = check_identities(&t, &basis, &chain.u);
            assert!(report.max() < 1e-9, "N={n}: {report:?}");
            assert!(t.c.max_asymmetry() < 1e-12);
            assert!(t.d.max_asymmetry() < 1e-10);
        }
    }

    #[test]
    fn dump_lists_nonzero_entries_one_based() {
        let (_, _, t) = setup(2);
        let mut buf = Vec::new();
        t.write_dump(&mut buf, |x| format!("{x:.6}")).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("# N=2"));
        assert!(lines.next().unwrap().starts_with("# norm=0.8908"));
        assert_eq!(lines.next(), Some("m,n,p,C,D"));
        // C is nonzero everywhere for two ions.
        assert_eq!(lines.count(), 8);
        assert!(text.contains("2,2,2,-0.396850,-1.122462"));
    }
}
