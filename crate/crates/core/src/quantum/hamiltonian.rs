//! Free and interaction Hamiltonians as dense matrices over a [`FockBasis`].
//!
//! Every cubic term is expanded into ladder-operator monomials which are
//! applied factor by factor. An annihilator on `|0⟩` or a creator on
//! `|cutoff⟩` gives zero, so a product of `X = b + b†` factors equals the
//! product of the truncated `X` matrices. Modes outside the basis are held in
//! their ground state: a monomial only contributes if it returns every
//! inactive mode to `|0⟩`, which reproduces `⟨0|X²|0⟩ = 1`, `⟨0|X|0⟩ = 0`.

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::fock::{ActiveMode, Direction, FockBasis};
use crate::coupling::{CouplingTensors, ZERO_COUPLING};
use crate::error::{Error, Result};
use crate::modes::ModeBasis;
use crate::resonance::{delta, DeltaSign, ResonanceEntry, ResonanceKind};

/// Default `|Δ|` cutoff for detuning-based term selection.
pub const DEFAULT_DETUNING_CUTOFF: f64 = 1e-9;

/// Processes with `|Δ|` below this count as resonant when checking that the
/// active modes are closed, and when accepting a target resonance at a
/// rounded anisotropy.
pub const CLOSURE_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Free,
    FullInteraction,
    RwaInteraction,
    /// Sum of a free part and an interaction part.
    Total,
}

/// Matrix in units of `ħω₃`.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix {
    pub matrix: DMatrix<C64>,
    pub flavor: Flavor,
}

impl HamiltonianMatrix {
    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    /// `max|H − H†| / max(1, max|H|)`.
    pub fn hermiticity_error(&self) -> f64 {
        let h = &self.matrix;
        let scale = h.iter().fold(1.0f64, |a, z| a.max(z.norm()));
        let diff = (h - h.adjoint()).iter().fold(0.0f64, |a, z| a.max(z.norm()));
        diff / scale
    }

    pub fn element(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    /// Sub-matrix on the listed basis states.
    pub fn restricted(&self, states: &[usize]) -> DMatrix<C64> {
        DMatrix::from_fn(states.len(), states.len(), |i, j| self.matrix[(states[i], states[j])])
    }

    pub fn plus(&self, other: &HamiltonianMatrix) -> Result<HamiltonianMatrix> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.dimension(),
                other.dimension()
            )));
        }
        Ok(HamiltonianMatrix { matrix: &self.matrix + &other.matrix, flavor: Flavor::Total })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RwaSelection {
    /// Keep only the process of this catalog entry (and its conjugate).
    Resonance(ResonanceEntry),
    /// Keep every first/second-kind monomial with `|Δ|` at most this.
    Detuning(f64),
}

impl Default for RwaSelection {
    fn default() -> Self {
        RwaSelection::Detuning(DEFAULT_DETUNING_CUTOFF)
    }
}

/// `Σ (√γ_p (n_pˣ + n_pʸ) + √μ_p n_p^z)` on the diagonal.
pub fn build_free_hamiltonian(basis: &FockBasis, modes: &ModeBasis) -> Result<HamiltonianMatrix> {
    check_modes(basis, modes)?;
    let freq: Vec<f64> = basis.modes.iter().map(|&m| frequency(m, modes)).collect();
    let dim = basis.dimension();
    let mut matrix = DMatrix::from_element(dim, dim, C64::new(0.0, 0.0));
    for i in 0..dim {
        let e: f64 = basis.occupations(i).iter().zip(&freq).map(|(&n, f)| n as f64 * f).sum();
        matrix[(i, i)] = C64::new(e, 0.0);
    }
    Ok(HamiltonianMatrix { matrix, flavor: Flavor::Free })
}

/// The complete cubic interaction, counter-rotating and purely axial terms
/// included, projected onto the basis.
///
/// The active set must be closed under near-resonant processes: whenever two
/// of the three oscillators of a process with `|Δ| ≤` [`CLOSURE_TOLERANCE`]
/// are active, the third must be too.
pub fn build_full_interaction(
    basis: &FockBasis,
    modes: &ModeBasis,
    tensors: &CouplingTensors,
    eps: f64,
) -> Result<HamiltonianMatrix> {
    check_modes(basis, modes)?;
    check_tensors(modes, tensors)?;
    check_closure(basis, modes, tensors)?;
    let n = modes.n_modes();
    let mut acc = Accumulator::new(basis);
    for m in 0..n {
        for nn in 0..n {
            for p in 0..n {
                let d = tensors.d.get(m, nn, p);
                if d == 0.0 {
                    continue;
                }
                let pre = eps * d / modes.mu[p].powf(0.25);
                let axial = 2.0 / (modes.mu[m] * modes.mu[nn]).powf(0.25);
                let transverse = -3.0 / (modes.gamma[m] * modes.gamma[nn]).powf(0.25);
                acc.add_term(Direction::Z, [m, nn, p], pre * axial, modes, |_| true);
                for dir in [Direction::X, Direction::Y] {
                    acc.add_term(dir, [m, nn, p], pre * transverse, modes, |_| true);
                }
            }
        }
    }
    Ok(acc.finish(Flavor::FullInteraction))
}

/// Rotating-wave interaction: only axial-transverse-transverse monomials of
/// the first or second kind survive, selected by `selection`. Ordered triples
/// are summed as they stand, so two orderings of the same process add up.
pub fn build_rwa_interaction(
    basis: &FockBasis,
    modes: &ModeBasis,
    tensors: &CouplingTensors,
    eps: f64,
    selection: &RwaSelection,
) -> Result<HamiltonianMatrix> {
    check_modes(basis, modes)?;
    check_tensors(modes, tensors)?;
    let target = match selection {
        RwaSelection::Resonance(entry) => {
            let n = modes.n_modes();
            if entry.m > n || entry.n > n || entry.p > n {
                return Err(Error::DimensionMismatch(format!(
                    "resonance {} does not fit {n} modes",
                    entry.label()
                )));
            }
            let off = entry.detuning(&modes.mu, modes.alpha)?;
            if off.abs() > CLOSURE_TOLERANCE {
                return Err(Error::NoResonantCoupling);
            }
            Some(process_patterns(entry))
        }
        RwaSelection::Detuning(cut) => {
            if !(*cut >= 0.0) {
                return Err(Error::InvalidParameter(format!("negative detuning cutoff {cut}")));
            }
            None
        }
    };
    let n = modes.n_modes();
    let mut acc = Accumulator::new(basis);
    for m in 0..n {
        for nn in 0..n {
            for p in 0..n {
                let d = tensors.d.get(m, nn, p);
                if d.abs() <= ZERO_COUPLING {
                    continue;
                }
                let c = -3.0 * eps * d
                    / (modes.mu[p] * modes.gamma[m] * modes.gamma[nn]).powf(0.25);
                for dir in [Direction::X, Direction::Y] {
                    acc.add_term(dir, [m, nn, p], c, modes, |mono| match (&target, selection) {
                        (Some(patterns), _) => {
                            let key = mono.key(dir);
                            patterns.contains(&key)
                        }
                        (None, RwaSelection::Detuning(cut)) => {
                            mono.is_mixing() && mono.detuning.abs() <= *cut
                        }
                        _ => unreachable!(),
                    });
                }
            }
        }
    }
    if acc.terms == 0 {
        return Err(Error::NoResonantCoupling);
    }
    Ok(acc.finish(Flavor::RwaInteraction))
}

fn frequency(mode: ActiveMode, modes: &ModeBasis) -> f64 {
    let i = mode.mode - 1;
    match mode.direction {
        Direction::Z => modes.mu[i].sqrt(),
        _ => modes.gamma[i].sqrt(),
    }
}

fn check_modes(basis: &FockBasis, modes: &ModeBasis) -> Result<()> {
    let n = modes.n_modes();
    match basis.modes.iter().find(|m| m.mode > n) {
        Some(m) => Err(Error::InvalidParameter(format!("mode {m} exceeds the {n}-ion chain"))),
        None => Ok(()),
    }
}

fn check_tensors(modes: &ModeBasis, tensors: &CouplingTensors) -> Result<()> {
    if tensors.n_modes() != modes.n_modes() {
        return Err(Error::DimensionMismatch(format!(
            "tensors for {} modes, basis has {}",
            tensors.n_modes(),
            modes.n_modes()
        )));
    }
    Ok(())
}

fn check_closure(basis: &FockBasis, modes: &ModeBasis, tensors: &CouplingTensors) -> Result<()> {
    let n = modes.n_modes();
    let active = |m: ActiveMode| basis.position(m).is_some();
    let mut missing = BTreeSet::new();
    for p in 0..n {
        for m in 0..n {
            for nn in 0..n {
                if tensors.d.get(m, nn, p).abs() <= ZERO_COUPLING {
                    continue;
                }
                let (mu_m, mu_n, mu_p) = (modes.mu[m], modes.mu[nn], modes.mu[p]);
                let resonant = [DeltaSign::Plus, DeltaSign::Minus].into_iter().any(|s| {
                    delta(mu_m, mu_n, mu_p, modes.alpha, s)
                        .map(|d| d.abs() <= CLOSURE_TOLERANCE)
                        .unwrap_or(false)
                });
                if !resonant {
                    continue;
                }
                for dir in [Direction::X, Direction::Y] {
                    let slots = [
                        ActiveMode::z(p + 1),
                        ActiveMode::new(dir, m + 1),
                        ActiveMode::new(dir, nn + 1),
                    ];
                    if slots.iter().filter(|&&s| active(s)).count() >= 2 {
                        missing.extend(slots.iter().filter(|&&s| !active(s)).copied());
                    }
                }
            }
        }
    }
    if missing.is_empty() {
        Ok(())
    } else {
        let list: Vec<String> = missing.iter().map(|m| m.to_string()).collect();
        Err(Error::IncompleteModes(list.join(", ")))
    }
}

/// Canonical description of a monomial: sorted `(oscillator, creates)` pairs.
type Pattern = Vec<(ActiveMode, bool)>;

/// The process of `entry` and its Hermitian conjugate, in the direction-free
/// form `(mode, creates)` with the transverse modes tagged as `X`; callers
/// compare with [`Monomial::key`], which maps either transverse direction
/// to `X`.
fn process_patterns(entry: &ResonanceEntry) -> [Pattern; 2] {
    let t = |mode: usize, c: bool| (ActiveMode::x(mode), c);
    let z = |c: bool| (ActiveMode::z(entry.p), c);
    let mut forward = match entry.kind {
        ResonanceKind::Second => vec![z(false), t(entry.m, true), t(entry.n, true)],
        ResonanceKind::First => vec![t(entry.m, false), z(true), t(entry.n, true)],
    };
    forward.sort();
    let mut backward: Pattern = forward.iter().map(|&(m, c)| (m, !c)).collect();
    backward.sort();
    [forward, backward]
}

struct Monomial {
    /// Factors in operator order (leftmost first).
    factors: [(ActiveMode, bool); 3],
    /// Change of free energy caused by the monomial, in units of ħω₃.
    detuning: f64,
}

impl Monomial {
    fn key(&self, dir: Direction) -> Pattern {
        let mut k: Pattern = self
            .factors
            .iter()
            .map(|&(m, c)| if m.direction == dir { (ActiveMode::x(m.mode), c) } else { (m, c) })
            .collect();
        k.sort();
        k
    }

    /// Exactly one axial factor, and it moves opposite to at least one
    /// transverse factor: `a b† b†`, `a b b†` and their conjugates.
    fn is_mixing(&self) -> bool {
        let axial: Vec<_> = self.factors.iter().filter(|f| f.0.direction.is_axial()).collect();
        if axial.len() != 1 {
            return false;
        }
        let a = axial[0].1;
        self.factors.iter().any(|f| !f.0.direction.is_axial() && f.1 != a)
    }
}

struct Accumulator<'a> {
    basis: &'a FockBasis,
    matrix: DMatrix<f64>,
    occupations: Vec<Vec<usize>>,
    terms: usize,
}

impl<'a> Accumulator<'a> {
    fn new(basis: &'a FockBasis) -> Self {
        let dim = basis.dimension();
        Self {
            basis,
            matrix: DMatrix::zeros(dim, dim),
            occupations: (0..dim).map(|i| basis.occupations(i)).collect(),
            terms: 0,
        }
    }

    /// Adds `coeff · Z_p · D_m · D_n` (0-based mode indices) with `D` the
    /// position operator along `dir`, keeping the monomials accepted by `keep`.
    fn add_term(
        &mut self,
        dir: Direction,
        [m, n, p]: [usize; 3],
        coeff: f64,
        modes: &ModeBasis,
        keep: impl Fn(&Monomial) -> bool,
    ) {
        let osc = [ActiveMode::z(p + 1), ActiveMode::new(dir, m + 1), ActiveMode::new(dir, n + 1)];
        if osc.iter().all(|&o| self.basis.position(o).is_none()) {
            return;
        }
        let freq = osc.map(|o| frequency(o, modes));
        for bits in 0..8u8 {
            let creates = [bits & 4 != 0, bits & 2 != 0, bits & 1 != 0];
            let detuning: f64 = (0..3).map(|k| if creates[k] { freq[k] } else { -freq[k] }).sum();
            let mono = Monomial {
                factors: [(osc[0], creates[0]), (osc[1], creates[1]), (osc[2], creates[2])],
                detuning,
            };
            if keep(&mono) {
                self.terms += 1;
                self.apply(&mono.factors, coeff);
            }
        }
    }

    fn apply(&mut self, factors: &[(ActiveMode, bool); 3], coeff: f64) {
        let pos: Vec<Option<usize>> = factors.iter().map(|f| self.basis.position(f.0)).collect();
        for col in 0..self.occupations.len() {
            let mut occ = self.occupations[col].clone();
            // Inactive oscillators start and must end in the vacuum.
            let mut hidden: [(Option<ActiveMode>, usize); 3] = [(None, 0); 3];
            let mut amp = 1.0;
            for k in (0..3).rev() {
                let (mode, create) = factors[k];
                let n = match pos[k] {
                    Some(i) => &mut occ[i],
                    None => {
                        let slot = hidden
                            .iter()
                            .position(|h| h.0 == Some(mode))
                            .or_else(|| hidden.iter().position(|h| h.0.is_none()))
                            .expect("three slots suffice for three factors");
                        hidden[slot].0 = Some(mode);
                        &mut hidden[slot].1
                    }
                };
                if create {
                    if pos[k].is_some_and(|i| *n >= self.basis.cutoffs[i]) {
                        amp = 0.0;
                        break;
                    }
                    *n += 1;
                    amp *= (*n as f64).sqrt();
                } else {
                    if *n == 0 {
                        amp = 0.0;
                        break;
                    }
                    amp *= (*n as f64).sqrt();
                    *n -= 1;
                }
            }
            if amp == 0.0 || hidden.iter().any(|h| h.1 != 0) {
                continue;
            }
            let row = self.basis.index(&occ).expect("cutoffs enforced above");
            self.matrix[(row, col)] += coeff * amp;
        }
    }

    fn finish(self, flavor: Flavor) -> HamiltonianMatrix {
        HamiltonianMatrix { matrix: self.matrix.map(|x| C64::new(x, 0.0)), flavor }
    }
}
