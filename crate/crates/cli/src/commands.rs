use std::f64::consts::{PI, SQRT_2};
use std::path::PathBuf;

use anyhow::{anyhow, Result};
use clap::Args;
use serde::Serialize;

use ionchain::classical::{
    energy_gain, integrate, mode_projection, spectrum, IntegrationSettings, ModeExcitation,
    TRANSVERSE_SEED,
};
use ionchain::constants::angular_from_mhz;
use ionchain::coupling::check_identities;
use ionchain::equilibrium::{solve_equilibrium, TrapConfig};
use ionchain::modes::{build_a, diagonalize};
use ionchain::quantum::{
    build_free_hamiltonian, build_full_interaction, build_rwa_interaction, down_conversion_states,
    effective_coefficient, entanglement_entropy, epsilon, epsilon_from_width, three_state_solution,
    ActiveMode, Direction, FockBasis, HamiltonianMatrix, NonlinearityScale, Propagator, QuantumState,
    RwaSelection,
};
use ionchain::resonance::{alpha_min, build_catalog_capped, Catalog, ResonanceKind, DEFAULT_MAX_IONS};
use ionchain::{CouplingTensors, ModeBasis, ResonanceEntry};
use num_complex::Complex64 as C64;

use crate::config::{self, resolve_species, ClassicalConfig, Initial, SimMode, SimulateConfig};
use crate::output::{Cell, Sink, Table};
use crate::UsageError;

fn positive_count(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// `A..B` (inclusive) or a single number.
fn ion_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim_start_matches('=').trim()),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = lo.parse().map_err(|_| format!("bad range '{s}'"))?;
    let hi: usize = hi.parse().map_err(|_| format!("bad range '{s}'"))?;
    if lo < 2 || hi < lo {
        return Err(format!("range '{s}' must satisfy 2 <= A <= B"));
    }
    Ok((lo, hi))
}

fn triple(s: &str) -> std::result::Result<[usize; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected m,n,p, got '{s}'"));
    }
    let mut out = [0; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = positive_count(p)?;
    }
    Ok(out)
}

fn basis_for(n: usize, alpha: f64, omega3: f64) -> Result<(Vec<f64>, ModeBasis)> {
    let chain = solve_equilibrium(n)?;
    let modes = diagonalize(&build_a(&chain.u), alpha, omega3)?;
    Ok((chain.u, modes))
}

fn find_entry(catalog: &Catalog, [m, n, p]: [usize; 3]) -> Result<ResonanceEntry> {
    catalog
        .find(m, n, p)
        .cloned()
        .ok_or_else(|| anyhow!("no resonance {{{m},{n},{p}}} in the {}-ion catalog", catalog.n_ions))
}

fn modes_from_labels(labels: &[String]) -> Result<Vec<ActiveMode>> {
    labels
        .iter()
        .map(|l| l.parse::<ActiveMode>().map_err(|e| UsageError(e.to_string()).into()))
        .collect()
}

#[derive(Args, Debug, Serialize)]
pub struct EquilibriumArgs {
    /// Number of ions
    #[arg(long, value_parser = positive_count)]
    pub n: usize,
    /// Species for physical positions (Be9, Ca40, Sr88, Cd112 or any name with --mass-u)
    #[arg(long)]
    pub species: Option<String>,
    /// Ion mass in atomic mass units
    #[arg(long)]
    pub mass_u: Option<f64>,
    /// Axial trap frequency ω₃/2π in MHz; enables physical positions
    #[arg(long)]
    pub freq_mhz: Option<f64>,
}

pub fn equilibrium(args: &EquilibriumArgs, sink: &Sink) -> Result<()> {
    let chain = solve_equilibrium(args.n)?;
    let physical = match args.freq_mhz {
        Some(f) => {
            let species = resolve_species(args.species.as_deref().unwrap_or("Ca40"), args.mass_u)?;
            let trap = TrapConfig::new(args.n, species, angular_from_mhz(f), 1.0)?;
            Some(trap.length_scale())
        }
        None => None,
    };
    let mut cols = vec!["ion", "u"];
    if physical.is_some() {
        cols.push("z_m");
    }
    let mut t = Table::new("equilibrium", &cols);
    for (k, &u) in chain.u.iter().enumerate() {
        let mut row: Vec<Cell> = vec![(k + 1).into(), u.into()];
        if let Some(ell) = physical {
            row.push((u * ell).into());
        }
        t.push(row);
    }
    sink.emit(&t)?;
    if let Some(ell) = physical {
        let mut s = Table::new("length_scale", &["ell_m"]);
        s.push(vec![ell.into()]);
        sink.emit(&s)?;
    }
    Ok(())
}

#[derive(Args, Debug, Serialize)]
pub struct ModesArgs {
    #[arg(long, value_parser = positive_count)]
    pub n: usize,
    /// Anisotropy (ω₃/ω₁)²
    #[arg(long)]
    pub alpha: f64,
}

pub fn modes(args: &ModesArgs, sink: &Sink) -> Result<()> {
    let (_, m) = basis_for(args.n, args.alpha, 1.0)?;
    let n = args.n;
    let names: Vec<String> = (1..=n).map(|k| format!("b{k}")).collect();
    let mut cols = vec!["p", "mu", "gamma", "nu_over_omega3", "omega_over_omega3"];
    cols.extend(names.iter().map(String::as_str));
    let mut t = Table::new("modes", &cols);
    for p in 0..n {
        let mut row: Vec<Cell> = vec![
            (p + 1).into(),
            m.mu[p].into(),
            m.gamma[p].into(),
            m.axial_frequency(p).into(),
            m.transverse_frequency(p).into(),
        ];
        row.extend((0..n).map(|k| Cell::from(m.component(k, p))));
        t.push(row);
    }
    sink.emit(&t)?;
    if n >= 2 {
        let mut b = Table::new("modes_bounds", &["N", "alpha", "alpha_min", "alpha_crit"]);
        b.push(vec![n.into(), args.alpha.into(), alpha_min(&m.mu)?.into(), m.alpha_crit()?.into()]);
        sink.emit(&b)?;
    }
    Ok(())
}

#[derive(Args, Debug, Serialize)]
pub struct TensorsArgs {
    #[arg(long, value_parser = positive_count)]
    pub n: usize,
}

pub fn tensors(args: &TensorsArgs, sink: &Sink) -> Result<()> {
    if args.n < 2 {
        return Err(UsageError("tensors need at least two ions".into()).into());
    }
    let chain = solve_equilibrium(args.n)?;
    let modes = diagonalize(&build_a(&chain.u), 1e-3, 1.0)?;
    let tensors = CouplingTensors::new(&chain, &modes);
    let mut t = Table::new("tensors", &["m", "n", "p", "C", "D"]);
    for (m, n, p, c, d) in tensors.nonzero_entries() {
        t.push(vec![m.into(), n.into(), p.into(), c.into(), d.into()]);
    }
    sink.emit(&t)?;
    let r = check_identities(&tensors, &modes, &chain.u);
    let mut id = Table::new(
        "tensor_identities",
        &["N", "norm", "c_row_sum", "d_center_of_mass", "c_position_moment", "d_stretch"],
    );
    id.push(vec![
        args.n.into(),
        tensors.norm.into(),
        r.c_row_sum.into(),
        r.d_center_of_mass.into(),
        r.c_position_moment.into(),
        r.d_stretch.into(),
    ]);
    sink.emit(&id)
}

#[derive(Args, Debug, Serialize)]
pub struct TablesArgs {
    /// Ion numbers, e.g. `2..10` or `6`
    #[arg(long = "n", value_parser = ion_range, default_value = "2..10")]
    pub range: (usize, usize),
    /// Largest chain accepted
    #[arg(long, default_value_t = DEFAULT_MAX_IONS)]
    pub max_ions: usize,
}

pub fn tables(args: &TablesArgs, sink: &Sink) -> Result<()> {
    let cols = ["N", "m", "n", "p", "kind", "alpha_res", "D", "delta_residual"];
    let mut first = Table::new("resonances_first_kind", &cols);
    let mut second = Table::new("resonances_second_kind", &cols);
    let mut bounds = Table::new("resonance_bounds", &["N", "alpha_min", "alpha_crit", "entries"]);
    for n in args.range.0..=args.range.1 {
        let cat = build_catalog_capped(n, args.max_ions)?;
        for e in &cat.entries {
            let row = vec![
                n.into(),
                e.m.into(),
                e.n.into(),
                e.p.into(),
                e.kind.to_string().into(),
                e.alpha_res.into(),
                e.coupling.into(),
                e.delta_residual.into(),
            ];
            match e.kind {
                ResonanceKind::First => first.push(row),
                ResonanceKind::Second => second.push(row),
            }
        }
        bounds.push(vec![n.into(), cat.alpha_min.into(), cat.alpha_crit.into(), cat.entries.len().into()]);
    }
    sink.emit(&first)?;
    sink.emit(&second)?;
    sink.emit(&bounds)
}

#[derive(Args, Debug, Serialize)]
pub struct EpsilonArgs {
    #[arg(long, default_value = "Ca40")]
    pub species: String,
    #[arg(long)]
    pub mass_u: Option<f64>,
    /// Axial trap frequency ω₃/2π in MHz
    #[arg(long)]
    pub freq_mhz: f64,
    /// Target resonance as m,n,p
    #[arg(long, value_parser = triple, requires = "n")]
    pub resonance: Option<[usize; 3]>,
    /// Number of ions for --resonance
    #[arg(long, value_parser = positive_count)]
    pub n: Option<usize>,
    /// Anisotropy; defaults to the exact resonant value
    #[arg(long)]
    pub alpha: Option<f64>,
}

pub fn epsilon_cmd(args: &EpsilonArgs, sink: &Sink) -> Result<()> {
    let species = resolve_species(&args.species, args.mass_u)?;
    let w = angular_from_mhz(args.freq_mhz);
    let scale = NonlinearityScale::new(&species, w)?;
    if scale.is_suspicious() {
        eprintln!("warning: epsilon = {} is not small", scale.epsilon);
    }
    let mut t = Table::new("epsilon", &["species", "freq_mhz", "epsilon", "epsilon_width_form", "eps_omega3_over_2pi_hz"]);
    t.push(vec![
        species.name.clone().into(),
        args.freq_mhz.into(),
        scale.epsilon.into(),
        epsilon_from_width(&species, w)?.into(),
        (scale.epsilon * w / (2.0 * PI)).into(),
    ]);
    sink.emit(&t)?;

    if let (Some(res), Some(n)) = (args.resonance, args.n) {
        let entry = find_entry(&build_catalog_capped(n, n.max(DEFAULT_MAX_IONS))?, res)?;
        let alpha = args.alpha.unwrap_or(entry.alpha_res);
        let (_, modes) = basis_for(n, alpha, w)?;
        let scale = scale.with_resonance(&entry, &modes);
        let gamma = scale.gamma.expect("resonance attached");
        let mut r = Table::new(
            "coupling_rate",
            &["N", "m", "n", "p", "kind", "alpha", "gamma_over_eps_omega3", "gamma_rad_s", "gamma_over_2pi_hz"],
        );
        r.push(vec![
            n.into(),
            res[0].into(),
            res[1].into(),
            res[2].into(),
            entry.kind.to_string().into(),
            alpha.into(),
            effective_coefficient(&entry, &modes).into(),
            gamma.into(),
            (gamma / (2.0 * PI)).into(),
        ]);
        sink.emit(&r)?;
    }
    Ok(())
}

#[derive(Args, Debug, Serialize)]
pub struct SimulateArgs {
    /// TOML run configuration
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the configured propagation mode
    #[arg(long, value_enum)]
    pub mode: Option<SimMode>,
}

struct SimSetup {
    basis: FockBasis,
    modes: ModeBasis,
    tensors: CouplingTensors,
    entry: ResonanceEntry,
    eps: f64,
    /// Γ/ω₃
    gamma: f64,
}

pub fn simulate(args: &SimulateArgs, sink: &Sink) -> Result<()> {
    let cfg: SimulateConfig = config::load(&args.config)?;
    let mode = args.mode.unwrap_or(cfg.mode);
    if cfg.samples < 2 || !(cfg.duration > 0.0) {
        return Err(UsageError("need samples >= 2 and duration > 0".into()).into());
    }
    let species = resolve_species(&cfg.species, cfg.mass_u)?;
    let omega3 = angular_from_mhz(cfg.freq_mhz);
    let eps = match cfg.epsilon {
        Some(e) => e,
        None => epsilon(&species, omega3)?,
    };
    let entry = find_entry(&build_catalog_capped(cfg.n, cfg.n.max(DEFAULT_MAX_IONS))?, cfg.resonance)?;
    let alpha = cfg.alpha.unwrap_or(entry.alpha_res);
    let chain = solve_equilibrium(cfg.n)?;
    let modes = diagonalize(&build_a(&chain.u), alpha, 1.0)?;
    let tensors = CouplingTensors::new(&chain, &modes);
    let active = modes_from_labels(&cfg.active_modes)?;
    let cutoffs = cfg.cutoffs.clone().unwrap_or_else(|| vec![cfg.cutoff; active.len()]);
    let basis = FockBasis::new(active, cutoffs)?;
    let gamma = eps * effective_coefficient(&entry, &modes);
    let s = SimSetup { basis, modes, tensors, entry, eps, gamma };

    let states = down_conversion_states(&s.basis, &s.entry).ok();
    let initial = initial_state(&cfg.initial, &s)?;
    let partition = match &cfg.partition {
        Some(p) => modes_from_labels(p)?,
        None => s.basis.modes.iter().copied().filter(|m| m.direction == Direction::X).collect(),
    };

    let mut summary = Table::new(
        "simulate_summary",
        &["N", "m", "n", "p", "alpha", "epsilon", "gamma_over_eps_omega3", "gamma_rad_s", "dimension"],
    );
    summary.push(vec![
        cfg.n.into(),
        s.entry.m.into(),
        s.entry.n.into(),
        s.entry.p.into(),
        alpha.into(),
        eps.into(),
        (s.gamma / eps).into(),
        (s.gamma * omega3).into(),
        s.basis.dimension().into(),
    ]);
    sink.emit(&summary)?;

    let span = cfg.duration * 2.0 * PI / SQRT_2;
    let times: Vec<f64> = (0..cfg.samples).map(|k| span * k as f64 / (cfg.samples - 1) as f64).collect();

    let runs: &[(&str, bool)] = match mode {
        SimMode::Rwa => &[("rwa", false)],
        SimMode::Full => &[("full", true)],
        SimMode::Both => &[("rwa", false), ("full", true)],
    };
    for &(label, full) in runs {
        let h = if full {
            build_free_hamiltonian(&s.basis, &s.modes)?
                .plus(&build_full_interaction(&s.basis, &s.modes, &s.tensors, s.eps)?)?
        } else {
            build_rwa_interaction(&s.basis, &s.modes, &s.tensors, s.eps, &RwaSelection::Resonance(s.entry.clone()))?
        };
        let t = trace(&format!("simulate_{label}"), &h, &initial, &times, &s, states, &partition)?;
        sink.emit(&t)?;
    }

    if let (Initial::Named(name), Some(_)) = (&cfg.initial, states) {
        let init = named_amplitudes(name)?;
        let mut t = Table::new("simulate_closed_form", &["t_gamma", "psi2", "phi2", "chi2"]);
        for &tg in &times {
            let (a, b, c) = three_state_solution(init.0, init.1, init.2, 1.0, tg);
            t.push(vec![tg.into(), a.norm_sqr().into(), b.norm_sqr().into(), c.norm_sqr().into()]);
        }
        sink.emit(&t)?;
    }
    Ok(())
}

fn named_amplitudes(name: &str) -> Result<(C64, C64, C64)> {
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    match name.to_ascii_lowercase().as_str() {
        "psi" => Ok((one, zero, zero)),
        "phi" => Ok((zero, one, zero)),
        "chi" => Ok((zero, zero, one)),
        other => Err(UsageError(format!("initial state must be psi, phi, chi or occupations, got '{other}'")).into()),
    }
}

fn initial_state(initial: &Initial, s: &SimSetup) -> Result<QuantumState> {
    match initial {
        Initial::Named(name) => {
            named_amplitudes(name)?;
            let idx = down_conversion_states(&s.basis, &s.entry)?;
            let i = match name.to_ascii_lowercase().as_str() {
                "psi" => idx.psi,
                "phi" => idx.phi,
                _ => idx.chi,
            };
            let occ = s.basis.occupations(i);
            let pairs: Vec<(ActiveMode, usize)> = s.basis.modes.iter().copied().zip(occ).collect();
            Ok(s.basis.number_state(&pairs)?)
        }
        Initial::Occupations(map) => {
            let mut pairs = Vec::new();
            for (label, &n) in map {
                let m = label.parse::<ActiveMode>().map_err(|e| UsageError(e.to_string()))?;
                pairs.push((m, n));
            }
            Ok(s.basis.number_state(&pairs)?)
        }
    }
}

fn trace(
    name: &str,
    h: &HamiltonianMatrix,
    initial: &QuantumState,
    times: &[f64],
    s: &SimSetup,
    states: Option<ionchain::quantum::DownConversionStates>,
    partition: &[ActiveMode],
) -> Result<Table> {
    let prop = Propagator::new(h);
    let mut t = Table::new(name, &["t_gamma", "psi2", "phi2", "chi2", "norm", "entropy"]);
    for &tg in times {
        let state = prop.evolve(initial, tg / s.gamma)?;
        let pops = match states {
            Some(idx) => idx.as_array().map(|i| state.population(i)),
            None => [f64::NAN; 3],
        };
        let entropy = if partition.is_empty() {
            f64::NAN
        } else {
            entanglement_entropy(&state, &s.basis, partition)?
        };
        t.push(vec![tg.into(), pops[0].into(), pops[1].into(), pops[2].into(), state.norm().into(), entropy.into()]);
    }
    Ok(t)
}

#[derive(Args, Debug, Serialize)]
pub struct ClassicalArgs {
    /// TOML run configuration
    #[arg(long)]
    pub config: PathBuf,
}

pub fn classical(args: &ClassicalArgs, sink: &Sink) -> Result<()> {
    let cfg: ClassicalConfig = config::load(&args.config)?;
    let settings = IntegrationSettings::new(cfg.dt, cfg.duration, cfg.stride)?;
    let chain = solve_equilibrium(cfg.n)?;
    let probe = diagonalize(&build_a(&chain.u), cfg.alpha, 1.0)?;
    let mut kicks = Vec::new();
    for e in &cfg.excite {
        let mode = e.mode.parse::<ActiveMode>().map_err(|err| UsageError(err.to_string()))?;
        kicks.push(ModeExcitation { mode, displacement: e.displacement, velocity: e.velocity });
    }
    for m in modes_from_labels(&cfg.seed)? {
        kicks.push(ModeExcitation::displaced(m, TRANSVERSE_SEED));
    }
    let group = modes_from_labels(&cfg.group)?;

    let traj = integrate(&chain, &probe, &kicks, &settings)?;
    let series = mode_projection(&traj, &probe)?;

    let labels: Vec<String> = series.iter().map(|m| format!("E_{}", m.mode)).collect();
    let mut cols = vec!["t"];
    cols.extend(labels.iter().map(String::as_str));
    cols.extend(["total_energy", "drift"]);
    let mut energies = Table::new("classical_energies", &cols);
    let e0 = traj.total_energy[0];
    for k in 0..traj.len() {
        let mut row: Vec<Cell> = vec![traj.times[k].into()];
        row.extend(series.iter().map(|m| Cell::from(m.energy[k])));
        row.push(traj.total_energy[k].into());
        row.push(((traj.total_energy[k] - e0) / e0).into());
        energies.push(row);
    }
    sink.emit(&energies)?;

    let mut spectra = Table::new("classical_spectrum", &["mode", "peak_omega", "expected_omega", "relative_error"]);
    for m in series.iter().filter(|m| kicks.iter().any(|k| k.mode == m.mode)) {
        let peaks = spectrum(&m.coordinate, settings.sample_spacing())?;
        let Some(peak) = peaks.first() else { continue };
        let p = m.mode.mode - 1;
        let expected = if m.mode.direction.is_axial() { probe.mu[p] } else { probe.gamma[p] }.sqrt();
        spectra.push(vec![
            m.mode.to_string().into(),
            peak.angular_frequency.into(),
            expected.into(),
            (peak.angular_frequency / expected - 1.0).into(),
        ]);
    }
    sink.emit(&spectra)?;

    let mut drift = Table::new("classical_drift", &["relative_energy_drift"]);
    drift.push(vec![traj.relative_energy_drift().into()]);
    sink.emit(&drift)?;

    if !group.is_empty() {
        let reference = energy_gain(&series, &group)?;
        let mut transfer = Table::new("classical_transfer", &["alpha", "gain", "reference_over_gain"]);
        transfer.push(vec![cfg.alpha.into(), reference.into(), 1.0.into()]);
        for &alpha in &cfg.compare_alpha {
            let basis = probe.with_alpha(alpha)?;
            let t = integrate(&chain, &basis, &kicks, &settings)?;
            let g = energy_gain(&mode_projection(&t, &basis)?, &group)?;
            transfer.push(vec![alpha.into(), g.into(), (reference / g).into()]);
        }
        sink.emit(&transfer)?;
    }
    Ok(())
}
