use ionchain::classical::{
    integrate, mode_projection, spectrum, IntegrationSettings, ModeExcitation, TRANSVERSE_SEED,
};
use ionchain::equilibrium::solve_equilibrium;
use ionchain::modes::{build_a, diagonalize};
use ionchain::quantum::ActiveMode;
use ionchain::resonance::build_catalog;

fn dominant(series: &[f64], spacing: f64) -> f64 {
    spectrum(series, spacing).unwrap()[0].angular_frequency
}

#[test]
fn three_ion_stretch_frequency() {
    let eq = solve_equilibrium(3).unwrap();
    let basis = diagonalize(&build_a(&eq.u), 0.1, 1.0).unwrap();
    let s = IntegrationSettings::new(2e-3, 200.0, 20).unwrap();
    let t = integrate(&eq, &basis, &[ModeExcitation::displaced(ActiveMode::z(2), 1e-3)], &s).unwrap();
    let z: Vec<f64> = t.positions.iter().map(|r| r[2][2]).collect();
    assert!((dominant(&z, s.sample_spacing()) / 3f64.sqrt() - 1.0).abs() < 1e-3);
}

#[test]
fn six_ion_transverse_mode_five() {
    let eq = solve_equilibrium(6).unwrap();
    let basis = diagonalize(&build_a(&eq.u), 0.09151, 1.0).unwrap();
    let s = IntegrationSettings::new(2e-3, 200.0, 20).unwrap();
    let t = integrate(&eq, &basis, &[ModeExcitation::displaced(ActiveMode::x(5), 1e-3)], &s).unwrap();
    let x: Vec<f64> = t.positions.iter().map(|r| r[5][0]).collect();
    assert!((dominant(&x, s.sample_spacing()) / 4.6709f64.sqrt() - 1.0).abs() < 2e-3);
}

/// Time for the seeded transverse pair to gain `factor` in energy.
fn growth_time(pump: f64, factor: f64) -> f64 {
    let eq = solve_equilibrium(6).unwrap();
    let entry = build_catalog(6).unwrap().find(6, 5, 5).unwrap().clone();
    let basis = diagonalize(&build_a(&eq.u), entry.alpha_res, 1.0).unwrap();
    let group = [ActiveMode::x(5), ActiveMode::x(6)];
    let mut kicks = vec![ModeExcitation::displaced(ActiveMode::z(5), pump)];
    kicks.extend(group.iter().map(|&m| ModeExcitation::displaced(m, TRANSVERSE_SEED)));
    let s = IntegrationSettings::new(1e-3, 1200.0, 50).unwrap();
    let traj = integrate(&eq, &basis, &kicks, &s).unwrap();
    let series = mode_projection(&traj, &basis).unwrap();
    let energy = |k: usize| -> f64 {
        series.iter().filter(|m| group.contains(&m.mode)).map(|m| m.energy[k]).sum()
    };
    let e0 = energy(0);
    let k = (0..traj.len()).find(|&k| energy(k) > factor * e0).expect("transverse modes never grew");
    traj.times[k]
}

#[test]
fn exchange_time_scales_inversely_with_pump() {
    let slow = growth_time(5e-3, 1e4);
    let fast = growth_time(1e-2, 1e4);
    let ratio = slow / fast;
    assert!((ratio - 2.0).abs() < 0.3, "ratio {ratio} ({slow} vs {fast})");
}
