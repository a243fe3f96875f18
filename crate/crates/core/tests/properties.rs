use approx::assert_relative_eq;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use proptest::prelude::*;

use ionchain::classical::accelerations;
use ionchain::coupling::check_identities;
use ionchain::equilibrium::{equilibrium_residual, solve_equilibrium};
use ionchain::modes::{build_a, diagonalize};
use ionchain::quantum::{
    three_state_solution, ActiveMode, Direction, Flavor, FockBasis, HamiltonianMatrix, Propagator,
    QuantumState,
};
use ionchain::resonance::{candidate_alpha, delta, DeltaSign};
use ionchain::CouplingTensors;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn candidate_alpha_symmetric(a in 1.0f64..40.0, b in 1.0f64..40.0, p in 1.0f64..40.0) {
        prop_assert_eq!(candidate_alpha(a, b, p), candidate_alpha(b, a, p));
    }

    #[test]
    fn candidate_alpha_zeroes_a_delta(a in 3.0f64..30.0, b in 3.0f64..30.0, p in 3.0f64..30.0) {
        // Wherever the closed form yields a usable α, one of Δ± vanishes there.
        if let Some(alpha) = candidate_alpha(a, b, p) {
            let gamma_ok = [a, b].iter().all(|&m| 1.0 / alpha + 0.5 - m / 2.0 > 0.0);
            if gamma_ok {
                let plus = delta(a, b, p, alpha, DeltaSign::Plus).unwrap().abs();
                let minus = delta(a, b, p, alpha, DeltaSign::Minus).unwrap().abs();
                let swapped = delta(b, a, p, alpha, DeltaSign::Minus).unwrap().abs();
                prop_assert!(plus.min(minus).min(swapped) < 1e-8);
            }
        }
    }

    #[test]
    fn three_state_solution_is_unitary(
        v in prop::array::uniform6(-1.0f64..1.0),
        gamma in 0.01f64..5.0,
        t in 0.0f64..50.0,
    ) {
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        let (a, b, cc) = (c(v[0], v[1]) / norm, c(v[2], v[3]) / norm, c(v[4], v[5]) / norm);
        let (x, y, z) = three_state_solution(a, b, cc, gamma, t);
        assert_relative_eq!(x.norm_sqr() + y.norm_sqr() + z.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn propagation_preserves_norm(entries in prop::collection::vec(-2.0f64..2.0, 32), tau in 0.0f64..100.0) {
        let m = DMatrix::from_fn(4, 4, |i, j| c(entries[4 * i + j], entries[16 + 4 * i + j]));
        let h = HamiltonianMatrix { matrix: &m + m.adjoint(), flavor: Flavor::Total };
        let s0 = QuantumState::new(DVector::from_vec(vec![c(0.5, 0.5), c(0.0, 0.5), c(0.5, 0.0), c(0.0, 0.0)]))
            .unwrap();
        let s = Propagator::new(&h).evolve(&s0, tau).unwrap();
        prop_assert!((s.norm() - 1.0).abs() < 1e-9);
        assert_relative_eq!(s.expectation(&h), s0.expectation(&h), epsilon = 1e-9, max_relative = 1e-9);
    }

    #[test]
    fn fock_index_round_trip(cutoffs in prop::collection::vec(0usize..4, 1..5), seed in any::<u64>()) {
        let modes: Vec<ActiveMode> = (1..=cutoffs.len()).map(|p| ActiveMode::new(Direction::X, p)).collect();
        let b = FockBasis::new(modes, cutoffs).unwrap();
        let i = (seed as usize) % b.dimension();
        prop_assert_eq!(b.index(&b.occupations(i)), Some(i));
    }

    #[test]
    fn trap_force_balances_total_acceleration(
        coords in prop::collection::vec(-3.0f64..3.0, 12),
        alpha in 0.01f64..1.0,
    ) {
        let r: Vec<[f64; 3]> = coords.chunks(3).map(|p| [p[0], p[1], p[2]]).collect();
        prop_assume!((0..4).all(|i| (i + 1..4).all(|j| {
            let d: f64 = (0..3).map(|k| (r[i][k] - r[j][k]).powi(2)).sum();
            d > 1e-2
        })));
        let a = accelerations(&r, alpha).unwrap();
        // Coulomb forces cancel pairwise.
        for k in 0..3 {
            let stiffness = if k == 2 { 1.0 } else { 1.0 / alpha };
            let total: f64 = a.iter().map(|v| v[k]).sum();
            let trap: f64 = r.iter().map(|p| -stiffness * p[k]).sum();
            prop_assert!((total - trap).abs() < 1e-8 * (1.0 + trap.abs()));
        }
    }
}

#[test]
fn chains_to_twelve_ions() {
    for n in 1..=12 {
        let chain = solve_equilibrium(n).unwrap();
        let r = equilibrium_residual(&chain.u).unwrap();
        assert!(r.iter().all(|x| x.abs() < 1e-10));
        if n >= 2 {
            let modes = diagonalize(&build_a(&chain.u), 1e-3, 1.0).unwrap();
            let t = CouplingTensors::new(&chain, &modes);
            assert!(check_identities(&t, &modes, &chain.u).max() < 1e-9);
            assert!(t.d.max_asymmetry() < 1e-10);
            assert_relative_eq!(modes.mu[1], 3.0, epsilon = 1e-10);
        }
    }
}
