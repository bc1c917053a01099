use num_complex::Complex64;
use pahs_core::entanglement::{
    beamsplitter_with_convention, beamsplitter_with_vacuum, concurrence_potential,
    purity_closed_form_pahs, reduced_purity, reduced_purity_a, SplitterConvention,
};
use pahs_core::states::{fock, pahs};
use pahs_core::wigner::{
    estimate_log_negativity, integrate_abs_phase_space, wigner_integral, wigner_oracle_point,
    QuadratureSpec, WignerKernel,
};
use pahs_core::{FockState, HypergeometricParams};
use proptest::prelude::*;

fn state_strategy(max_dim: usize) -> impl Strategy<Value = FockState> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_dim).prop_filter_map(
        "zero vector",
        |raw| {
            FockState::normalize(
                raw.into_iter()
                    .map(|(re, im)| Complex64::new(re, im))
                    .collect(),
            )
            .ok()
        },
    )
}

fn rotated(s: &FockState, theta: f64) -> FockState {
    FockState::normalize(
        s.amplitudes()
            .iter()
            .enumerate()
            .map(|(n, c)| c * Complex64::from_polar(1.0, theta * n as f64))
            .collect(),
    )
    .unwrap()
}

fn pinned_concurrence(m: usize, eta: f64, k: usize) -> f64 {
    concurrence_potential(&pahs(&HypergeometricParams::pinned(2.0, m, eta, k).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn closed_form_wigner_matches_wavefunction_integral(
        s in state_strategy(10),
        x in -3.0f64..3.0,
        p in -3.0f64..3.0,
    ) {
        let closed = WignerKernel::new(&s).value(x, p);
        let oracle = wigner_oracle_point(&s, x, p).unwrap();
        prop_assert!((closed - oracle).abs() < 1e-6, "closed {closed} oracle {oracle}");
    }

    #[test]
    fn wigner_is_real(s in state_strategy(12), x in -4.0f64..4.0, p in -4.0f64..4.0) {
        let w = WignerKernel::new(&s).value_complex(x, p);
        prop_assert!(w.im.abs() < 1e-10);
        prop_assert!((w.re - WignerKernel::new(&s).value(x, p)).abs() < 1e-12);
    }

    #[test]
    fn beamsplitter_preserves_norm_and_photon_number(s in state_strategy(12)) {
        let t = beamsplitter_with_vacuum(&s);
        prop_assert!((t.norm_sqr() - 1.0).abs() < 1e-12);
        let pnd = s.photon_number_distribution();
        for j in 0..t.dim() {
            for l in 0..t.dim() {
                if pnd.get(j + l).copied().unwrap_or(0.0) == 0.0 {
                    prop_assert_eq!(t.amplitude(j, l), Complex64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn purity_independent_of_traced_mode_and_convention(s in state_strategy(12)) {
        let t = beamsplitter_with_vacuum(&s);
        let real = beamsplitter_with_convention(&s, SplitterConvention::Real);
        let purity = reduced_purity(&t);
        prop_assert!((purity - reduced_purity_a(&t)).abs() < 1e-12);
        prop_assert!((purity - reduced_purity(&real)).abs() < 1e-12);
        prop_assert!(purity > 0.0 && purity <= 1.0 + 1e-12);
    }

    #[test]
    fn purity_closed_form_matches_dense_path(
        c in 1.0f64..4.0,
        m in 0usize..=6,
        eta in 0.05f64..0.95,
        k in 0usize..=3,
    ) {
        let p = HypergeometricParams::pinned(c, m, eta, k).unwrap();
        let dense = reduced_purity(&beamsplitter_with_vacuum(&pahs(&p).unwrap()));
        let closed = purity_closed_form_pahs(&p).unwrap();
        prop_assert!(((closed - dense) / dense).abs() < 1e-10, "closed {closed} dense {dense}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn wigner_integrates_to_one(s in state_strategy(12)) {
        let total = wigner_integral(&s, &QuadratureSpec::default()).unwrap();
        prop_assert!((total - 1.0).abs() < 1e-6, "integral {total}");
    }

    #[test]
    fn log_negativity_is_nonnegative_and_rotation_invariant(
        s in state_strategy(8),
        theta in 0.0f64..std::f64::consts::TAU,
    ) {
        let spec = QuadratureSpec::default();
        let wln = estimate_log_negativity(&s, &spec).unwrap();
        prop_assert!(wln.value >= -1e-6);
        let turned = estimate_log_negativity(&rotated(&s, theta), &spec).unwrap();
        prop_assert!((wln.value - turned.value).abs() < spec.tolerance, "{} vs {}, delta {}", wln.value, turned.value, wln.delta);
    }
}

#[test]
fn single_photon_log_negativity_by_two_paths() {
    let one = fock(1, 2).unwrap();
    let analytic = (4.0 * (-0.5f64).exp() - 1.0).ln();

    let closed = estimate_log_negativity(&one, &QuadratureSpec::default())
        .unwrap()
        .value;
    let spec = QuadratureSpec {
        nodes: 32,
        ..QuadratureSpec::default()
    };
    let oracle = integrate_abs_phase_space(
        |x, p| wigner_oracle_point(&one, x, p).unwrap(),
        spec.radius_for(&one),
        spec.nodes,
    )
    .ln();

    assert!(
        (closed - analytic).abs() < 1e-9,
        "closed {closed} analytic {analytic}"
    );
    assert!(
        (closed - oracle).abs() < 1e-5,
        "closed {closed} oracle {oracle}"
    );
}

#[test]
fn concurrence_slope_jumps_at_balanced_splitting() {
    let (m, k, h) = (5, 1, 1e-3);
    let c = |eta: f64| pinned_concurrence(m, eta, k);
    let centre = c(0.5);
    let left = |h: f64| (centre - c(0.5 - h)) / h;
    let right = |h: f64| (c(0.5 + h) - centre) / h;
    let noise = (left(h) - left(2.0 * h)).abs() + (right(h) - right(2.0 * h)).abs();
    let jump = (right(h) - left(h)).abs();
    assert!(jump > 10.0 * noise, "jump {jump} noise {noise}");
}

#[test]
fn concurrence_falls_with_eta_near_zero_for_many_added_photons() {
    let values: Vec<f64> = [0.01, 0.02, 0.03, 0.04, 0.05]
        .iter()
        .map(|&eta| pinned_concurrence(5, eta, 4))
        .collect();
    assert!(values.windows(2).all(|w| w[1] <= w[0]), "{values:?}");
}
