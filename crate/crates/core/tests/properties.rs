//! Randomised invariants of the tensor, kinematics and measure layers.

use std::f64::consts::PI;

use bispinor::kinematics::{
    bispinor_boost, bispinor_u, boost_four_vector, gamma5, BoostSpec, FourMomentum, Helicity,
};
use bispinor::measures::{
    bloch_vector, global_entanglement, global_from_bloch, linear_entropy, negativity,
    spin_spin_reduced,
};
use bispinor::states::{boost_two_particle, make_psi1, make_psi2, make_psi3, nu_squared_form};
use bispinor::tensor::{
    hermitian_eigenvalues, partial_trace, partial_transpose, Complex64, ComplexMatrix,
    ComplexVector, Subsystem, SubsystemLayout,
};
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn pure_state(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec(complex(), dim)
        .prop_filter_map("nonzero", |v| {
            ComplexVector::new(v).ok()?.normalized().ok()
        })
        .prop_map(|v| v.projector())
}

/// A random rank ≤ 3 mixed state.
fn mixed_state(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    (proptest::collection::vec(pure_state(dim), 1..=3), proptest::collection::vec(0.05f64..1.0, 3))
        .prop_map(move |(states, weights)| {
            let total: f64 = weights[..states.len()].iter().sum();
            states
                .iter()
                .zip(&weights)
                .fold(ComplexMatrix::zeros(dim, dim), |acc, (s, w)| &acc + &s.scale_real(w / total))
        })
}

fn direction() -> impl Strategy<Value = [f64; 3]> {
    (-1.0f64..=1.0, 0.0..2.0 * PI).prop_map(|(z, phi)| {
        let r = (1.0 - z * z).max(0.0).sqrt();
        [r * phi.cos(), r * phi.sin(), z]
    })
}

fn boost() -> impl Strategy<Value = BoostSpec> {
    (-4.0f64..4.0, direction()).prop_map(|(w, n)| BoostSpec::along(w, n).unwrap())
}

fn momentum() -> impl Strategy<Value = FourMomentum> {
    (0.3f64..3.0, 0.0f64..3.0, direction())
        .prop_map(|(m, w, n)| FourMomentum::from_rapidity(m, w, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_trace_preserves_trace_and_hermiticity(rho in mixed_state(16)) {
        let layout = SubsystemLayout::two_particle();
        for keep in [&[Subsystem::SpinA][..], &[Subsystem::ParityA, Subsystem::SpinB][..], &[][..]] {
            let r = partial_trace(&rho, &layout, keep).unwrap();
            prop_assert!((r.trace() - rho.trace()).norm() < 1e-12);
            prop_assert!(r.hermiticity_error() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_composes(rho in mixed_state(16)) {
        let layout = SubsystemLayout::two_particle();
        let ss = partial_trace(&rho, &layout, &[Subsystem::SpinA, Subsystem::SpinB]).unwrap();
        let direct = partial_trace(&rho, &layout, &[Subsystem::SpinA]).unwrap();
        let nested = partial_trace(&ss, &SubsystemLayout::spin_spin(), &[Subsystem::SpinA]).unwrap();
        prop_assert!(direct.max_abs_diff(&nested) < 1e-12);
    }

    #[test]
    fn partial_transpose_is_an_involution_preserving_trace(rho in mixed_state(4)) {
        let layout = SubsystemLayout::spin_spin();
        let once = partial_transpose(&rho, &layout, Subsystem::SpinA).unwrap();
        let twice = partial_transpose(&once, &layout, Subsystem::SpinA).unwrap();
        prop_assert!(twice.max_abs_diff(&rho) < 1e-15);
        prop_assert!((once.trace() - rho.trace()).norm() < 1e-14);
        // transposing A equals the full transpose of transposing B
        let b = partial_transpose(&rho, &layout, Subsystem::SpinB).unwrap();
        prop_assert!(once.max_abs_diff(&b.transpose()) < 1e-15);
    }

    #[test]
    fn eigenvalues_sum_to_trace(rho in mixed_state(16)) {
        let ev = hermitian_eigenvalues(&rho).unwrap();
        prop_assert!((ev.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        prop_assert!(ev.iter().all(|&l| l > -1e-10));
    }

    #[test]
    fn linear_entropy_is_bloch_deficit_on_qubits(rho in mixed_state(2)) {
        let a = bloch_vector(&rho).unwrap();
        prop_assert!(a.norm_sqr() <= 1.0 + 1e-10);
        prop_assert!((linear_entropy(&rho).unwrap() - (1.0 - a.norm_sqr())).abs() < 1e-12);
    }

    #[test]
    fn global_entanglement_dual_paths_agree(rho in pure_state(16)) {
        let g = global_entanglement(&rho).unwrap();
        prop_assert!((0.0..=1.0).contains(&g.value));
        prop_assert!((g.value - global_from_bloch(g.bloch.values())).abs() < 1e-12);
    }

    #[test]
    fn negativity_is_in_unit_range(rho in mixed_state(4)) {
        let n = negativity(&rho).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&n));
    }

    #[test]
    fn product_states_have_zero_negativity(a in pure_state(2), b in pure_state(2)) {
        prop_assert!(negativity(&a.kron(&b)).unwrap() < 1e-12);
    }

    #[test]
    fn boost_commutes_with_gamma5_and_inverts(b in boost()) {
        let s = bispinor_boost(&b);
        prop_assert!(gamma5().commutator(&s).max_abs() < 1e-14);
        let id = s.matmul(&bispinor_boost(&b.inverse()));
        prop_assert!(id.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-12);
        prop_assert!(s.hermiticity_error() < 1e-15);
    }

    #[test]
    fn boosted_bispinor_is_bispinor_at_boosted_momentum(k in momentum(), b in boost(), positive in any::<bool>()) {
        // Ŝ u_s(k) is proportional to some positive-energy bispinor at Λk:
        // it lies in the span of u₁(Λk), u₂(Λk).
        let s = if positive { Helicity::Positive } else { Helicity::Negative };
        let moved = bispinor_boost(&b).mul_vec(&bispinor_u(&k, s).amplitudes).normalized().unwrap();
        let k2 = boost_four_vector(&k, &b).unwrap();
        let weight: f64 = [Helicity::Positive, Helicity::Negative]
            .iter()
            .map(|&h| bispinor_u(&k2, h).amplitudes.inner(&moved).norm_sqr())
            .sum();
        prop_assert!((weight - 1.0).abs() < 1e-10, "weight {}", weight);
    }

    #[test]
    fn boost_preserves_minkowski_norm(k in momentum(), b in boost()) {
        let k2 = boost_four_vector(&k, &b).unwrap();
        prop_assert!((k2.minkowski_norm() - k.mass() * k.mass()).abs() < 1e-10 * k.mass() * k.mass());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scenario_boosts_keep_states_pure_and_normalised(
        w0 in 0.0f64..2.0, w in 0.0f64..5.0, theta in 0.0f64..PI, which in 0usize..3,
    ) {
        let st = [make_psi1, make_psi2, make_psi3][which](w0, 1.0).unwrap();
        let rho = st.density_matrix().unwrap();
        let b = BoostSpec::in_xz_plane(w, theta).unwrap();
        let boosted = boost_two_particle(&rho, &b).unwrap();
        prop_assert!((boosted.rho.trace().re - 1.0).abs() < 1e-12);
        prop_assert!((boosted.rho.purity() - 1.0).abs() < 1e-10);
        prop_assert!(((nu_squared_form(&rho, &b) - boosted.nu) / boosted.nu).abs() < 1e-10);
        let g = global_entanglement(&boosted.rho).unwrap();
        prop_assert!((0.0..=1.0).contains(&g.value));
        let n = negativity(&spin_spin_reduced(&boosted.rho).unwrap()).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&n));
    }

    #[test]
    fn psi1_never_gains_spin_spin_entanglement(w in 0.0f64..6.0, theta in 0.0f64..PI) {
        let rho = make_psi1(1.0, 1.0).unwrap().density_matrix().unwrap();
        let b = BoostSpec::in_xz_plane(w, theta).unwrap();
        let boosted = boost_two_particle(&rho, &b).unwrap();
        prop_assert!(negativity(&spin_spin_reduced(&boosted.rho).unwrap()).unwrap().abs() < 1e-10);
    }
}
