//! Stark resonance suite: pinned complex eigenvalues across the parameter
//! range, continuation back to the zero-field bound level, monotonicity of
//! the ionization rate, the closed-form weak-field asymptotics, and the
//! contracted error behaviour of the outgoing-wave determinant.

use confined_atom::{
    asymptotic_ionization_rate, asymptotic_stark_shift, determinant, dipole_coefficient,
    scaled_variable, solve_bound_state, solve_resonance, stark_shift_exact, weak_field_limit,
    AtomConfig, Error, DEFAULT_ROOT_TOL,
};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Complex resonance eigenvalues computed independently at high precision.
const RESONANCE_REFERENCE: [(f64, f64, f64, f64, f64); 4] = [
    (
        1.0,
        20.0,
        0.1,
        -0.507_201_848_318_653_936_27,
        -0.000_510_144_932_436_971_451,
    ),
    (
        1.0,
        20.0,
        0.08,
        -0.504_405_406_241_080_876_53,
        -0.000_101_909_222_175_989_50,
    ),
    (
        2.0,
        5.0,
        0.5,
        -2.010_313_418_481_051_473_9,
        -0.000_041_330_364_975_720_327,
    ),
    (
        0.5,
        8.0,
        0.015,
        -0.127_645_100_226_310_255_49,
        -0.000_367_047_848_694_243_83,
    ),
];

#[test]
fn eigenvalues_match_high_precision_references() {
    for &(z, a, f, re, im) in &RESONANCE_REFERENCE {
        let cfg = AtomConfig::new(z, a).unwrap();
        let reference = c(re, im);
        let res = solve_resonance(&cfg, f, None, 1e-13).unwrap();
        assert!(res.converged, "(Z={z}, a={a}, F={f}) did not converge");
        let err = (res.energy - reference).norm();
        assert!(
            err < 2e-11 * (1.0 + reference.norm()),
            "(Z={z}, a={a}, F={f}): ε = {}, want {reference}, err {err:.2e}",
            res.energy
        );
        assert!(res.gamma > 0.0, "decaying state must have Γ > 0");
        let det = determinant(res.energy, &cfg, f).unwrap();
        assert!(det.norm() < 1e-9, "|det| at root = {:.2e}", det.norm());
    }
}

#[test]
fn weakening_the_field_walks_the_root_back_to_the_bound_level() {
    let cfg = AtomConfig::new(1.0, 20.0).unwrap();
    let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
    let mut guess = None;
    let mut last_gap = f64::INFINITY;
    let mut last_gamma = f64::INFINITY;
    for &f in &[0.1, 0.05, 0.02, 0.01] {
        let res = solve_resonance(&cfg, f, guess, 1e-13).unwrap();
        assert!(res.converged, "F={f}");
        let gap = (res.energy.re - bs.energy()).abs();
        assert!(
            gap < last_gap,
            "F={f}: shift magnitude must shrink with the field"
        );
        assert!(
            res.gamma < last_gamma,
            "F={f}: Γ must shrink with the field"
        );
        last_gap = gap;
        last_gamma = res.gamma;
        guess = Some(res.energy);
    }
    assert!(last_gap < 1e-4, "residual shift {last_gap:.2e} at F = 0.01");
}

#[test]
fn ionization_rate_grows_monotonically_with_the_field() {
    let cfg = AtomConfig::new(1.0, 20.0).unwrap();
    let mut last = 0.0;
    for &f in &[0.06, 0.08, 0.1, 0.125] {
        let res = solve_resonance(&cfg, f, None, 1e-13).unwrap();
        assert!(res.converged, "F={f}");
        assert!(
            res.gamma > last,
            "Γ({f}) = {} did not grow past {last}",
            res.gamma
        );
        last = res.gamma;
    }
}

#[test]
fn near_wall_shift_is_dominated_by_the_permanent_dipole() {
    // With the wall close by, the orbital's static asymmetry produces a
    // first-order shift −F⟨x⟩₀ that dwarfs the quadratic polarizability
    // term; the exact eigenvalue must agree with their sum.
    let cfg = AtomConfig::new(2.0, 0.4).unwrap();
    let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
    let f = 0.01;
    let res = solve_resonance(&cfg, f, None, 1e-13).unwrap();
    assert!(res.converged);
    let first_order = -dipole_coefficient(&bs, &cfg, f);
    let second_order = stark_shift_exact(&bs, &cfg, f);
    assert!(
        first_order.abs() > 100.0 * second_order.abs(),
        "dipole term {first_order} should dominate {second_order}"
    );
    let expected = first_order + second_order;
    let rel = (res.stark_shift - expected).abs() / expected.abs();
    assert!(
        rel < 1e-2,
        "shift {} vs perturbative {expected}, rel {rel:.2e}",
        res.stark_shift
    );
    // Tunnelling through a 141-unit exponent: no measurable width here.
    assert!(res.gamma.abs() < 1e-12, "Γ = {}", res.gamma);
}

#[test]
fn closed_form_asymptotics_evaluate_to_their_frozen_values() {
    let cfg = AtomConfig::isolated(1.0).unwrap();
    let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();

    let shift = asymptotic_stark_shift(&bs, 0.1);
    assert!((shift + 0.00625).abs() < 1e-16, "shift {shift}");

    // Γ_asym(k=1, F=0.1) = e^{-20/3}.
    let rate = asymptotic_ionization_rate(&bs, &cfg, 0.1);
    assert!(
        (rate - 1.272_633_801_339_808_32e-3).abs() < 1e-15,
        "rate {rate}"
    );
    assert_eq!(asymptotic_ionization_rate(&bs, &cfg, 0.0), 0.0);

    // The rate is exponentially steep in 1/F …
    let quadrupled = asymptotic_ionization_rate(&bs, &cfg, 0.4);
    let expected_ratio = (2.0 / 3.0 * (1.0 / 0.1 - 1.0 / 0.4_f64)).exp();
    assert!(
        (quadrupled / rate - expected_ratio).abs() < 1e-10 * expected_ratio,
        "ratio {} vs {expected_ratio}",
        quadrupled / rate
    );

    // … and in the binding: doubling Z multiplies the exponent by 8.
    let cfg2 = AtomConfig::isolated(2.0).unwrap();
    let bs2 = solve_bound_state(&cfg2, DEFAULT_ROOT_TOL).unwrap();
    let deep = asymptotic_ionization_rate(&bs2, &cfg2, 0.1);
    assert!(deep < rate * 1e-19, "deep rate {deep} vs shallow {rate}");
}

#[test]
fn warm_start_converges_from_a_perturbed_guess() {
    let (z, a, f, re, im) = RESONANCE_REFERENCE[3];
    let cfg = AtomConfig::new(z, a).unwrap();
    let reference = c(re, im);
    let res = solve_resonance(&cfg, f, Some(reference + c(1e-3, 5e-4)), 1e-13).unwrap();
    assert!(res.converged);
    assert!(
        res.iterations < 40,
        "warm start took {} iterations",
        res.iterations
    );
    assert!((res.energy - reference).norm() < 1e-11);
}

#[test]
fn determinant_is_small_only_at_the_eigenvalue() {
    // Argument-principle-lite: on a small circle around the root the
    // determinant stays orders of magnitude above its value at the centre.
    let (z, a, f, re, im) = RESONANCE_REFERENCE[0];
    let cfg = AtomConfig::new(z, a).unwrap();
    let root = c(re, im);
    let at_root = determinant(root, &cfg, f).unwrap().norm();
    let mut min_on_circle = f64::INFINITY;
    for i in 0..16 {
        let theta = 2.0 * std::f64::consts::PI * f64::from(i) / 16.0;
        let zc = root + 1e-3 * c(theta.cos(), theta.sin());
        min_on_circle = min_on_circle.min(determinant(zc, &cfg, f).unwrap().norm());
    }
    assert!(
        min_on_circle > 1e3 * at_root.max(1e-15),
        "circle minimum {min_on_circle:.2e} vs root {at_root:.2e}"
    );
}

#[test]
fn domain_errors_are_contracted() {
    let confined = AtomConfig::new(1.0, 20.0).unwrap();
    let isolated = AtomConfig::isolated(1.0).unwrap();
    let unbound = AtomConfig::new(1.0, 0.4).unwrap();
    let e = c(-0.5, 0.0);

    assert!(matches!(
        determinant(e, &isolated, 0.1).unwrap_err(),
        Error::InvalidConfig(_)
    ));
    assert_eq!(
        determinant(e, &unbound, 0.1).unwrap_err(),
        Error::NoBoundState
    );
    assert_eq!(
        determinant(e, &confined, 0.0).unwrap_err(),
        Error::StaticFieldScalingUndefined
    );
    assert_eq!(
        determinant(e, &confined, -0.1).unwrap_err(),
        Error::StaticFieldScalingUndefined
    );
    assert_eq!(
        scaled_variable(1.0, e, 0.0).unwrap_err(),
        Error::StaticFieldScalingUndefined
    );
    assert!(matches!(
        solve_resonance(&confined, 0.1, None, 0.0).unwrap_err(),
        Error::InvalidConfig(_)
    ));
    assert_eq!(
        solve_resonance(&unbound, 0.1, None, 1e-12).unwrap_err(),
        Error::NoBoundState
    );
}

#[test]
fn weak_field_guard_tracks_the_binding() {
    let shallow = solve_bound_state(&AtomConfig::isolated(0.5).unwrap(), DEFAULT_ROOT_TOL).unwrap();
    let deep = solve_bound_state(&AtomConfig::isolated(2.0).unwrap(), DEFAULT_ROOT_TOL).unwrap();
    assert!((weak_field_limit(&shallow) - 0.3 * 0.125).abs() < 1e-15);
    assert!((weak_field_limit(&deep) - 0.3 * 8.0).abs() < 1e-14);
    assert!(weak_field_limit(&deep) > weak_field_limit(&shallow));
}
