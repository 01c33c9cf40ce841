//! Bound-state regression suite: pinned eigenvalues across the parameter
//! range, existence threshold behaviour, wavefunction normalisation,
//! continuity, and the derivative jump enforced by the contact potential.

use confined_atom::{
    integrate_adaptive, solve_bound_state, supports_bound_state, wavefunction, AtomConfig, Error,
    DEFAULT_ROOT_TOL,
};
use proptest::prelude::*;

/// Reference eigenvalues computed independently at high precision.
const KB_REFERENCE: [(f64, f64, f64); 7] = [
    (0.25, 10.0, 0.248_255_711_587_213_815_18),
    (1.0, 3.0, 0.997_483_537_733_765_737_54),
    (2.0, 0.4, 1.283_962_634_683_399_657_5),
    (10.0, 0.2, 9.801_725_987_182_215_858_9),
    (0.7, 5.0, 0.699_357_568_672_815_486_41),
    (0.5, 8.0, 0.499_831_816_724_594_313),
    (1.0, 20.0, 1.0 - 4.25e-18),
];

#[test]
fn eigenvalues_match_high_precision_references() {
    for &(z, a, kb) in &KB_REFERENCE {
        let cfg = AtomConfig::new(z, a).unwrap();
        let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
        let rel = (bs.k_b() - kb).abs() / kb;
        assert!(
            rel < 1e-13,
            "(Z={z}, a={a}): k_b {} vs {kb}, rel {rel:.2e}",
            bs.k_b()
        );
        assert!(
            (bs.energy() + 0.5 * kb * kb).abs() < 1e-13 * kb * kb,
            "(Z={z}, a={a}): energy {}",
            bs.energy()
        );
    }
}

#[test]
fn existence_threshold_is_sharp() {
    // Exactly at 2Za = 1 the level merges with the continuum: no bound state.
    let at = AtomConfig::new(1.0, 0.5).unwrap();
    assert!(!supports_bound_state(&at));
    assert_eq!(
        solve_bound_state(&at, DEFAULT_ROOT_TOL).unwrap_err(),
        Error::NoBoundState
    );

    // Just above threshold the level exists and is shallow.
    let above = AtomConfig::new(1.0, 0.5 + 1e-6).unwrap();
    assert!(supports_bound_state(&above));
    let bs = solve_bound_state(&above, DEFAULT_ROOT_TOL).unwrap();
    assert!(
        bs.k_b() > 0.0 && bs.k_b() < 1e-2,
        "shallow k_b {}",
        bs.k_b()
    );

    // Just below threshold there is nothing to find.
    let below = AtomConfig::new(1.0, 0.5 - 1e-6).unwrap();
    assert!(!supports_bound_state(&below));
}

#[test]
fn isolated_atom_recovers_textbook_level() {
    let cfg = AtomConfig::isolated(1.5).unwrap();
    let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
    assert_eq!(bs.k_b(), 1.5);
    assert!((bs.energy() + 1.125).abs() < 1e-15);
    // u(x) = √Z e^{-Z|x|} at the origin.
    let u0 = wavefunction(&bs, &cfg, 0.0);
    assert!((u0 - 1.5_f64.sqrt()).abs() < 1e-14, "u(0) = {u0}");
}

#[test]
fn wavefunction_is_normalised_and_vanishes_at_the_wall() {
    for &(z, a) in &[(0.25, 10.0), (1.0, 3.0), (2.0, 0.4), (0.7, 5.0)] {
        let cfg = AtomConfig::new(z, a).unwrap();
        let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(
            wavefunction(&bs, &cfg, -a),
            0.0,
            "wall value (Z={z}, a={a})"
        );
        // Dirichlet side plus the exponential tail integrate to unit
        // probability.
        let density = |x: f64| {
            let u = wavefunction(&bs, &cfg, x);
            u * u
        };
        let norm = integrate_adaptive(&density, -a, f64::INFINITY, 1e-11).unwrap();
        assert!((norm - 1.0).abs() < 1e-9, "norm (Z={z}, a={a}) = {norm}");
    }
}

#[test]
fn wavefunction_is_continuous_with_the_contracted_derivative_jump() {
    let cfg = AtomConfig::new(0.8, 4.0).unwrap();
    let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();

    // Continuity across the contact potential.
    let h = 1e-7;
    let left = wavefunction(&bs, &cfg, -h);
    let right = wavefunction(&bs, &cfg, h);
    assert!(
        (left - right).abs() < 1e-6,
        "kink mismatch {left} vs {right}"
    );

    // u'(0+) − u'(0−) = −2Z u(0), probed with one-sided differences well
    // inside each smooth branch.
    let d = 1e-6;
    let dr = (wavefunction(&bs, &cfg, 2.0 * d) - wavefunction(&bs, &cfg, d)) / d;
    let dl = (wavefunction(&bs, &cfg, -d) - wavefunction(&bs, &cfg, -2.0 * d)) / d;
    let jump = dr - dl;
    let expected = -2.0 * cfg.z() * wavefunction(&bs, &cfg, 0.0);
    assert!(
        (jump - expected).abs() < 1e-4 * expected.abs(),
        "jump {jump} vs {expected}"
    );
}

#[test]
fn wavefunction_decays_exponentially_into_the_free_side() {
    let cfg = AtomConfig::new(1.0, 3.0).unwrap();
    let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
    let k = bs.k_b();
    let amplitude = bs.norm_a() * (1.0 - (-2.0 * k * 3.0).exp());
    for &x in &[2.0, 5.0, 10.0, 40.0, 200.0] {
        let u = wavefunction(&bs, &cfg, x);
        let envelope = amplitude * (-k * x).exp();
        assert!(
            (u - envelope).abs() <= 1e-12 * envelope,
            "decay at x={x}: {u} vs {envelope}"
        );
    }
    // Far tail underflows gracefully to zero instead of NaN.
    assert_eq!(wavefunction(&bs, &cfg, 1e6), 0.0);
}

proptest! {
    /// Confinement always squeezes the level: 0 < k_b < Z, approaching Z
    /// from below, and the defining relation holds to solver precision.
    #[test]
    fn eigenvalue_lies_between_zero_and_the_isolated_limit(
        z in 0.05..20.0_f64,
        s in 0.55..15.0_f64,
    ) {
        // s = Za parametrises distance from the existence threshold 2Za = 1.
        let a = s / z;
        let cfg = AtomConfig::new(z, a).unwrap();
        let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
        let k = bs.k_b();
        prop_assert!(k > 0.0 && k < z, "k_b {k} outside (0, {z})");
        let residual = k / z - (1.0 - (-2.0 * k * a).exp());
        prop_assert!(residual.abs() < 1e-12, "residual {residual}");
    }

    /// Pushing the wall away strictly deepens the level.
    #[test]
    fn eigenvalue_is_monotone_in_wall_distance(
        z in 0.1..10.0_f64,
        s in 0.6..10.0_f64,
        stretch in 1.05..3.0_f64,
    ) {
        let a = s / z;
        let near = solve_bound_state(&AtomConfig::new(z, a).unwrap(), DEFAULT_ROOT_TOL).unwrap();
        let far = solve_bound_state(
            &AtomConfig::new(z, a * stretch).unwrap(),
            DEFAULT_ROOT_TOL,
        )
        .unwrap();
        prop_assert!(
            far.k_b() >= near.k_b(),
            "k_b fell from {} to {} when a grew",
            near.k_b(),
            far.k_b()
        );
    }
}
