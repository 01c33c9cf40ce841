//! Static-field response suite: pinned polarizabilities across the
//! parameter range, the closed-form first-order correction ψ₁ checked
//! against its defining equation and gauge, and the equivalence of the
//! closed-form quadratic Stark shift with the explicit matrix-element
//! quadrature.

use confined_atom::{
    dipole_coefficient, integrate_adaptive, solve_bound_state, solve_psi1, stark_shift_exact,
    static_polarizability, wavefunction, AtomConfig, BoundState, DEFAULT_ROOT_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn setup(z: f64, a: f64) -> (AtomConfig, BoundState) {
    let cfg = AtomConfig::new(z, a).unwrap();
    let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
    (cfg, bs)
}

/// Reference polarizabilities computed independently at high precision.
const ALPHA_REFERENCE: [(f64, f64, f64); 7] = [
    (0.25, 10.0, 230.848_891_368_777_914_97),
    (1.0, 3.0, 1.002_016_756_034_177_6),
    (2.0, 0.4, 0.189_768_544_560_881_51),
    (10.0, 0.2, 8.122_724_072_341_199_0e-5),
    (0.7, 5.0, 4.529_285_104_900_948_5),
    (0.5, 8.0, 18.406_657_711_509_081),
    (0.25, 50.0, 319.999_908_588_812_53),
];

#[test]
fn polarizabilities_match_high_precision_references() {
    for &(z, a, alpha) in &ALPHA_REFERENCE {
        let (cfg, bs) = setup(z, a);
        let got = static_polarizability(&bs, &cfg);
        let rel = (got - alpha).abs() / alpha;
        // The eigenvalue solve leaves ~1 ulp in k_b, which α amplifies by
        // its k-derivative near threshold; 5e-13 is the honest budget.
        assert!(
            rel < 5e-13,
            "(Z={z}, a={a}): α {got} vs {alpha}, rel {rel:.2e}"
        );
    }
}

#[test]
fn isolated_atom_has_the_textbook_polarizability() {
    for &z in &[0.5, 1.0, 2.0, 7.5] {
        let cfg = AtomConfig::isolated(z).unwrap();
        let bs = solve_bound_state(&cfg, DEFAULT_ROOT_TOL).unwrap();
        let alpha = static_polarizability(&bs, &cfg);
        let exact = 1.25 / z.powi(4);
        assert!(
            (alpha - exact).abs() < 1e-14 * exact,
            "Z={z}: α {alpha} vs {exact}"
        );
        // Symmetric orbital: no permanent dipole, hence no linear shift.
        assert_eq!(dipole_coefficient(&bs, &cfg, 0.3), 0.0);
    }
}

#[test]
fn polarizability_approaches_the_isolated_limit_from_below() {
    // At 2Za ≫ 1 the wall is exponentially irrelevant to k_b, but α still
    // approaches its plateau only polynomially; the wide-wall entry of the
    // reference table sits within 1% of the limit.
    let (cfg, bs) = setup(0.25, 50.0);
    let alpha = static_polarizability(&bs, &cfg);
    let plateau = 1.25 / 0.25_f64.powi(4);
    assert!(
        (alpha - plateau).abs() < 0.01 * plateau,
        "α {alpha} vs plateau {plateau}"
    );
    assert!(
        alpha < plateau,
        "confinement must reduce α below the plateau"
    );
}

#[test]
fn polarizability_diverges_at_the_existence_threshold() {
    // As 2Za → 1⁺ the level unbinds and α blows up as 1/(2 k_b⁴).
    let (cfg, bs) = setup(1.0, 0.5 + 1e-5);
    let alpha = static_polarizability(&bs, &cfg);
    let k4 = bs.k_b().powi(4);
    let scaled = alpha * k4;
    assert!(
        (scaled - 0.5).abs() < 0.01,
        "α·k⁴ = {scaled} should approach 1/2 near threshold (k_b = {})",
        bs.k_b()
    );
    assert!(alpha > 1e8, "α {alpha} should be huge near threshold");
}

#[test]
fn polarizability_grows_with_wall_distance_away_from_threshold() {
    // Once the level is no longer threshold-dominated, pushing the wall out
    // monotonically increases α toward the plateau, and confinement always
    // keeps α below the isolated value at the same binding.
    let z = 0.5;
    let mut last = 0.0;
    for &a in &[3.0, 5.0, 8.0, 13.0, 21.0, 34.0] {
        let (cfg, bs) = setup(z, a);
        let alpha = static_polarizability(&bs, &cfg);
        assert!(alpha > last, "α fell from {last} to {alpha} at a={a}");
        assert!(
            alpha < 1.25 / bs.k_b().powi(4),
            "α {alpha} must stay below the same-binding isolated value"
        );
        last = alpha;
    }
}

#[test]
fn first_order_correction_satisfies_its_defining_equation() {
    for &(z, a, f) in &[(0.25, 10.0, 0.001), (2.0, 0.4, 0.01), (0.7, 5.0, 0.005)] {
        let (cfg, bs) = setup(z, a);
        let psi1 = solve_psi1(&bs, &cfg, f).unwrap();
        let k = bs.k_b();
        let d = dipole_coefficient(&bs, &cfg, f);

        // Pointwise residual of ψ₁″ − k²ψ₁ = 2(D − Fx)u_b on both sides of
        // the contact potential.
        let mut scale = 0.0_f64;
        let mut worst = 0.0_f64;
        for &x in &[-0.9 * a, -0.4 * a, -0.05 * a, 0.1, 0.8, 2.5, 7.0] {
            let lhs = psi1.eval_second_derivative(x).re - k * k * psi1.eval(x).re;
            let rhs = 2.0 * (d - f * x) * wavefunction(&bs, &cfg, x);
            scale = scale.max(lhs.abs()).max(rhs.abs());
            worst = worst.max((lhs - rhs).abs());
        }
        assert!(
            worst < 1e-9 * scale,
            "(Z={z}, a={a}): residual {worst:.2e}, scale {scale:.2e}"
        );

        // Hard-wall boundary and continuity through the origin.
        assert_eq!(psi1.eval(-a - 1e-9).re, 0.0);
        let h = 1e-8;
        let gap = (psi1.eval(h) - psi1.eval(-h)).norm();
        assert!(gap < 1e-6 * (1.0 + psi1.eval(0.0).norm()), "kink {gap:.2e}");

        // The contact potential bends ψ₁ exactly like the orbital:
        // ψ₁'(0⁺) − ψ₁'(0⁻) = −2Z ψ₁(0).
        let jump = (psi1.eval_derivative(1e-12) - psi1.eval_derivative(-1e-12)).re;
        let expected = -2.0 * cfg.z() * psi1.eval(0.0).re;
        assert!(
            (jump - expected).abs() < 1e-8 * (1.0 + expected.abs()),
            "jump {jump} vs {expected}"
        );

        // Orthogonality gauge ⟨u_b|ψ₁⟩ = 0, checked by quadrature.
        let overlap = integrate_adaptive(
            &|x: f64| wavefunction(&bs, &cfg, x) * psi1.eval(x).re,
            -a,
            f64::INFINITY,
            1e-12,
        )
        .unwrap();
        let size = psi1.eval(0.5 / k).norm() + f;
        assert!(overlap.abs() < 1e-9 * size, "gauge overlap {overlap:.2e}");

        // Bound-like decay: the correction dies off with the orbital, only
        // polynomially enhanced.
        let near = psi1.eval(10.0 / k).norm();
        let far = psi1.eval(20.0 / k).norm();
        assert!(
            far < near * (-5.0 * k * (10.0 / k)).exp().max(1e-3),
            "tail {near} → {far}"
        );
    }
}

#[test]
fn quadratic_shift_equals_the_matrix_element_quadrature() {
    // −½αF² must equal −F·⟨u_b|x|ψ₁⟩ identically; sample the identity over
    // a seeded spread of well depths, wall distances, and field strengths.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd_ba11);
    for trial in 0..20 {
        let z = rng.gen_range(0.1..5.0_f64);
        let s = rng.gen_range(0.7..12.0_f64);
        let a = s / z;
        let f = rng.gen_range(1e-3..0.5_f64);
        let (cfg, bs) = setup(z, a);
        let psi1 = solve_psi1(&bs, &cfg, f).unwrap();
        let shift = stark_shift_exact(&bs, &cfg, f);
        let matrix_element = integrate_adaptive(
            &|x: f64| wavefunction(&bs, &cfg, x) * x * psi1.eval(x).re,
            -a,
            f64::INFINITY,
            1e-12,
        )
        .unwrap();
        let diff = (shift - (-f * matrix_element)).abs();
        assert!(
            diff < 1e-8 * (1.0 + shift.abs()),
            "trial {trial} (Z={z:.3}, a={a:.3}, F={f:.3}): {shift} vs {}",
            -f * matrix_element
        );
    }
}

#[test]
fn permanent_dipole_is_linear_in_the_field_and_matches_quadrature() {
    let (cfg, bs) = setup(0.25, 10.0);
    let d1 = dipole_coefficient(&bs, &cfg, 1.0);
    let d2 = dipole_coefficient(&bs, &cfg, 2.0);
    assert!(
        (d2 - 2.0 * d1).abs() < 1e-15 * d1.abs(),
        "linearity {d1} vs {d2}"
    );
    assert!(d1 > 0.0, "wall asymmetry pushes the orbital toward +x");

    // D/F = ⟨x⟩₀ from first principles.
    let x_mean = integrate_adaptive(
        &|x: f64| {
            let u = wavefunction(&bs, &cfg, x);
            u * u * x
        },
        -10.0,
        f64::INFINITY,
        1e-12,
    )
    .unwrap();
    assert!((d1 - x_mean).abs() < 1e-9 * x_mean, "⟨x⟩₀ {x_mean} vs {d1}");
}

#[test]
fn zero_field_correction_is_identically_zero() {
    let (cfg, bs) = setup(1.0, 3.0);
    let psi1 = solve_psi1(&bs, &cfg, 0.0).unwrap();
    for &x in &[-2.0, 0.0, 1.0, 10.0] {
        assert_eq!(psi1.eval(x).norm(), 0.0);
    }
    assert_eq!(stark_shift_exact(&bs, &cfg, 0.0), 0.0);
}
