//! Complex Airy evaluator regression suite: a frozen high-precision value
//! table, analytic identities (Wronskian, Schwarz reflection, the defining
//! ODE across the series/asymptotics seam), the outgoing-wave envelope, and
//! contracted argument/coefficient limits.

use confined_atom::{
    airy_asymptotic_coeffs, airy_ci, airy_ci_prime, airy_eval, Error, MAX_ASYMPTOTIC_INDEX,
    OVERLAP_WINDOW, SUPPORTED_RADIUS,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// (z, Ai, Bi, Ai', Bi') computed independently at 30 significant digits.
#[allow(clippy::type_complexity)]
fn reference_table() -> Vec<(Complex64, Complex64, Complex64, Complex64, Complex64)> {
    vec![
        (
            c(1.0, 0.0),
            c(0.135_292_416_312_881_415_524, 0.0),
            c(1.207_423_594_952_871_259_44, 0.0),
            c(-0.159_147_441_296_793_212_788, 0.0),
            c(0.932_435_933_392_775_632_959, 0.0),
        ),
        (
            c(-4.0, 0.0),
            c(-0.070_265_532_949_289_515_099_1, 0.0),
            c(0.392_234_705_706_999_289_554, 0.0),
            c(-0.790_628_575_368_581_380_296, 0.0),
            c(-0.116_670_567_438_340_893_68, 0.0),
        ),
        (
            c(2.0, 3.0),
            c(
                0.008_104_457_809_530_534_989_03,
                0.131_178_382_604_566_026_883,
            ),
            c(
                -0.396_368_255_040_392_085_273,
                -0.569_730_912_955_949_720_306,
            ),
            c(
                0.096_658_179_033_112_904_735_5,
                -0.231_987_185_385_486_320_367,
            ),
            c(0.349_457_671_929_466_480_149, -1.105_328_588_933_856_352_67),
        ),
        (
            c(-5.0, 2.0),
            c(16.753_205_015_984_385_906_4, 0.497_979_302_801_126_011_468),
            c(-0.497_328_950_063_074_436_356, 16.749_166_351_366_133_489_4),
            c(-5.472_091_905_133_475_616_86, -38.101_259_746_658_900_154_2),
            c(38.110_849_034_399_188_771_6, -5.472_536_869_631_344_632_13),
        ),
        (
            c(12.0, 0.0),
            c(1.393_184_688_875_360_839_05e-13, 0.0),
            c(329_807_225_829.074_176_185, 0.0),
            c(-4.854_736_554_985_308_462_99e-13, 0.0),
            c(1_135_507_502_443.370_742_4, 0.0),
        ),
        (
            c(-15.0, 0.0),
            c(0.278_217_490_870_828_929_528, 0.0),
            c(-0.069_126_594_531_010_061_185_9, 0.0),
            c(0.272_374_204_308_642_020_826, 0.0),
            c(1.076_429_753_084_374_786_74, 0.0),
        ),
        (
            c(8.0, -9.0),
            c(
                -2.852_285_723_814_572_497_04e-6,
                3.552_320_080_569_305_947_83e-5,
            ),
            c(431.591_791_208_848_669_404, -1_212.350_534_847_841_180_15),
            c(
                -4.088_737_006_034_534_895_98e-5,
                -1.169_574_022_724_157_240_85e-4,
            ),
            c(-382.193_409_581_750_330_451, -4_441.596_909_000_315_519),
        ),
        (
            c(-20.0, 30.0),
            c(
                1.941_586_259_855_225_125_6e61,
                2.062_642_954_208_318_865_1e61,
            ),
            c(
                -2.062_642_954_208_318_865_1e61,
                1.941_586_259_855_225_125_6e61,
            ),
            c(
                5.414_295_637_158_455_051_04e61,
                -1.610_395_571_615_962_778_59e62,
            ),
            c(
                1.610_395_571_615_962_778_59e62,
                5.414_295_637_158_455_051_04e61,
            ),
        ),
        (
            c(0.5, -0.5),
            c(0.216_186_344_778_125_988_2, 0.114_830_639_877_648_132_48),
            c(
                0.804_166_590_496_232_645_856,
                -0.249_285_288_883_179_102_332,
            ),
            c(
                -0.238_716_809_081_768_615_868,
                -0.066_157_041_221_093_554_523_1,
            ),
            c(
                0.408_398_497_640_632_396_703,
                -0.187_751_702_882_378_320_828,
            ),
        ),
        (
            c(40.0, 10.0),
            c(
                2.604_257_032_347_376_084_03e-73,
                -1.929_366_195_898_220_162_43e-73,
            ),
            c(
                6.655_064_921_694_564_155_85e70,
                3.767_512_522_825_901_143_13e70,
            ),
            c(
                -1.812_317_467_398_800_844_51e-72,
                1.026_786_092_032_163_400_78e-72,
            ),
            c(
                3.941_231_515_492_014_486_56e71,
                2.921_938_238_464_161_989_75e71,
            ),
        ),
    ]
}

fn assert_close(name: &str, z: Complex64, got: Complex64, want: Complex64) {
    let err = (got - want).norm();
    assert!(
        err <= 1e-12 * want.norm(),
        "{name}({z}): got {got}, want {want}, rel {:.2e}",
        err / want.norm()
    );
}

#[test]
fn values_match_the_frozen_high_precision_table() {
    for (z, ai, bi, aip, bip) in reference_table() {
        let p = airy_eval(z).unwrap();
        assert_close("Ai", z, p.ai, ai);
        assert_close("Bi", z, p.bi, bi);
        assert_close("Ai'", z, p.ai_prime, aip);
        assert_close("Bi'", z, p.bi_prime, bip);
    }
}

#[test]
fn wronskian_is_one_over_pi_on_conditioned_samples() {
    // Ai·Bi' − Ai'·Bi = 1/π everywhere, but near the anti-Stokes rays the
    // two products grow huge and cancel; restrict to points where the
    // products stay below 1e5/π so the identity is numerically meaningful.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a117);
    let mut tested = 0;
    while tested < 400 {
        let re = rng.gen_range(-30.0..30.0);
        let im = rng.gen_range(-30.0..30.0);
        let z = c(re, im);
        if z.norm() > 30.0 {
            continue;
        }
        let p = airy_eval(z).unwrap();
        let scale = (p.ai * p.bi_prime).norm().max((p.ai_prime * p.bi).norm());
        if scale * std::f64::consts::PI > 1e5 {
            continue;
        }
        let w = p.wronskian() * std::f64::consts::PI;
        assert!(
            (w - Complex64::new(1.0, 0.0)).norm() < 1e-9,
            "π·W({z}) = {w}, scale {scale:.1e}"
        );
        tested += 1;
    }
}

#[test]
fn schwarz_reflection_holds_exactly() {
    // All four functions are real on the real axis, so f(z̄) = f(z)̄ must
    // hold to the last bit: both evaluations sum the same real-coefficient
    // expansions with conjugate-symmetric rounding.
    for z in [
        c(2.0, 3.0),
        c(0.5, -0.5),
        c(8.0, -9.0),
        c(40.0, 10.0),
        c(-20.0, 30.0),
    ] {
        let p = airy_eval(z).unwrap();
        let q = airy_eval(z.conj()).unwrap();
        assert_eq!(q.ai, p.ai.conj(), "Ai at {z}");
        assert_eq!(q.bi, p.bi.conj(), "Bi at {z}");
        assert_eq!(q.ai_prime, p.ai_prime.conj(), "Ai' at {z}");
        assert_eq!(q.bi_prime, p.bi_prime.conj(), "Bi' at {z}");
    }
}

#[test]
fn series_and_asymptotic_charts_agree_across_the_seam() {
    // Step a short chord across the switch radius and predict the far value
    // from the near one with a third-order Taylor model closed by the
    // defining equation w'' = z·w.  Any mismatch between the two expansion
    // charts would show up as a jump far above the O(dz⁴) truncation floor.
    let (lo, hi) = OVERLAP_WINDOW;
    assert!(
        lo < 9.0 && 9.0 < hi,
        "window {OVERLAP_WINDOW:?} must straddle the switch"
    );
    let dz_len = 1e-4;
    for theta in [0.3_f64, 1.2, 2.0, -2.4, 3.0] {
        let dir = c(theta.cos(), theta.sin());
        let z1 = dir * (9.0 - 0.5 * dz_len);
        let z2 = dir * (9.0 + 0.5 * dz_len);
        let dz = z2 - z1;
        let p1 = airy_eval(z1).unwrap();
        let p2 = airy_eval(z2).unwrap();
        for (name, f, fp, got) in [
            ("Ai", p1.ai, p1.ai_prime, p2.ai),
            ("Bi", p1.bi, p1.bi_prime, p2.bi),
        ] {
            let f2 = z1 * f; // w'' = z w
            let f3 = f + z1 * fp; // w''' = w + z w'
            let predicted = f + dz * (fp + dz * (f2 / 2.0 + dz * f3 / 6.0));
            let rel = (got - predicted).norm() / got.norm();
            assert!(rel < 1e-9, "{name} seam jump at θ={theta}: rel {rel:.2e}");
        }
    }
}

#[test]
fn outgoing_combination_has_the_slowly_varying_envelope() {
    // Ci = Bi + iAi is purely outgoing for large negative argument: the
    // oscillations of Ai and Bi combine into a phase and the modulus decays
    // as 1/(√π x^{1/4}) with no beats.
    for &x in &[10.0, 16.0, 25.0, 49.0, 81.0] {
        let ci = airy_ci(c(-x, 0.0)).unwrap();
        let envelope = 1.0 / (std::f64::consts::PI.sqrt() * x.powf(0.25));
        let rel = (ci.norm() - envelope).abs() / envelope;
        assert!(
            rel < 1e-2,
            "|Ci(-{x})| = {}, envelope {envelope}, rel {rel:.2e}",
            ci.norm()
        );
    }
}

#[test]
fn outgoing_combination_matches_its_components() {
    let z = c(-3.0, 0.7);
    let p = airy_eval(z).unwrap();
    let i = Complex64::new(0.0, 1.0);
    assert_eq!(airy_ci(z).unwrap(), p.bi + i * p.ai);
    assert_eq!(airy_ci_prime(z).unwrap(), p.bi_prime + i * p.ai_prime);
}

#[test]
fn asymptotic_coefficients_start_from_the_textbook_values() {
    assert_eq!(airy_asymptotic_coeffs(0).unwrap(), 1.0);
    let u1 = airy_asymptotic_coeffs(1).unwrap();
    assert!((u1 - 5.0 / 72.0).abs() < 1e-16, "u1 = {u1}");
    let u2 = airy_asymptotic_coeffs(2).unwrap();
    assert!((u2 - 385.0 / 10_368.0).abs() < 1e-16, "u2 = {u2}");
    // The table stops where the implementation stops using it.
    assert!(airy_asymptotic_coeffs(MAX_ASYMPTOTIC_INDEX).is_ok());
    assert_eq!(
        airy_asymptotic_coeffs(MAX_ASYMPTOTIC_INDEX + 1).unwrap_err(),
        Error::CoefficientIndexUnsupported
    );
}

#[test]
fn out_of_range_arguments_are_refused() {
    let too_far = c(SUPPORTED_RADIUS + 1.0, 0.0);
    assert_eq!(airy_eval(too_far).unwrap_err(), Error::ArgumentOutOfRange);
    assert_eq!(
        airy_eval(c(f64::NAN, 0.0)).unwrap_err(),
        Error::ArgumentOutOfRange
    );
    assert_eq!(
        airy_eval(c(0.0, f64::INFINITY)).unwrap_err(),
        Error::ArgumentOutOfRange
    );
    assert_eq!(airy_ci(too_far).unwrap_err(), Error::ArgumentOutOfRange);
    assert_eq!(
        airy_ci_prime(too_far).unwrap_err(),
        Error::ArgumentOutOfRange
    );

    // Just inside the supported disk evaluation still succeeds.
    let inside = airy_eval(c(0.0, SUPPORTED_RADIUS - 1.0)).unwrap();
    assert!(inside.ai.is_finite() && inside.bi.is_finite());
}
