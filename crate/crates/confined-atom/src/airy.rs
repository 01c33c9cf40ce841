//! Airy functions Ai, Bi and their derivatives for complex argument, the
//! outgoing combination Ci = Bi + iAi, and the exponential asymptotic series
//! the resonance solver is built on.
//!
//! Two evaluation regimes cover the supported disc |z| ≤ 97:
//!
//! * **Maclaurin series** for |z| ≤ 9, summed in double-double arithmetic.
//!   On the positive real axis Ai is the difference of two e^{2ζ}-sized
//!   series (ζ = ⅔z^{3/2}); at |z| = 9 that cancellation costs ~10 digits,
//!   which the double-double accumulation (and double-double values of the
//!   series constants Ai(0), Bi(0), Ai′(0), Bi′(0)) absorbs entirely.
//! * **Asymptotic expansions** beyond, truncated at the smallest term
//!   (optimal truncation keeps the error near e^{−2|ζ|} with the 13
//!   available coefficients, below 10⁻¹² for |z| ≥ 9). The compound
//!   Stokes-sector formulas used here keep both exponentials where neither
//!   dominates, so accuracy is uniform in arg z:
//!
//!   | sector arg z       | Ai          | Bi          |
//!   |--------------------|-------------|-------------|
//!   | [0, 2π/3]          | P₊          | 2P₋ + iP₊   |
//!   | (2π/3, π]          | P₊ + iP₋    | P₋ + iP₊    |
//!
//!   with P₊ = e^{−ζ}Σ(−1)ᵏuₖζ^{−k}/(2√π z^{1/4}) the recessive and
//!   P₋ = e^{+ζ}Σuₖζ^{−k}/(2√π z^{1/4}) the dominant solution (derivatives
//!   use vₖ and a z^{+1/4} prefactor). The lower half-plane follows from the
//!   Schwarz reflection Ai(z̄) = conj Ai(z).
//!
//! The two regimes agree to better than 10⁻¹¹ on the documented overlap
//! window 8 ≤ |z| ≤ 10.5; real arguments return exactly real values.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::dd::{Cdd, Dd};

/// Largest asymptotic coefficient index supported by
/// [`airy_asymptotic_coeffs`] (and used internally).
pub const MAX_ASYMPTOTIC_INDEX: usize = 12;

/// Radius beyond which e^{|ζ|} would overflow a double and evaluation is
/// refused ([`Error::ArgumentOutOfRange`]).
pub const SUPPORTED_RADIUS: f64 = 97.0;

/// Series/asymptotics switch radius.
const Z_SWITCH: f64 = 9.0;

/// Documented overlap window on which both branches meet the accuracy
/// contract simultaneously; tests compare them here.
pub const OVERLAP_WINDOW: (f64, f64) = (8.0, 10.5);

const TWO_SQRT_PI: f64 = 3.544_907_701_811_032;

// Double-double values of the series constants: Ai(0) = 3^{−2/3}/Γ(2/3),
// Ai′(0) = −3^{−1/3}/Γ(1/3), Bi(0) = √3·Ai(0), Bi′(0) = √3·|Ai′(0)|.
// f64-rounded constants alone would leave a ~5·10⁻¹⁷ seed error that the
// e^{2ζ} series cancellation amplifies to ~20% at |z| = 9.
const AI0: Dd = Dd::new(0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
const AIP0: Dd = Dd::new(-0.258_819_403_792_806_8, 2.522_243_111_610_832e-17);
const BI0: Dd = Dd::new(0.614_926_627_446_000_7, 5.089_920_779_489_141_6e-17);
const BIP0: Dd = Dd::new(0.448_288_357_353_826_4, -2.536_323_777_441_730_5e-17);

/// Ai, Bi and their derivatives at a common argument.
#[derive(Debug, Clone, Copy)]
pub struct AiryPair {
    /// Ai(z), the recessive solution on the positive axis.
    pub ai: Complex64,
    /// Bi(z), the dominant companion.
    pub bi: Complex64,
    /// Ai′(z).
    pub ai_prime: Complex64,
    /// Bi′(z).
    pub bi_prime: Complex64,
}

impl AiryPair {
    /// The Wronskian combination Ai·Bi′ − Ai′·Bi, identically 1/π.
    #[must_use]
    pub fn wronskian(&self) -> Complex64 {
        self.ai * self.bi_prime - self.ai_prime * self.bi
    }
}

/// Asymptotic coefficient uₖ = Γ(3k+½)/(54ᵏ k! Γ(k+½)); u₀ = 1, u₁ = 5/72.
///
/// # Errors
/// [`Error::CoefficientIndexUnsupported`] for `k > 12`: thirteen terms is
/// where optimal truncation bottoms out at the branch-switch radius, and
/// further coefficients would only ever make the divergent series worse.
pub fn airy_asymptotic_coeffs(k: usize) -> Result<f64> {
    if k > MAX_ASYMPTOTIC_INDEX {
        return Err(Error::CoefficientIndexUnsupported);
    }
    let mut c = 1.0;
    for j in 0..k {
        let j = j as f64;
        c *= (3.0 * j + 0.5) * (3.0 * j + 1.5) * (3.0 * j + 2.5) / (54.0 * (j + 1.0) * (j + 0.5));
    }
    Ok(c)
}

/// Coefficient tables uₖ and vₖ = −uₖ(6k+1)/(6k−1) for the value and
/// derivative expansions.
fn coefficient_tables() -> ([f64; 13], [f64; 13]) {
    let mut u = [0.0; 13];
    let mut v = [0.0; 13];
    let mut c = 1.0;
    for k in 0..13 {
        u[k] = c;
        let kf = k as f64;
        v[k] = -c * (6.0 * kf + 1.0) / (6.0 * kf - 1.0);
        c *= (3.0 * kf + 0.5) * (3.0 * kf + 1.5) * (3.0 * kf + 2.5)
            / (54.0 * (kf + 1.0) * (kf + 0.5));
    }
    (u, v)
}

/// The four Maclaurin sums: f, g (values) and f′, g′ (derivatives), where
/// Ai = Ai(0)f + Ai′(0)g and likewise for Bi. Summed in double-double.
fn maclaurin_sums(z: Complex64) -> (Cdd, Cdd, Cdd, Cdd) {
    let zdd = Cdd::from_c64(z);
    let z3 = zdd.mul(zdd).mul(zdd);

    let one = Cdd {
        re: Dd::from_f64(1.0),
        im: Dd::ZERO,
    };
    let mut tf = one;
    let mut tg = zdd;
    let mut tfp = zdd.mul(zdd).div_f64(2.0);
    let mut tgp = one;

    let mut f = tf;
    let mut g = tg;
    let mut fp = tfp;
    let mut gp = tgp;

    for k in 0..200u32 {
        let kf = f64::from(k);
        tf = tf.mul(z3).div_f64((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        tg = tg.mul(z3).div_f64((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        tfp = tfp
            .mul(z3)
            .mul_f64(kf + 2.0)
            .div_f64((kf + 1.0) * (3.0 * kf + 5.0) * (3.0 * kf + 6.0));
        tgp = tgp.mul(z3).div_f64((3.0 * kf + 1.0) * (3.0 * kf + 3.0));
        f = f.add(tf);
        g = g.add(tg);
        fp = fp.add(tfp);
        gp = gp.add(tgp);

        let tmag = tf.mag1().max(tg.mag1()).max(tfp.mag1()).max(tgp.mag1());
        let smag = f.mag1().max(g.mag1()).max(fp.mag1()).max(gp.mag1());
        if tmag <= 1e-34 * (smag + f64::MIN_POSITIVE) {
            break;
        }
    }
    (f, g, fp, gp)
}

fn airy_series(z: Complex64) -> AiryPair {
    let (f, g, fp, gp) = maclaurin_sums(z);
    AiryPair {
        ai: f.mul_dd(AI0).add(g.mul_dd(AIP0)).to_c64(),
        bi: f.mul_dd(BI0).add(g.mul_dd(BIP0)).to_c64(),
        ai_prime: fp.mul_dd(AI0).add(gp.mul_dd(AIP0)).to_c64(),
        bi_prime: fp.mul_dd(BI0).add(gp.mul_dd(BIP0)).to_c64(),
    }
}

/// Optimally truncated sums Σ(±1)ᵏuₖwᵏ and Σ(±1)ᵏvₖwᵏ for w = 1/ζ:
/// (S₊, S₋, V₊, V₋).
fn asymptotic_sums(w: Complex64) -> (Complex64, Complex64, Complex64, Complex64) {
    let (u, v) = coefficient_tables();
    let mut s_plus = Complex64::new(0.0, 0.0);
    let mut s_minus = s_plus;
    let mut v_plus = s_plus;
    let mut v_minus = s_plus;

    let mut wk = Complex64::new(1.0, 0.0);
    let mut sign = 1.0;
    let mut prev_u = f64::INFINITY;
    let mut prev_v = f64::INFINITY;
    let mut u_open = true;
    let mut v_open = true;
    for k in 0..=MAX_ASYMPTOTIC_INDEX {
        let tu = u[k] * wk;
        let tv = v[k] * wk;
        if u_open {
            let m = tu.norm();
            if m >= prev_u {
                u_open = false;
            } else {
                s_plus += tu;
                s_minus += sign * tu;
                prev_u = m;
            }
        }
        if v_open {
            let m = tv.norm();
            if m >= prev_v {
                v_open = false;
            } else {
                v_plus += tv;
                v_minus += sign * tv;
                prev_v = m;
            }
        }
        if !u_open && !v_open {
            break;
        }
        wk *= w;
        sign = -sign;
    }
    (s_plus, s_minus, v_plus, v_minus)
}

/// Asymptotic evaluation for arg z ∈ [0, π], |z| > `Z_SWITCH`.
fn airy_asymptotic(z: Complex64) -> AiryPair {
    let sq = z.sqrt();
    let zeta = (2.0 / 3.0) * z * sq;
    let z14 = sq.sqrt();
    let w = Complex64::new(1.0, 0.0) / zeta;
    let (s_plus, s_minus, v_plus, v_minus) = asymptotic_sums(w);

    let em = (-zeta).exp();
    let ep = zeta.exp();
    let p_plus = em * s_minus / (TWO_SQRT_PI * z14);
    let p_minus = ep * s_plus / (TWO_SQRT_PI * z14);
    let q_plus = -z14 * em * v_minus / TWO_SQRT_PI;
    let q_minus = z14 * ep * v_plus / TWO_SQRT_PI;

    let i = Complex64::new(0.0, 1.0);
    if z.arg() <= 2.0 * std::f64::consts::FRAC_PI_3 {
        AiryPair {
            ai: p_plus,
            bi: 2.0 * p_minus + i * p_plus,
            ai_prime: q_plus,
            bi_prime: 2.0 * q_minus + i * q_plus,
        }
    } else {
        AiryPair {
            ai: p_plus + i * p_minus,
            bi: p_minus + i * p_plus,
            ai_prime: q_plus + i * q_minus,
            bi_prime: q_minus + i * q_plus,
        }
    }
}

fn conj_pair(p: AiryPair) -> AiryPair {
    AiryPair {
        ai: p.ai.conj(),
        bi: p.bi.conj(),
        ai_prime: p.ai_prime.conj(),
        bi_prime: p.bi_prime.conj(),
    }
}

/// Evaluate Ai, Bi, Ai′, Bi′ at a complex argument.
///
/// Accuracy is ≥ 10 relative digits throughout the supported disc
/// |z| ≤ [`SUPPORTED_RADIUS`]. Real arguments produce exactly real results.
///
/// # Errors
/// [`Error::ArgumentOutOfRange`] outside the supported disc, where one of
/// the four values would overflow.
///
/// ```
/// use confined_atom::airy_eval;
/// use num_complex::Complex64;
///
/// let p = airy_eval(Complex64::new(0.0, 0.0)).unwrap();
/// assert!((p.ai.re - 0.355_028_053_887_817_2).abs() < 1e-15);
/// assert!((p.bi.re - 0.614_926_627_446_000_7).abs() < 1e-15);
/// ```
pub fn airy_eval(z: Complex64) -> Result<AiryPair> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::ArgumentOutOfRange);
    }
    // Normalize −0.0 so the real axis dispatches one way only.
    let z = if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    };
    let r = z.norm();
    if r > SUPPORTED_RADIUS {
        return Err(Error::ArgumentOutOfRange);
    }
    if z.im < 0.0 {
        return Ok(conj_pair(airy_eval(z.conj())?));
    }
    let mut pair = if r <= Z_SWITCH {
        airy_series(z)
    } else {
        airy_asymptotic(z)
    };
    if z.im == 0.0 {
        // All four functions are real on the real axis.
        pair.ai.im = 0.0;
        pair.bi.im = 0.0;
        pair.ai_prime.im = 0.0;
        pair.bi_prime.im = 0.0;
    }
    Ok(pair)
}

/// The outgoing-wave combination Ci(z) = Bi(z) + i·Ai(z).
///
/// For large negative arguments Ci(−y) carries the pure outgoing phase
/// e^{i(⅔y^{3/2}+π/4)}, which is what makes it the correct transmitted-wave
/// factor in the field-ionization matching problem.
///
/// # Errors
/// As [`airy_eval`].
pub fn airy_ci(z: Complex64) -> Result<Complex64> {
    let p = airy_eval(z)?;
    Ok(p.bi + Complex64::new(0.0, 1.0) * p.ai)
}

/// Derivative Ci′(z) = Bi′(z) + i·Ai′(z).
///
/// # Errors
/// As [`airy_eval`].
pub fn airy_ci_prime(z: Complex64) -> Result<Complex64> {
    let p = airy_eval(z)?;
    Ok(p.bi_prime + Complex64::new(0.0, 1.0) * p.ai_prime)
}

/// Exponentially scaled Airy values: `ai`·e^{−ζ} = Ai(z),
/// `bi`·e^{+ζ} = Bi(z) (same pattern for the derivatives), with
/// ζ = ⅔z^{3/2} reported alongside.
///
/// The scaled values stay O(1) however large |z| grows, which lets the
/// resonance determinant be assembled at field strengths where the raw
/// exponentials overflow. Valid in the sector |arg z| ≤ 2π/3 (the physical
/// region of the matching problem) at any radius.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ScaledAiry {
    pub ai: Complex64,
    pub ai_prime: Complex64,
    pub bi: Complex64,
    pub bi_prime: Complex64,
    pub zeta: Complex64,
}

impl ScaledAiry {
    fn conj(self) -> Self {
        ScaledAiry {
            ai: self.ai.conj(),
            ai_prime: self.ai_prime.conj(),
            bi: self.bi.conj(),
            bi_prime: self.bi_prime.conj(),
            zeta: self.zeta.conj(),
        }
    }
}

/// Evaluate the scaled quadruple for |arg z| ≤ 2π/3.
///
/// In the asymptotic regime the scaled values are the bare truncated sums
/// (no exponentials at all); inside the series disc the unscaled values are
/// series-evaluated and the moderate factors e^{±ζ} (|ζ| ≤ 18 there) are
/// divided out.
///
/// # Errors
/// [`Error::ArgumentOutOfRange`] outside the supported sector.
pub(crate) fn airy_scaled(z: Complex64) -> Result<ScaledAiry> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::ArgumentOutOfRange);
    }
    let z = if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    };
    if z.im < 0.0 {
        return Ok(airy_scaled(z.conj())?.conj());
    }
    let sq = z.sqrt();
    let zeta = (2.0 / 3.0) * z * sq;
    if z.norm() <= Z_SWITCH {
        let p = airy_series(z);
        let em = (-zeta).exp();
        let ep = zeta.exp();
        return Ok(ScaledAiry {
            ai: p.ai * ep,
            ai_prime: p.ai_prime * ep,
            bi: p.bi * em,
            bi_prime: p.bi_prime * em,
            zeta,
        });
    }
    if z.arg() > 2.0 * std::f64::consts::FRAC_PI_3 {
        return Err(Error::ArgumentOutOfRange);
    }
    let z14 = sq.sqrt();
    let w = Complex64::new(1.0, 0.0) / zeta;
    let (s_plus, s_minus, v_plus, v_minus) = asymptotic_sums(w);
    let ai = s_minus / (TWO_SQRT_PI * z14);
    let ai_prime = -z14 * v_minus / TWO_SQRT_PI;
    // Bi carries a recessive admixture i·Ai on this sector; in scaled form
    // that is an e^{−2ζ} correction. It is exactly the size of the resonance
    // width, so it cannot be dropped. Where e^{−ζ} dominates instead
    // (arg z beyond the anti-Stokes ray π/3 at large radius) the e^{+ζ}
    // decomposition itself overflows and the argument is refused.
    let damp = (-2.0 * zeta).exp();
    let i = Complex64::new(0.0, 1.0);
    let bi = 2.0 * s_plus / (TWO_SQRT_PI * z14) + i * ai * damp;
    let bi_prime = 2.0 * z14 * v_plus / TWO_SQRT_PI + i * ai_prime * damp;
    if !(bi.re.is_finite() && bi.im.is_finite() && bi_prime.re.is_finite()) {
        return Err(Error::ArgumentOutOfRange);
    }
    Ok(ScaledAiry {
        ai,
        ai_prime,
        bi,
        bi_prime,
        zeta,
    })
}
