//! Complex resonance eigenvalues of the confined atom in a static field:
//! Stark shift and ionization rate from one analytic determinant.
//!
//! With a static field the potential −Zδ(x) − Fx tilts downhill toward
//! +x, away from the wall, and supports no true bound state — the electron
//! tunnels out through the triangular barrier. A narrow quasi-bound state
//! survives, described by a complex energy ε = ε_b + Δε − iΓ/2 whose
//! imaginary part is the ionization rate Γ = −2 Im ε. Off the δ the
//! Schrödinger equation in the tilted potential is Airy's equation in the
//! scaled variable y(x) = (2/F²)^{1/3}(Fx + ε); imposing the wall zero at
//! x = −a, the δ jump at x = 0, and a purely outgoing wave Ci = Bi + iAi
//! on the downhill side collapses the matching into a single analytic
//! condition
//!
//! ```text
//! 2Zπ·Ci(u)·[Ai(u)Bi(v) − Bi(u)Ai(v)] − (2F)^{1/3}·Ci(v) = 0,
//! u = −y(0),  v = −y(−a) = u + (2F)^{1/3} a.
//! ```
//!
//! For weak fields u and v sit far out on the positive axis where Ai and Bi
//! span hundreds of orders of magnitude, so [`determinant`] evaluates the
//! condition in exponentially scaled form (one overall factor e^{−ζ(v)}
//! removed, where ζ = (2/3)z^{3/2}): the roots are unchanged and every
//! intermediate stays inside double precision. The width enters through the
//! doubly-exponentially small admixtures e^{−2ζ} and e^{−2(ζv−ζu)}, which is
//! why the scaled Airy evaluations keep their recessive parts and the
//! exponent difference ζ(v) − ζ(u) is computed in cancellation-free form.
//!
//! The root is located by a damped complex secant iteration seeded with the
//! closed-form static shift and the asymptotic rate; the weak-field closed
//! forms Δε ≈ −5F²/(8k_b⁴) and Γ ≈ (k_b³/Z)e^{−2k_b³/(3F)} are exposed for
//! comparison and seeding.

use num_complex::Complex64;

use crate::atom::{supports_bound_state, AtomConfig, Wall};
use crate::bound_state::{solve_bound_state, BoundState};
use crate::dalgarno_lewis::{dipole_coefficient, static_polarizability};
use crate::error::{Error, Result};
use crate::numerics::damped_secant;

use crate::airy::airy_scaled;

fn cc(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// Outcome of a resonance search: complex energy and derived real quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceResult {
    /// Complex eigenvalue ε of the outgoing-wave problem.
    pub energy: Complex64,
    /// Re ε − ε_b: the field-induced level shift.
    pub stark_shift: f64,
    /// Ionization rate Γ = −2 Im ε (per atomic time unit).
    pub gamma: f64,
    /// Whether the secant iteration met its tolerance.
    pub converged: bool,
    /// |determinant| at the returned energy — a diagnostic for
    /// non-converged searches.
    pub residual: f64,
    /// Secant iterations consumed.
    pub iterations: usize,
}

/// The Airy scaling map y(x) = (2/F²)^{1/3} (Fx + ε).
///
/// y linearizes the tilted potential: the outgoing solution is Ci(−y) and
/// the wall condition is imposed at y(−a). The two determinant arguments are
/// u = −y(0) and v = −y(−a).
///
/// ```
/// use confined_atom::scaled_variable;
/// use num_complex::Complex64;
///
/// let eps = Complex64::new(-0.5, 0.0);
/// let f = 0.1;
/// // The classical turning point Fx + ε = 0 maps to y = 0.
/// let y = scaled_variable(-eps.re / f, eps, f).unwrap();
/// assert!(y.norm() < 1e-12);
/// ```
///
/// # Errors
/// [`Error::StaticFieldScalingUndefined`] for F ≤ 0 (no tilt, no map).
pub fn scaled_variable(x: f64, energy: Complex64, f: f64) -> Result<Complex64> {
    if !(f.is_finite() && f > 0.0) {
        return Err(Error::StaticFieldScalingUndefined);
    }
    let s = (2.0 / (f * f)).cbrt();
    Ok(s * (cc(f * x) + energy))
}

/// ζ(v) − ζ(u) for v = u + dv without subtracting the large exponents:
/// (2/3)(v^{3/2} − u^{3/2}) = (2/3)·dv·(v + √u√v + u)/(√v + √u).
fn zeta_difference(u: Complex64, v: Complex64, dv: f64) -> Complex64 {
    let su = u.sqrt();
    let sv = v.sqrt();
    (2.0 / 3.0) * cc(dv) * (v + su * sv + u) / (sv + su)
}

/// The outgoing-wave matching determinant, exponentially scaled.
///
/// Returns the left-hand side of the matching condition times e^{−ζ(v)}
/// (see the module docs): the zeros are exactly the resonance energies, and
/// the scaling keeps the value finite for arbitrarily weak fields where the
/// unscaled determinant would overflow. Evaluated at the converged root the
/// magnitude is at the rounding floor (≪ 1e−9).
///
/// # Errors
/// [`Error::StaticFieldScalingUndefined`] for F ≤ 0;
/// [`Error::InvalidConfig`] for an isolated configuration (the wall distance
/// sets the scale of the condition); [`Error::NoBoundState`] when the
/// configuration has no state to perturb; Airy range errors propagate.
pub fn determinant(energy: Complex64, cfg: &AtomConfig, f: f64) -> Result<Complex64> {
    if !(f.is_finite() && f > 0.0) {
        return Err(Error::StaticFieldScalingUndefined);
    }
    let a = match cfg.wall() {
        Wall::Distance(a) => a,
        Wall::Isolated => {
            return Err(Error::InvalidConfig(
                "resonance determinant requires a finite wall distance".into(),
            ))
        }
    };
    if !supports_bound_state(cfg) {
        return Err(Error::NoBoundState);
    }
    let u = -scaled_variable(0.0, energy, f)?;
    let s = (2.0 * f).cbrt();
    let dv = s * a;
    let v = u + cc(dv);

    let su = airy_scaled(u)?;
    let sv = airy_scaled(v)?;
    let delta = zeta_difference(u, v, dv);
    let i = Complex64::new(0.0, 1.0);

    // Scaled outgoing combinations: Ci(z) = e^{+ζ}(bi + i·ai·e^{−2ζ}).
    let ci_u = su.bi + i * su.ai * (-2.0 * su.zeta).exp();
    let ci_v = sv.bi + i * sv.ai * (-2.0 * sv.zeta).exp();
    // Cross-Wronskian bracket: Ai(u)Bi(v) − Bi(u)Ai(v) = e^{ζv−ζu}·(this).
    let bracket = su.ai * sv.bi - (-2.0 * delta).exp() * su.bi * sv.ai;

    Ok(cc(2.0 * cfg.z() * std::f64::consts::PI) * ci_u * bracket - cc(s) * ci_v)
}

/// Locate the complex resonance energy by a damped secant iteration.
///
/// The search starts from `guess` (defaulting to ε_b − iΓ_asym/2) paired
/// with a second point displaced by the closed-form perturbative shift
/// through second order (permanent dipole plus polarizability terms);
/// steps are capped at a tenth of |ε_b| and halved while the residual grows.
/// A search that exhausts its iterations returns `converged = false` with
/// the last residual rather than an error, so weak-field sweeps can report
/// per-point diagnostics.
///
/// The determinant condition is exact at any field, but the narrow-resonance
/// interpretation needs F ≲ 0.3·k_b³ (see [`weak_field_limit`]); beyond
/// that, treat the result as the analytically continued eigenvalue rather
/// than a physical rate.
///
/// # Errors
/// As [`determinant`], plus [`Error::InvalidConfig`] for a bad tolerance.
pub fn solve_resonance(
    cfg: &AtomConfig,
    f: f64,
    guess: Option<Complex64>,
    tol: f64,
) -> Result<ResonanceResult> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "tolerance must be finite and > 0, got {tol}"
        )));
    }
    if !(f.is_finite() && f > 0.0) {
        return Err(Error::StaticFieldScalingUndefined);
    }
    let bs = solve_bound_state(cfg, 1e-14)?;
    let eps_b = bs.energy();
    let gamma0 = asymptotic_ionization_rate(&bs, cfg, f);
    let z0 = guess.unwrap_or_else(|| Complex64::new(eps_b, -0.5 * gamma0));

    // Second secant point: displaced by the perturbative shift through
    // second order — the permanent-dipole term −F⟨x⟩₀ (dominant near the
    // wall) plus the quadratic −½αF² — clamped so an out-of-regime field
    // cannot fling it past the spectrum.
    let mut dz = dipole_coefficient(&bs, cfg, f) + 0.5 * static_polarizability(&bs, cfg) * f * f;
    let floor = 1e-9 * (1.0 + z0.norm());
    if !dz.is_finite() || dz < floor {
        dz = floor;
    }
    dz = dz.min(0.25 * eps_b.abs());
    let z1 = z0 - cc(dz);

    let det_fn = |z: Complex64| determinant(z, cfg, f);
    let step_cap = 0.1 * (eps_b.abs() + tol);
    let outcome = damped_secant(&det_fn, z0, z1, tol, 80, step_cap)?;

    Ok(ResonanceResult {
        energy: outcome.z,
        stark_shift: outcome.z.re - eps_b,
        gamma: -2.0 * outcome.z.im,
        converged: outcome.converged,
        residual: outcome.residual,
        iterations: outcome.iterations,
    })
}

/// Weak-field quadratic Stark shift of the deep isolated level:
/// Δε⁽²⁾ = −5F²/(8k_b⁴).
///
/// ```
/// use confined_atom::{asymptotic_stark_shift, solve_bound_state, AtomConfig};
///
/// let cfg = AtomConfig::isolated(1.0).unwrap();
/// let bs = solve_bound_state(&cfg, 1e-12).unwrap();
/// assert!((asymptotic_stark_shift(&bs, 0.1) + 0.00625).abs() < 1e-15);
/// ```
#[must_use]
pub fn asymptotic_stark_shift(bs: &BoundState, f: f64) -> f64 {
    -0.625 * f * f / bs.k_b().powi(4)
}

/// Weak-field ionization rate Γ = (k_b³/Z)·e^{−2k_b³/(3F)}.
///
/// Non-perturbative in F: it vanishes faster than any power as F → 0 (and
/// underflows to exact 0 in double precision once 2k_b³/(3F) exceeds ~745 —
/// the physical rate is then unrepresentably small). F = 0 returns the
/// limit 0.
#[must_use]
pub fn asymptotic_ionization_rate(bs: &BoundState, cfg: &AtomConfig, f: f64) -> f64 {
    if f == 0.0 {
        return 0.0;
    }
    let k3 = bs.k_b().powi(3);
    (k3 / cfg.z()) * (-2.0 * k3 / (3.0 * f)).exp()
}

/// Upper edge of the narrow-resonance regime, F ≈ 0.3·k_b³.
///
/// Above this strength the barrier is so suppressed that the "rate"
/// interpretation of −2 Im ε degrades; callers (the CLI in particular)
/// surface a warning rather than refusing.
#[must_use]
pub fn weak_field_limit(bs: &BoundState) -> f64 {
    0.3 * bs.k_b().powi(3)
}
