//! Dynamic response: two driven channels at frequencies ±ω and the complex
//! dynamic polarizability assembled from them.
//!
//! A monochromatic drive −Fx·cos(ωt) couples the ground state to two
//! stationary scattering-like problems, one per rotating component:
//!
//! ```text
//! [−½ d²/dx² − Zδ(x) + (k_b²/2 ± ω̃)] φ₁^± = F x u_b(x),     ω̃ = ω + iη,
//! ```
//!
//! with the wall condition φ(−a) = 0 and only the decaying/outgoing
//! exponential e^{−κ₊x} (closed channel) or e^{−κ₋x} (open channel,
//! |e^{−κ₋x}| → const as η → 0⁺) on the right. The channel wave vectors are
//! κ_± = √(k_b² ± 2ω̃) on the principal branch, so a positive broadening η
//! keeps the evaluation off the branch cut and selects outgoing waves above
//! the ionization threshold ω > k_b²/2.
//!
//! The polarizability is the field-normalized pair sum
//! α(ω) = [⟨u_b|x|φ₁⁺⟩ + ⟨u_b|x|φ₁⁻⟩]/F, which is exactly the
//! Kramers–Heisenberg sum Σ_{n≠0} |x_{0n}|²[1/(E_n−E_0−ω̃) + 1/(E_n−E_0+ω̃)]:
//! the ground-state pole cancels between the channels, and the ω → 0, η → 0
//! limit reproduces the static polarizability, which fixes sign and
//! normalization unambiguously. The response is linear, so α is independent
//! of the drive strength used internally.

use num_complex::Complex64;

use crate::atom::{AtomConfig, Wall};
use crate::bound_state::BoundState;
use crate::dalgarno_lewis::{dipole_matrix_element, Psi1};
use crate::error::{Error, Result};
use crate::exppoly::{ExpPoly, Term};

fn cc(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// Which rotating component of the drive a channel belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelSign {
    /// Energy shifted up by ω̃: always closed (κ stays near the real axis).
    Plus,
    /// Energy shifted down by ω̃: opens into the continuum at ω = k_b²/2.
    Minus,
}

impl ChannelSign {
    /// +1 for [`ChannelSign::Plus`], −1 for [`ChannelSign::Minus`].
    #[must_use]
    pub fn signum(self) -> f64 {
        match self {
            ChannelSign::Plus => 1.0,
            ChannelSign::Minus => -1.0,
        }
    }
}

impl std::fmt::Display for ChannelSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ChannelSign::Plus => "+",
            ChannelSign::Minus => "-",
        })
    }
}

/// Channel wave vector κ_± = √(k_b² ± 2(ω + iη)) on the principal branch.
///
/// The principal square root has Re κ ≥ 0; a strictly positive real part
/// makes e^{−κx} the physical (decaying, or outgoing-with-damping) solution
/// on the right. Exactly on the branch cut (η = 0 at or above the ionization
/// threshold) the sign of the imaginary part is ambiguous and an error is
/// returned instead of picking silently.
///
/// ```
/// use confined_atom::{channel_wavevector, solve_bound_state, AtomConfig, ChannelSign};
///
/// let cfg = AtomConfig::isolated(1.0).unwrap();
/// let bs = solve_bound_state(&cfg, 1e-12).unwrap();
/// // Degenerate limit: both channels return k_b itself.
/// let k = channel_wavevector(&bs, 0.0, 0.0, ChannelSign::Plus).unwrap();
/// assert_eq!(k.re, bs.k_b());
/// assert_eq!(k.im, 0.0);
/// ```
///
/// # Errors
/// [`Error::OnBranchCut`] when Re κ = 0 exactly.
pub fn channel_wavevector(
    bs: &BoundState,
    omega: f64,
    eta: f64,
    sign: ChannelSign,
) -> Result<Complex64> {
    let k = bs.k_b();
    let omega_c = Complex64::new(omega, eta);
    let kappa = (cc(k * k) + 2.0 * sign.signum() * omega_c).sqrt();
    if kappa.re == 0.0 {
        return Err(Error::OnBranchCut);
    }
    Ok(kappa)
}

/// Non-resonant particular solution of w″ − κ²w = (c₀ + c₁x)e^{μx}:
/// (γ₀ + γ₁x)e^{μx} with γ₁ = c₁/(μ²−κ²), γ₀ = (c₀ − 2μγ₁)/(μ²−κ²).
fn nonresonant_particular(mu: f64, c0: f64, c1: f64, kappa: Complex64) -> Term {
    let denom = cc(mu * mu) - kappa * kappa;
    let g1 = cc(c1) / denom;
    let g0 = (cc(c0) - 2.0 * mu * g1) / denom;
    Term::new(cc(mu), vec![g0, g1])
}

/// Solve one driven channel for φ₁^±.
///
/// The returned piecewise solution satisfies the wall condition, continuity
/// and the δ derivative jump at the origin, and carries no growing
/// exponential on the right. For ω ≠ 0 (or η > 0) the forcing rates ±k_b
/// differ from the homogeneous rate κ, so plain undetermined coefficients
/// suffice — no degree elevation as in the static case.
///
/// # Errors
/// [`Error::DegenerateChannel`] at ω = η = 0 (the static solver owns that
/// limit), [`Error::OnBranchCut`] from the wave vector, and
/// [`Error::DegenerateMatchingSystem`] if the matching matrix is singular.
pub fn solve_channel(
    bs: &BoundState,
    cfg: &AtomConfig,
    f: f64,
    omega: f64,
    eta: f64,
    sign: ChannelSign,
) -> Result<Psi1> {
    if omega == 0.0 && eta == 0.0 {
        return Err(Error::DegenerateChannel);
    }
    let kappa = channel_wavevector(bs, omega, eta, sign)?;
    let k = bs.k_b();
    let a_norm = bs.norm_a();
    let z = cfg.z();

    match cfg.wall() {
        Wall::Distance(a) => {
            let e2k = (-2.0 * k * a).exp(); // bound-orbital image weight
            let b = a_norm * (-(-2.0 * k * a).exp_m1());
            // Forcing −2Fx·u_b piece by piece (the ODE in normalized form is
            // φ″ − κ²φ = −2Fx·u_b).
            let p_l = ExpPoly::new(vec![
                nonresonant_particular(k, 0.0, -2.0 * f * a_norm, kappa),
                nonresonant_particular(-k, 0.0, 2.0 * f * a_norm * e2k, kappa),
            ]);
            let p_r = ExpPoly::new(vec![nonresonant_particular(-k, 0.0, -2.0 * f * b, kappa)]);

            let ea = (-kappa * a).exp();
            let e2a = ea * ea;
            let pl_wall = p_l.eval(-a);
            let pl0 = p_l.eval(0.0);
            let plp0 = p_l.derivative().eval(0.0);
            let pr0 = p_r.eval(0.0);
            let prp0 = p_r.derivative().eval(0.0);

            // Unknowns (d₁, c₃) multiply the wall-regular homogeneous pair
            // e^{κx} − e^{−κ(x+2a)} (left) and e^{−κx} (right).
            let m00 = cc(1.0) - e2a;
            let m01 = -cc(1.0);
            let m10 = -kappa * (cc(1.0) + e2a);
            let m11 = cc(2.0 * z) - kappa;
            let r0 = pr0 - pl0 + pl_wall * ea;
            let r1 = plp0 + kappa * pl_wall * ea - prp0 - 2.0 * z * pr0;

            let det = m00 * m11 - m01 * m10;
            let scale = m00.norm() * m11.norm() + m01.norm() * m10.norm();
            if !det.is_finite() || det.norm() <= 1e-14 * scale {
                return Err(Error::DegenerateMatchingSystem);
            }
            let d1 = (r0 * m11 - m01 * r1) / det;
            let c3 = (m00 * r1 - r0 * m10) / det;

            let left = p_l.plus(&ExpPoly::new(vec![
                Term::new(cc(-1.0) * kappa, vec![-pl_wall * ea]),
                Term::new(kappa, vec![d1]),
                Term::new(cc(-1.0) * kappa, vec![-d1 * e2a]),
            ]));
            let right = p_r.plus(&ExpPoly::new(vec![Term::new(cc(-1.0) * kappa, vec![c3])]));
            Ok(Psi1 {
                left,
                right,
                wall: Some(a),
            })
        }
        Wall::Isolated => {
            let p_l = ExpPoly::new(vec![nonresonant_particular(
                k,
                0.0,
                -2.0 * f * a_norm,
                kappa,
            )]);
            let p_r = ExpPoly::new(vec![nonresonant_particular(
                -k,
                0.0,
                -2.0 * f * a_norm,
                kappa,
            )]);
            let pl0 = p_l.eval(0.0);
            let plp0 = p_l.derivative().eval(0.0);
            let pr0 = p_r.eval(0.0);
            let prp0 = p_r.derivative().eval(0.0);

            let m00 = cc(1.0);
            let m01 = -cc(1.0);
            let m10 = -kappa;
            let m11 = cc(2.0 * z) - kappa;
            let r0 = pr0 - pl0;
            let r1 = plp0 - prp0 - 2.0 * z * pr0;

            let det = m00 * m11 - m01 * m10;
            let scale = m00.norm() * m11.norm() + m01.norm() * m10.norm();
            if !det.is_finite() || det.norm() <= 1e-14 * scale {
                return Err(Error::DegenerateMatchingSystem);
            }
            let d1 = (r0 * m11 - m01 * r1) / det;
            let c3 = (m00 * r1 - r0 * m10) / det;

            let left = p_l.plus(&ExpPoly::new(vec![Term::new(kappa, vec![d1])]));
            let right = p_r.plus(&ExpPoly::new(vec![Term::new(cc(-1.0) * kappa, vec![c3])]));
            Ok(Psi1 {
                left,
                right,
                wall: None,
            })
        }
    }
}

/// Dynamic polarizability α(ω) at a given drive strength.
///
/// The response is linear, so the result is independent of `f` to rounding;
/// this entry point exists to make that property directly testable.
///
/// # Errors
/// Propagates channel errors; rejects a non-positive drive.
pub fn dynamic_polarizability_at_field(
    bs: &BoundState,
    cfg: &AtomConfig,
    f: f64,
    omega: f64,
    eta: f64,
) -> Result<Complex64> {
    if !(f.is_finite() && f > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "drive strength F must be finite and > 0, got {f}"
        )));
    }
    let plus = solve_channel(bs, cfg, f, omega, eta, ChannelSign::Plus)?;
    let minus = solve_channel(bs, cfg, f, omega, eta, ChannelSign::Minus)?;
    let me = dipole_matrix_element(bs, cfg, &plus)? + dipole_matrix_element(bs, cfg, &minus)?;
    Ok(me / f)
}

/// Complex dynamic polarizability α(ω) with broadening η.
///
/// Re α describes dispersion, Im α ≥ 0 absorption (for ω, η > 0). The static
/// limit ω → 0, η → 0⁺ reproduces the closed-form static polarizability.
///
/// # Errors
/// [`Error::DegenerateChannel`] at ω = η = 0; [`Error::OnBranchCut`] for
/// η = 0 at or above the ionization threshold.
pub fn dynamic_polarizability(
    bs: &BoundState,
    cfg: &AtomConfig,
    omega: f64,
    eta: f64,
) -> Result<Complex64> {
    dynamic_polarizability_at_field(bs, cfg, 1.0, omega, eta)
}

/// One row of a dispersion scan: frequency, broadening, and α(ω).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DynamicResponse {
    /// Drive frequency ω (atomic units).
    pub omega: f64,
    /// Lorentzian broadening η used to push the poles off the real axis.
    pub eta: f64,
    /// Complex polarizability α(ω + iη).
    pub alpha: Complex64,
}

impl DynamicResponse {
    /// Evaluate α at one frequency point.
    ///
    /// # Errors
    /// As [`dynamic_polarizability`].
    pub fn evaluate(bs: &BoundState, cfg: &AtomConfig, omega: f64, eta: f64) -> Result<Self> {
        Ok(Self {
            omega,
            eta,
            alpha: dynamic_polarizability(bs, cfg, omega, eta)?,
        })
    }
}
