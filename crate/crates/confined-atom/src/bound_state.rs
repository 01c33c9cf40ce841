//! The unperturbed confined atom: existence, the transcendental equation for
//! the bound wave vector, and the normalized ground-state wave function.
//!
//! A δ well −Zδ(x) next to a hard wall at x = −a binds a single state
//!
//! ```text
//! u_b(x) = 2A e^{−k_b a} sinh(k_b (x + a))   for −a < x < 0,
//! u_b(x) = 2A e^{−k_b a} sinh(k_b a) e^{−k_b x}   for x > 0,
//! ```
//!
//! with energy ε_b = −k_b²/2, where k_b solves k_b/Z = 1 − e^{−2 k_b a}.
//! Besides the trivial k = 0 this equation has exactly one root, and only if
//! 2Za > 1: the wall steals binding. As a → ∞ the root climbs to the free
//! value k_b = Z. Internally the sinh pieces are kept in the overflow-free
//! form A(e^{k_b x} − e^{−k_b (x+2a)}), which is identical algebraically and
//! stays bounded for arbitrarily large k_b·a.

use crate::atom::{supports_bound_state, AtomConfig, Wall};
use crate::error::{Error, Result};
use crate::numerics::find_root_bracketed;

/// Default absolute tolerance for the bound-state root.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// The ground state of the confined atom.
///
/// Produced by [`solve_bound_state`]; all quantities in atomic units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    k_b: f64,
    energy: f64,
    norm_a: f64,
}

impl BoundState {
    /// Bound wave vector k_b (> 0).
    #[must_use]
    pub fn k_b(&self) -> f64 {
        self.k_b
    }

    /// Energy ε_b = −k_b²/2 (< 0).
    #[must_use]
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Normalization coefficient A with A² = k_b/(1 − e^{−2k_b a}(1 + 2k_b a))
    /// for a finite wall and A² = k_b for the isolated atom.
    #[must_use]
    pub fn norm_a(&self) -> f64 {
        self.norm_a
    }
}

/// Compute `1 − (1+x)e^{−x}` without cancellation for small `x ≥ 0`.
///
/// Needed by the normalization: the expression is O(x²) as x → 0 while both
/// terms are O(1). Below x = 0.5 the alternating series
/// Σ_{n≥2} (−1)ⁿ (n−1) xⁿ/n! is summed instead.
pub(crate) fn one_minus_one_plus_x_exp_neg_x(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x >= 0.5 {
        return 1.0 - (1.0 + x) * (-x).exp();
    }
    // p holds xⁿ/n!, starting at n = 2.
    let mut p = 0.5 * x * x;
    let mut sign = 1.0;
    let mut sum = 0.0;
    for n in 2..40 {
        let term = sign * (n as f64 - 1.0) * p;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
        p *= x / (n as f64 + 1.0);
        sign = -sign;
    }
    sum
}

/// Solve the transcendental bound-state condition for `cfg`.
///
/// For a finite wall the residual function g(k) = k/Z − 1 + e^{−2ka}
/// (evaluated as `k/Z + expm1(−2ka)` so the behaviour near k = 0 is exact)
/// has the trivial root k = 0 and, because g′(0) = 1/Z − 2a < 0 whenever a
/// bound state exists, exactly one nonzero root in (0, Z). The bracket
/// `[Z·10⁻¹⁴, Z]` excludes the trivial root; `tol` is the absolute bracket
/// width at acceptance. The isolated atom is returned in closed form
/// (k_b = Z).
///
/// # Errors
/// [`Error::NoBoundState`] when 2Za ≤ 1; [`Error::InvalidConfig`] for a bad
/// tolerance.
///
/// ```
/// use confined_atom::{solve_bound_state, AtomConfig};
///
/// let atom = AtomConfig::isolated(1.0).unwrap();
/// let bs = solve_bound_state(&atom, 1e-12).unwrap();
/// assert_eq!(bs.k_b(), 1.0);
/// assert_eq!(bs.energy(), -0.5);
/// ```
pub fn solve_bound_state(cfg: &AtomConfig, tol: f64) -> Result<BoundState> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "tolerance must be finite and > 0, got {tol}"
        )));
    }
    if !supports_bound_state(cfg) {
        return Err(Error::NoBoundState);
    }
    let z = cfg.z();
    match cfg.wall() {
        Wall::Isolated => Ok(BoundState {
            k_b: z,
            energy: -0.5 * z * z,
            norm_a: z.sqrt(),
        }),
        Wall::Distance(a) => {
            let g = |k: f64| k / z + (-2.0 * k * a).exp_m1();
            let k_b = find_root_bracketed(&g, z * 1e-14, z, tol)?;
            let denom = one_minus_one_plus_x_exp_neg_x(2.0 * k_b * a);
            Ok(BoundState {
                k_b,
                energy: -0.5 * k_b * k_b,
                norm_a: (k_b / denom).sqrt(),
            })
        }
    }
}

/// Evaluate the normalized bound wave function u_b at `x`.
///
/// Returns 0 behind the wall (x ≤ −a). The function is continuous
/// everywhere; its derivative jumps by −2Z·u_b(0) across the δ at the
/// origin.
///
/// ```
/// use confined_atom::{solve_bound_state, wavefunction, AtomConfig};
///
/// let atom = AtomConfig::new(1.0, 3.0).unwrap();
/// let bs = solve_bound_state(&atom, 1e-12).unwrap();
/// assert_eq!(wavefunction(&bs, &atom, -3.0), 0.0);
/// let below = wavefunction(&bs, &atom, -1e-9);
/// let above = wavefunction(&bs, &atom, 1e-9);
/// assert!((below - above).abs() < 1e-8 * above.abs());
/// ```
/// The bound orbital as exponential-polynomial pieces (left of 0, right of 0),
/// for closed-form matrix elements in the response solvers.
///
/// The left piece lives on (−a, 0) (or (−∞, 0) when isolated), the right on
/// (0, ∞); both avoid growing exponentials so they stay finite for any wall
/// distance.
pub(crate) fn orbital_pieces(
    bs: &BoundState,
    cfg: &AtomConfig,
) -> (crate::exppoly::ExpPoly, crate::exppoly::ExpPoly) {
    use crate::exppoly::{ExpPoly, Term};
    use num_complex::Complex64;
    let k = bs.k_b;
    let a_norm = bs.norm_a;
    let cc = |v: f64| Complex64::new(v, 0.0);
    match cfg.wall() {
        Wall::Isolated => (
            ExpPoly::new(vec![Term::new(cc(k), vec![cc(a_norm)])]),
            ExpPoly::new(vec![Term::new(cc(-k), vec![cc(a_norm)])]),
        ),
        Wall::Distance(a) => {
            let e2 = (-2.0 * k * a).exp();
            let b = a_norm * (-(-2.0 * k * a).exp_m1());
            (
                ExpPoly::new(vec![
                    Term::new(cc(k), vec![cc(a_norm)]),
                    Term::new(cc(-k), vec![cc(-a_norm * e2)]),
                ]),
                ExpPoly::new(vec![Term::new(cc(-k), vec![cc(b)])]),
            )
        }
    }
}

/// Normalized bound orbital u_b(x): A(e^{k_b x} − e^{−k_b(x+2a)}) between
/// the wall and the nucleus, B·e^{−k_b x} outside, identically zero behind
/// the wall; the isolated form is A·e^{−k_b|x|}. Written overflow-free so
/// deep wells (large k_b·a) evaluate cleanly.
#[must_use]
pub fn wavefunction(bs: &BoundState, cfg: &AtomConfig, x: f64) -> f64 {
    let k = bs.k_b;
    let a_norm = bs.norm_a;
    match cfg.wall() {
        Wall::Isolated => a_norm * (-k * x.abs()).exp(),
        Wall::Distance(a) => {
            if x <= -a {
                0.0
            } else if x < 0.0 {
                // 2A e^{−ka} sinh(k(x+a)) written overflow-free.
                a_norm * ((k * x).exp() - (-k * (x + 2.0 * a)).exp())
            } else {
                a_norm * (-(-2.0 * k * a).exp_m1()) * (-k * x).exp()
            }
        }
    }
}
