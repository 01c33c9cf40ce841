//! A one-dimensional atom pressed against a wall.
//!
//! This crate computes the spectroscopy of the simplest confined atom there
//! is: a single electron bound by the contact potential −Zδ(x), with an
//! impenetrable barrier at x = −a (atomic units throughout: ħ = m = e = 1).
//! The model is exactly solvable in every regime that matters, which makes
//! it a complete laboratory for confinement physics:
//!
//! - **Bound state** ([`solve_bound_state`]): the single level exists only
//!   while 2Za > 1; the wall squeezes it toward the continuum and the decay
//!   rate k_b solves k_b/Z = 1 − e^{−2k_b a}.
//! - **Static response** ([`solve_psi1`], [`static_polarizability`],
//!   [`stark_shift_exact`]): the first-order wavefunction in a field F is an
//!   exponential-polynomial solved in closed form, giving the exact
//!   quadratic Stark shift −½αF² and a polarizability that diverges at the
//!   existence threshold and saturates at 5/(4Z⁴) for a deep well.
//! - **Ionization** ([`solve_resonance`]): with the field on, the level
//!   becomes a resonance ε − iΓ/2; an Airy-function matching condition
//!   pins the complex eigenvalue, reproducing the tunneling rate
//!   (k_b³/Z)e^{−2k_b³/(3F)} at weak field.
//! - **Dynamic response** ([`dynamic_polarizability`]): the driven
//!   first-order problem splits into ± frequency channels with wavevectors
//!   κ_± = √(k_b² ± 2(ω+iη)); above threshold the − channel opens and
//!   Im α(ω) > 0 records one-photon ionization.
//! - **Brute-force oracle** ([`build_hamiltonian`],
//!   [`static_alpha_oracle`]): an independent finite-difference
//!   diagonalization with sum-over-states response, used to cross-check
//!   every closed form above.
//!
//! # Quick start
//!
//! ```
//! use confined_atom::{
//!     solve_bound_state, solve_resonance, static_polarizability, AtomConfig,
//! };
//!
//! # fn main() -> confined_atom::Result<()> {
//! // Unit charge, wall five Bohr radii behind the nucleus.
//! let cfg = AtomConfig::new(1.0, 5.0)?;
//! let bs = solve_bound_state(&cfg, 1e-12)?;
//!
//! // The wall pushes the level slightly above the isolated −Z²/2.
//! assert!(bs.energy() > -0.5 && bs.energy() < -0.4999);
//!
//! // Static polarizability, a few percent below the isolated value 5/4.
//! let alpha = static_polarizability(&bs, &cfg);
//! assert!(alpha > 1.2 && alpha < 1.25);
//!
//! // Switch on F = 0.1: the level shifts down and acquires a width.
//! let res = solve_resonance(&cfg, 0.1, None, 1e-12)?;
//! assert!(res.converged);
//! assert!(res.stark_shift < 0.0);
//! assert!(res.gamma > 0.0);
//! # Ok(())
//! # }
//! ```
//!
//! # Conventions
//!
//! The field couples as V = −Fx with F ≥ 0: the potential tilts downhill
//! toward +x, so ionization proceeds away from the wall, and the
//! field-free expectation ⟨x⟩₀ > 0 makes the dipole coefficient F⟨x⟩₀
//! positive. All public energies, lengths, and rates are atomic units;
//! [`units`] holds the presentation conversions used by the CLI.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod airy;
pub mod atom;
pub mod bound_state;
pub mod dalgarno_lewis;
mod error;
mod exppoly;
pub mod fowler;
pub mod numerics;
pub mod resonance;
pub mod spectral;
pub mod units;

pub use airy::{
    airy_asymptotic_coeffs, airy_ci, airy_ci_prime, airy_eval, AiryPair, MAX_ASYMPTOTIC_INDEX,
    OVERLAP_WINDOW, SUPPORTED_RADIUS,
};
pub use atom::{supports_bound_state, AtomConfig, FieldConfig, Wall, DEFAULT_ETA};
pub use bound_state::{solve_bound_state, wavefunction, BoundState, DEFAULT_ROOT_TOL};
pub use dalgarno_lewis::{
    dipole_coefficient, solve_psi1, stark_shift_exact, static_polarizability, Psi1,
};
pub use error::{Error, Result};
pub use fowler::{
    channel_wavevector, dynamic_polarizability, dynamic_polarizability_at_field, solve_channel,
    ChannelSign, DynamicResponse,
};
pub use numerics::{find_root_bracketed, integrate_adaptive};
pub use resonance::{
    asymptotic_ionization_rate, asymptotic_stark_shift, determinant, scaled_variable,
    solve_resonance, weak_field_limit, ResonanceResult,
};
pub use spectral::{
    build_hamiltonian, default_box_length, dynamic_alpha_oracle, static_alpha_oracle, trk_sum,
    SpectralModel, DEFAULT_GRID_POINTS,
};
