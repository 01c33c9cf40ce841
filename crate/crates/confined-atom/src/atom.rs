//! Domain configuration types: the atom–wall geometry and the external field.
//!
//! The physical system is a one-dimensional attractive δ potential −Zδ(x)
//! ("the atom") with an impenetrable wall at x = −a ("the substrate"), in
//! atomic units (ℏ = e = m = 1). The wall distance is either a finite a > 0
//! or the distinguished *isolated* state standing for a → ∞; the latter is an
//! enum variant rather than a large float so that quantities like e^{2k_b a}
//! never overflow.

use crate::error::{Error, Result};

/// Position of the impenetrable wall relative to the δ potential at x = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Wall {
    /// Hard wall at x = −a with a > 0; the wave function vanishes there.
    Distance(f64),
    /// No wall (a → ∞): the free δ-function atom on the whole line.
    Isolated,
}

/// The physical system: effective nuclear charge and wall geometry.
///
/// Constructed through [`AtomConfig::new`] or [`AtomConfig::isolated`], which
/// validate positivity; the fields are read-only afterwards, so a value can
/// be shared freely across threads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomConfig {
    z: f64,
    wall: Wall,
}

impl AtomConfig {
    /// A δ atom of charge `z` at distance `a` from the wall.
    ///
    /// `z = 0` is allowed and describes an empty box (wall only, no atom);
    /// it supports no bound state but is a valid input for the spectral
    /// oracle, where it reduces to a particle-in-a-box reference problem.
    ///
    /// # Errors
    /// Rejects non-finite or negative `z` and non-finite or non-positive `a`.
    pub fn new(z: f64, a: f64) -> Result<Self> {
        if !z.is_finite() || z < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "charge Z must be finite and ≥ 0, got {z}"
            )));
        }
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "wall distance a must be finite and > 0, got {a}"
            )));
        }
        Ok(Self {
            z,
            wall: Wall::Distance(a),
        })
    }

    /// A δ atom of charge `z` with the wall removed (a → ∞).
    ///
    /// # Errors
    /// Rejects non-finite or non-positive `z`.
    pub fn isolated(z: f64) -> Result<Self> {
        if !z.is_finite() || z <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "charge Z must be finite and > 0, got {z}"
            )));
        }
        Ok(Self {
            z,
            wall: Wall::Isolated,
        })
    }

    /// Effective nuclear charge Z (atomic units).
    #[must_use]
    pub fn z(&self) -> f64 {
        self.z
    }

    /// Wall placement.
    #[must_use]
    pub fn wall(&self) -> Wall {
        self.wall
    }

    /// Wall distance a, or `None` for the isolated atom.
    #[must_use]
    pub fn wall_distance(&self) -> Option<f64> {
        match self.wall {
            Wall::Distance(a) => Some(a),
            Wall::Isolated => None,
        }
    }

    /// `true` when the configuration has no wall.
    #[must_use]
    pub fn is_isolated(&self) -> bool {
        matches!(self.wall, Wall::Isolated)
    }
}

/// Does the configuration support a bound state?
///
/// The wall squeezes the state; a bound solution of the transcendental
/// equation k_b/Z = 1 − e^{−2k_b a} exists iff 2Za > 1 (strict — at equality
/// the would-be state has k_b = 0 and is not normalizable). The isolated atom
/// always binds.
///
/// ```
/// use confined_atom::{supports_bound_state, AtomConfig};
///
/// let squeezed = AtomConfig::new(0.25, 2.0).unwrap();
/// assert!(!supports_bound_state(&squeezed));
/// let barely = AtomConfig::new(0.25, 2.0001).unwrap();
/// assert!(supports_bound_state(&barely));
/// ```
#[must_use]
pub fn supports_bound_state(cfg: &AtomConfig) -> bool {
    match cfg.wall {
        Wall::Isolated => true,
        Wall::Distance(a) => 2.0 * cfg.z * a > 1.0,
    }
}

/// External driving field: static strength, drive frequency, and broadening.
///
/// The broadening η enters every frequency-dependent formula as a positive
/// imaginary part added to ω; it regularizes the continuum poles of the
/// response. A strictly positive η is required whenever ω reaches the
/// ionization threshold k_b²/2 — enforcement happens where k_b is known (the
/// dynamic-response solvers), not here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfig {
    f: f64,
    omega: f64,
    eta: f64,
}

/// Default Lorentzian broadening (atomic units) used by the CLI and the
/// worked examples when none is given.
pub const DEFAULT_ETA: f64 = 0.0018;

impl FieldConfig {
    /// A field with static strength `f`, frequency `omega`, broadening `eta`.
    ///
    /// # Errors
    /// Rejects negative or non-finite entries.
    pub fn new(f: f64, omega: f64, eta: f64) -> Result<Self> {
        for (name, v) in [("F", f), ("omega", omega), ("eta", eta)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be finite and ≥ 0, got {v}"
                )));
            }
        }
        Ok(Self { f, omega, eta })
    }

    /// A purely static field of strength `f`.
    ///
    /// # Errors
    /// Rejects negative or non-finite `f`.
    pub fn static_field(f: f64) -> Result<Self> {
        Self::new(f, 0.0, 0.0)
    }

    /// Static field strength F (atomic units).
    #[must_use]
    pub fn f(&self) -> f64 {
        self.f
    }

    /// Drive frequency ω (atomic units).
    #[must_use]
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Lorentzian broadening η (atomic units).
    #[must_use]
    pub fn eta(&self) -> f64 {
        self.eta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_validate_domain() {
        assert!(AtomConfig::new(1.0, 1.0).is_ok());
        // Z = 0 is the empty-box reference configuration.
        assert!(AtomConfig::new(0.0, 1.0).is_ok());
        assert!(matches!(
            AtomConfig::new(-0.5, 1.0),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            AtomConfig::new(1.0, -2.0),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            AtomConfig::isolated(f64::NAN),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            FieldConfig::new(-0.1, 0.0, 0.0),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn existence_boundary_is_strict() {
        // 2Za = 1 exactly: marginal state is not bound.
        let marginal = AtomConfig::new(0.25, 2.0).unwrap();
        assert!(!supports_bound_state(&marginal));
        let above = AtomConfig::new(0.25, 2.0001).unwrap();
        assert!(supports_bound_state(&above));
        let deep = AtomConfig::new(10.0, 0.2).unwrap();
        assert!(supports_bound_state(&deep));
        let isolated = AtomConfig::isolated(0.01).unwrap();
        assert!(supports_bound_state(&isolated));
    }
}
