//! Atomic-unit conventions and presentation-layer conversions.
//!
//! Everything in this crate computes in Hartree atomic units (ℏ = e = m = 1):
//! lengths in bohr, energies in hartree, fields in hartree/(e·bohr). The
//! constants here exist so that front ends can *display* familiar units; no
//! numerical routine converts internally.

/// One bohr radius in nanometres.
pub const BOHR_NM: f64 = 0.0529;

/// One hartree in electronvolts.
pub const HARTREE_EV: f64 = 27.211;

/// Convert a length from bohr to nanometres (display helper).
#[must_use]
pub fn bohr_to_nm(length_au: f64) -> f64 {
    length_au * BOHR_NM
}

/// Convert an energy from hartree to electronvolts (display helper).
#[must_use]
pub fn hartree_to_ev(energy_au: f64) -> f64 {
    energy_au * HARTREE_EV
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_scale_linearly() {
        assert_eq!(bohr_to_nm(10.0), 0.529);
        assert_eq!(hartree_to_ev(0.5), 13.6055);
    }
}
