//! Shared numerical utilities: bracketed root finding, adaptive quadrature,
//! and the double-double arithmetic backing the special-function series.
//!
//! Everything here is deterministic and allocation-light; the public surface
//! is the two real-analysis workhorses re-exported at the crate root.

pub(crate) mod dd;
pub mod quad;
pub mod roots;

pub use quad::integrate_adaptive;
pub use roots::find_root_bracketed;

pub(crate) use roots::damped_secant;
