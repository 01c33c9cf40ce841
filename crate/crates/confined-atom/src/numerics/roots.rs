//! Root finding: a deterministic bracketed solver for real functions and a
//! damped secant iteration for analytic complex functions.
//!
//! The bracketed solver drives every transcendental equation in the crate
//! (most importantly the bound-state condition). It interleaves secant steps
//! with bisection so the bracket width provably halves at least every other
//! iteration, making the result a pure function of its inputs — identical
//! calls return identical bits.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Find the root of `f` inside the bracket `[lo, hi]`.
///
/// `f` must be continuous with `f(lo)·f(hi) < 0`. The solver refines the
/// bracket with safeguarded secant steps (falling back to bisection whenever
/// the secant point stalls or leaves the interval) until the bracket width is
/// at most `tol`, then returns the endpoint with the smaller residual. An
/// exact zero encountered on the way is returned immediately.
///
/// # Errors
/// [`Error::NoRootInBracket`] when the endpoints do not straddle a sign
/// change; [`Error::InvalidConfig`] for an empty bracket or non-positive
/// tolerance.
///
/// ```
/// use confined_atom::find_root_bracketed;
///
/// let root = find_root_bracketed(&|x: f64| x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
/// assert!((root - 2f64.sqrt()).abs() < 1e-11);
/// ```
pub fn find_root_bracketed(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidConfig(format!(
            "bracket [{lo}, {hi}] is not a finite nonempty interval"
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "tolerance must be finite and > 0, got {tol}"
        )));
    }

    let (mut lo, mut hi) = (lo, hi);
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo * fhi < 0.0) {
        return Err(Error::NoRootInBracket);
    }

    for iteration in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        // Secant candidate through the bracket endpoints; every other
        // iteration uses the midpoint outright so the width is guaranteed to
        // halve at least once per pair of steps.
        let x = if iteration % 2 == 0 {
            let s = lo - flo * (hi - lo) / (fhi - flo);
            let margin = 0.01 * (hi - lo);
            if s.is_finite() && s > lo + margin && s < hi - margin {
                s
            } else {
                mid
            }
        } else {
            mid
        };
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if flo * fx < 0.0 {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }

    Ok(if flo.abs() <= fhi.abs() { lo } else { hi })
}

/// Outcome of [`damped_secant`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct SecantOutcome {
    pub z: Complex64,
    /// |f| at the returned point.
    pub residual: f64,
    pub converged: bool,
    pub iterations: usize,
}

/// Damped secant iteration for an analytic `f`, started from the pair
/// `(z0, z1)`.
///
/// Steps larger than `step_cap` are clipped and steps that grow the residual
/// are halved (up to eight times) before being accepted; evaluation errors
/// from `f` are treated as an infinitely bad residual so the damping walks
/// the iterate back into the valid domain. Convergence means the last
/// accepted step was below `tol` relative to `|z|`.
pub(crate) fn damped_secant(
    f: &dyn Fn(Complex64) -> Result<Complex64>,
    z0: Complex64,
    z1: Complex64,
    tol: f64,
    max_iter: usize,
    step_cap: f64,
) -> Result<SecantOutcome> {
    let eval = |z: Complex64| -> (Complex64, f64) {
        match f(z) {
            Ok(v) if v.re.is_finite() && v.im.is_finite() => (v, v.norm()),
            _ => (Complex64::new(f64::NAN, f64::NAN), f64::INFINITY),
        }
    };

    let (mut fa, mut na) = eval(z0);
    let (mut fb, mut nb) = eval(z1);
    if !na.is_finite() || !nb.is_finite() {
        // Starting points must at least be evaluable.
        f(if na.is_finite() { z1 } else { z0 })?;
    }
    let (mut za, mut zb) = (z0, z1);
    let mut converged = false;
    let mut iterations = 0;

    for it in 0..max_iter {
        iterations = it + 1;
        let denom = fb - fa;
        if denom.norm() == 0.0 {
            break;
        }
        let mut dz = -fb * (zb - za) / denom;
        if !dz.re.is_finite() || !dz.im.is_finite() {
            break;
        }
        if dz.norm() > step_cap {
            dz *= step_cap / dz.norm();
        }
        let mut zc = zb + dz;
        let (mut fc, mut nc) = eval(zc);
        let mut halvings = 0;
        while nc > 2.0 * nb && halvings < 8 {
            dz *= 0.5;
            zc = zb + dz;
            let e = eval(zc);
            fc = e.0;
            nc = e.1;
            halvings += 1;
        }
        if !nc.is_finite() {
            break;
        }
        za = zb;
        fa = fb;
        let _ = na;
        na = nb;
        zb = zc;
        fb = fc;
        nb = nc;
        if dz.norm() <= tol * (zb.norm() + tol) {
            converged = true;
            break;
        }
    }

    Ok(SecantOutcome {
        z: zb,
        residual: nb,
        converged,
        iterations,
    })
}
