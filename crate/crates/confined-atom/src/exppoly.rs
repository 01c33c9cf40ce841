//! Sums of polynomial × exponential terms, closed under the calculus the
//! response solvers need.
//!
//! Every first-order wave-function correction in this crate is, piecewise, a
//! finite sum of terms p(x)·e^{μx} with a low-degree polynomial p and a
//! complex rate μ: the homogeneous solutions of d²/dx² − κ² are pure
//! exponentials, the inhomogeneity is the bound orbital times a linear
//! polynomial, and the method of undetermined coefficients never leaves the
//! family. Representing solutions by their coefficient tables instead of on
//! a grid keeps every downstream quantity — matrix elements, boundary values,
//! derivative jumps — exact up to rounding.
//!
//! Segment integrals use three branches chosen by the size of |μ|(|x₀|+|x₁|):
//! a plain polynomial rule at μ = 0, a power series in μ when the product is
//! small (the closed antiderivative cancels catastrophically there), and the
//! exponential antiderivative otherwise. Tail integrals over [x₀, ∞) require
//! a strictly decaying rate and are one antiderivative evaluation.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Rate threshold between the series and antiderivative segment branches.
///
/// Below this value of |μ|(|x₀|+|x₁|) the antiderivative evaluation loses
/// digits to cancellation roughly like 1/(|μΔx|), while the series gains a
/// factor < 1/2 per term; both are comfortably at full precision at the
/// boundary itself.
const SMALL_RATE: f64 = 0.5;

/// One term p(x)·e^{μx} with `coeffs` the polynomial in ascending powers.
#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub mu: Complex64,
    pub coeffs: Vec<Complex64>,
}

impl Term {
    pub fn new(mu: Complex64, coeffs: Vec<Complex64>) -> Self {
        Self { mu, coeffs }
    }

    /// p(x)·e^{μx} at `x`.
    pub fn eval(&self, x: f64) -> Complex64 {
        let mut p = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            p = p * x + c;
        }
        p * (self.mu * x).exp()
    }

    /// d/dx [p e^{μx}] = (p′ + μp) e^{μx}, staying in the family.
    pub fn derivative(&self) -> Term {
        let n = self.coeffs.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, slot) in out.iter_mut().enumerate() {
            let from_prime = if i + 1 < n {
                (i as f64 + 1.0) * self.coeffs[i + 1]
            } else {
                Complex64::new(0.0, 0.0)
            };
            *slot = from_prime + self.mu * self.coeffs[i];
        }
        Term::new(self.mu, out)
    }

    /// Product of two terms: rates add, polynomials convolve.
    pub fn mul(&self, other: &Term) -> Term {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &ci) in self.coeffs.iter().enumerate() {
            for (j, &cj) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += ci * cj;
            }
        }
        Term::new(self.mu + other.mu, coeffs)
    }

    /// ∫_{x0}^{x1} p(x) e^{μx} dx.
    pub fn integral_segment(&self, x0: f64, x1: f64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| c * monomial_segment(n, self.mu, x0, x1))
            .sum()
    }

    /// ∫_{x0}^{∞} p(x) e^{μx} dx; requires Re μ < 0.
    pub fn integral_tail(&self, x0: f64) -> Result<Complex64> {
        if self.mu.re >= 0.0 {
            return Err(Error::Numerical(
                "tail integral requires a decaying exponential rate".into(),
            ));
        }
        // e^{μx} → 0, so the integral is −F(x0) with F the antiderivative.
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| -c * antiderivative_at(n, self.mu, x0))
            .sum())
    }
}

/// ∫ x^n e^{μx} dx over [x0, x1], branch-selected for stability.
fn monomial_segment(n: usize, mu: Complex64, x0: f64, x1: f64) -> Complex64 {
    let p = n as i32 + 1;
    if mu == Complex64::new(0.0, 0.0) {
        return Complex64::new((x1.powi(p) - x0.powi(p)) / f64::from(p), 0.0);
    }
    if mu.norm() * (x0.abs() + x1.abs()) < SMALL_RATE {
        // Expand e^{μx} and integrate each power: the j-th term is
        // μ^j/j! · (x1^{n+j+1} − x0^{n+j+1})/(n+j+1); ratios fall below
        // 1/(2(j+1)), so a few dozen terms reach full precision.
        let mut rate_pow = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..60 {
            let q = p + j;
            let term = rate_pow * ((x1.powi(q) - x0.powi(q)) / f64::from(q));
            sum += term;
            if term.norm() <= 1e-18 * sum.norm() && j > 1 {
                break;
            }
            rate_pow *= mu / (j as f64 + 1.0);
        }
        return sum;
    }
    antiderivative_at(n, mu, x1) - antiderivative_at(n, mu, x0)
}

/// Antiderivative of x^n e^{μx}: e^{μx} Σ_{m=0}^{n} (−1)^{n−m} (n!/m!) x^m / μ^{n−m+1}.
fn antiderivative_at(n: usize, mu: Complex64, x: f64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    // Walk m = n down to 0, accumulating (−1)^{n−m} n!/m! and μ^{−(n−m+1)}.
    let mut factor = Complex64::new(1.0, 0.0) / mu;
    let mut sign_ratio = 1.0;
    for m in (0..=n).rev() {
        sum += sign_ratio * factor * x.powi(m as i32);
        factor /= mu;
        sign_ratio *= -(m as f64);
    }
    sum * (mu * x).exp()
}

/// A finite sum of [`Term`]s; the empty sum is the zero function.
#[derive(Clone, Debug, Default)]
pub(crate) struct ExpPoly {
    pub terms: Vec<Term>,
}

impl ExpPoly {
    pub fn new(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.terms.iter().map(|t| t.eval(x)).sum()
    }

    pub fn derivative(&self) -> ExpPoly {
        ExpPoly::new(self.terms.iter().map(Term::derivative).collect())
    }

    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for t in &self.terms {
            for u in &other.terms {
                terms.push(t.mul(u));
            }
        }
        ExpPoly::new(terms)
    }

    /// Multiply by the monomial x (shift every polynomial up one degree).
    pub fn times_x(&self) -> ExpPoly {
        ExpPoly::new(
            self.terms
                .iter()
                .map(|t| {
                    let mut coeffs = Vec::with_capacity(t.coeffs.len() + 1);
                    coeffs.push(Complex64::new(0.0, 0.0));
                    coeffs.extend_from_slice(&t.coeffs);
                    Term::new(t.mu, coeffs)
                })
                .collect(),
        )
    }

    pub fn scaled(&self, c: Complex64) -> ExpPoly {
        ExpPoly::new(
            self.terms
                .iter()
                .map(|t| Term::new(t.mu, t.coeffs.iter().map(|&ci| ci * c).collect()))
                .collect(),
        )
    }

    pub fn plus(&self, other: &ExpPoly) -> ExpPoly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ExpPoly::new(terms)
    }

    /// The mirrored function x ↦ f(−x) (rates negate, odd coefficients flip).
    pub fn reflect(&self) -> ExpPoly {
        ExpPoly::new(
            self.terms
                .iter()
                .map(|t| {
                    let coeffs = t
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
                        .collect();
                    Term::new(-t.mu, coeffs)
                })
                .collect(),
        )
    }

    pub fn integral_segment(&self, x0: f64, x1: f64) -> Complex64 {
        self.terms.iter().map(|t| t.integral_segment(x0, x1)).sum()
    }

    pub fn integral_tail(&self, x0: f64) -> Result<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            sum += t.integral_tail(x0)?;
        }
        Ok(sum)
    }
}
