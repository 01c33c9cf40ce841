//! Minimal double-double (≈31 significant digits) arithmetic.
//!
//! The Maclaurin branch of the Airy functions evaluates Ai and Bi on the
//! positive real axis as a difference of two series that agree to the first
//! ~e^{2ζ} relative digits — at the branch-switch radius that is ten of the
//! sixteen double digits gone. Summing in double-double keeps the full f64
//! accuracy of the final, cancelled result. Only the handful of operations
//! the series needs are implemented: error-free sums/products built on
//! `mul_add` (FMA), plus a complex wrapper.

use num_complex::Complex64;

/// Error-free sum: `a + b = s + e` exactly, with `s = fl(a + b)`.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| ≥ |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via FMA: `a·b = p + e` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

/// An unevaluated sum `hi + lo` with `|lo| ≤ ½ulp(hi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    /// Construct from a precomputed (hi, lo) pair, e.g. a 31-digit constant.
    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let r = ((self.hi - p) - e) + self.lo;
        let q2 = r / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    /// Round to nearest double.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.hi.abs()
    }
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    #[inline]
    pub fn from_c64(z: Complex64) -> Self {
        Cdd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub fn add(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    #[inline]
    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    /// Multiply by a real double-double scalar.
    #[inline]
    pub fn mul_dd(self, s: Dd) -> Cdd {
        Cdd {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Cdd {
        Cdd {
            re: self.re.mul_f64(b),
            im: self.im.mul_f64(b),
        }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Cdd {
        Cdd {
            re: self.re.div_f64(b),
            im: self.im.div_f64(b),
        }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Cheap magnitude proxy (1-norm of components) for termination tests.
    #[inline]
    pub fn mag1(self) -> f64 {
        self.re.abs() + self.im.abs()
    }
}
