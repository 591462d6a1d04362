//! q-deformed hyperbolic and trigonometric function kernel.
//!
//! The deformed hyperbolic family replaces `e^{-x}` by `q e^{-x}`:
//!
//! ```text
//! sinh_q x = (e^x - q e^{-x}) / 2        cosh_q x = (e^x + q e^{-x}) / 2
//! tanh_q = sinh_q / cosh_q               sech_q = 1 / cosh_q
//! cosh_q^2 x - sinh_q^2 x = q
//! ```
//!
//! The trigonometric family is taken in its real-valued form
//! `sin_q t = sqrt(q) sin t`, `cos_q t = sqrt(q) cos t`, which satisfies
//! `sin_q^2 + cos_q^2 = q` and is the form the downstream angular
//! substitutions actually use. Both families collapse to the standard
//! functions at `q = 1`, and a spatial translation by `ln(sqrt q)/alpha`
//! maps the deformed hyperbolic functions onto `sqrt(q)` times their
//! non-deformed counterparts.
//!
//! Everything is evaluated straight from the exponential definitions; the
//! arguments that occur in practice are O(1) so no series or scaling
//! tricks are needed.

use crate::error::{Error, Result};

/// Validated deformation parameter. `q` must be strictly positive;
/// the literature exercises `0.2 <= q <= 1.4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deformation {
    q: f64,
}

impl Deformation {
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "q",
                value: q,
                reason: "deformation parameter must be finite and > 0",
            });
        }
        Ok(Deformation { q })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `sinh_q x = (e^x - q e^{-x}) / 2`
    pub fn sinh(&self, x: f64) -> f64 {
        (x.exp() - self.q * (-x).exp()) / 2.0
    }

    /// `cosh_q x = (e^x + q e^{-x}) / 2`; strictly positive for q > 0.
    pub fn cosh(&self, x: f64) -> f64 {
        (x.exp() + self.q * (-x).exp()) / 2.0
    }

    /// `tanh_q x = sinh_q x / cosh_q x`
    pub fn tanh(&self, x: f64) -> f64 {
        self.sinh(x) / self.cosh(x)
    }

    /// `sech_q x = 1 / cosh_q x`
    pub fn sech(&self, x: f64) -> f64 {
        1.0 / self.cosh(x)
    }

    /// `sin_q t = sqrt(q) sin t`
    pub fn sin(&self, theta: f64) -> f64 {
        self.q.sqrt() * theta.sin()
    }

    /// `cos_q t = sqrt(q) cos t`
    pub fn cos(&self, theta: f64) -> f64 {
        self.q.sqrt() * theta.cos()
    }

    /// `tan_q t = sin_q t / cos_q t = tan t` (the sqrt(q) factors cancel).
    pub fn tan(&self, theta: f64) -> f64 {
        self.sin(theta) / self.cos(theta)
    }

    /// `sec_q t = 1 / cos_q t`
    pub fn sec(&self, theta: f64) -> f64 {
        1.0 / self.cos(theta)
    }
}

/// Deformed hyperbolic function selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperbolicKind {
    Sinh,
    Cosh,
    Tanh,
    Sech,
}

/// Deformed trigonometric function selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    Sin,
    Cos,
    Tan,
    Sec,
}

/// Evaluate a deformed hyperbolic function at `x`.
///
/// `cosh_q` never vanishes for `q > 0`, so `tanh`/`sech` are total.
pub fn deformed_hyperbolic(kind: HyperbolicKind, q: Deformation, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidParameter {
            name: "x",
            value: x,
            reason: "argument must be finite",
        });
    }
    Ok(match kind {
        HyperbolicKind::Sinh => q.sinh(x),
        HyperbolicKind::Cosh => q.cosh(x),
        HyperbolicKind::Tanh => q.tanh(x),
        HyperbolicKind::Sech => q.sech(x),
    })
}

/// Evaluate a deformed trigonometric function at `theta`.
pub fn deformed_trig(kind: TrigKind, q: Deformation, theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::InvalidParameter {
            name: "theta",
            value: theta,
            reason: "argument must be finite",
        });
    }
    Ok(match kind {
        TrigKind::Sin => q.sin(theta),
        TrigKind::Cos => q.cos(theta),
        TrigKind::Tan => q.tan(theta),
        TrigKind::Sec => q.sec(theta),
    })
}

/// Spatial translation `dr = ln(sqrt q)/alpha` with
/// `sinh_q(alpha (r + dr)) = sqrt(q) sinh(alpha r)` (and likewise cosh).
pub fn deformation_shift(q: Deformation, alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "screening parameter must be finite and > 0",
        });
    }
    Ok(q.q().sqrt().ln() / alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonpositive_q() {
        assert!(Deformation::new(0.0).is_err());
        assert!(Deformation::new(-1.0).is_err());
        assert!(Deformation::new(f64::NAN).is_err());
        assert!(Deformation::new(0.2).is_ok());
    }

    #[test]
    fn values_at_origin() {
        let q1 = Deformation::new(1.0).unwrap();
        assert_eq!(q1.sinh(0.0), 0.0);
        assert_eq!(q1.cosh(0.0), 1.0);
        let qh = Deformation::new(0.5).unwrap();
        assert_eq!(qh.sinh(0.0), 0.25); // (1 - q)/2
    }

    #[test]
    fn trig_values() {
        let q = Deformation::new(4.0).unwrap();
        assert!((q.sin(std::f64::consts::FRAC_PI_2) - 2.0).abs() < 1e-15);
        let q1 = Deformation::new(1.0).unwrap();
        assert!((q1.cos(0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn shift_values() {
        let q1 = Deformation::new(1.0).unwrap();
        assert_eq!(deformation_shift(q1, 0.5).unwrap(), 0.0);
        let qe2 = Deformation::new(std::f64::consts::E.powi(2)).unwrap();
        assert!((deformation_shift(qe2, 1.0).unwrap() - 1.0).abs() < 1e-14);
        let q02 = Deformation::new(0.2).unwrap();
        let expect = 0.2f64.sqrt().ln() / 0.5;
        assert!((deformation_shift(q02, 0.5).unwrap() - expect).abs() < 1e-14);
        assert!(expect < -1.609 && expect > -1.610);
    }

    #[test]
    fn non_finite_argument_rejected() {
        let q = Deformation::new(1.0).unwrap();
        assert!(deformed_hyperbolic(HyperbolicKind::Sinh, q, f64::INFINITY).is_err());
        assert!(deformed_trig(TrigKind::Sin, q, f64::NAN).is_err());
    }
}
