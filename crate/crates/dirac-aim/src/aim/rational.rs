//! Rational functions with denominators restricted to `z^a (1-z)^b`.
//!
//! Every coefficient function appearing in the AIM recurrences of this
//! problem family has poles only at `z = 0` and `z = 1`, so denominators
//! are tracked as the exponent pair `(a, b)` instead of a free polynomial.
//! This keeps pole bookkeeping exact (no polynomial GCDs, no drifting
//! roots) while the numerators stay ordinary dense polynomials.

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// `num / (z^den_z (1-z)^den_omz)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    num: Polynomial,
    den_z: u32,
    den_omz: u32,
}

impl RationalFn {
    pub fn new(num: Polynomial, den_z: u32, den_omz: u32) -> Self {
        RationalFn {
            num,
            den_z,
            den_omz,
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFn::new(p, 0, 0)
    }

    pub fn constant(c: f64) -> Self {
        RationalFn::from_polynomial(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    /// Denominator expanded to an explicit polynomial.
    pub fn den(&self) -> Polynomial {
        Polynomial::pole_basis(self.den_z, self.den_omz)
    }

    pub fn den_exponents(&self) -> (u32, u32) {
        (self.den_z, self.den_omz)
    }

    /// Degree of the numerator, `None` if zero.
    pub fn num_degree(&self) -> Option<usize> {
        self.num.degree()
    }

    /// Evaluate at `z`; returns an error at the poles `z = 0`, `z = 1`
    /// (when the corresponding exponent is nonzero).
    pub fn eval(&self, z: f64) -> Result<f64> {
        let den = z.powi(self.den_z as i32) * (1.0 - z).powi(self.den_omz as i32);
        if den == 0.0 {
            return Err(Error::PoleAtZ0(z));
        }
        Ok(self.num.eval(z) / den)
    }

    /// Quotient-rule derivative, staying inside the pole family:
    ///
    /// ```text
    /// d/dz [N / (z^a (1-z)^b)]
    ///   = [N' z(1-z) - N (a(1-z) - b z)] / (z^{a+1} (1-z)^{b+1})
    /// ```
    pub fn derivative(&self) -> RationalFn {
        let a = self.den_z as f64;
        let b = self.den_omz as f64;
        let z_one_minus_z = Polynomial::new(vec![0.0, 1.0, -1.0]); // z - z^2
        // a(1-z) - b z = a - (a+b) z
        let shift = Polynomial::new(vec![a, -(a + b)]);
        let num = self
            .num
            .derivative()
            .mul(&z_one_minus_z)
            .sub(&self.num.mul(&shift));
        RationalFn::new(num, self.den_z + 1, self.den_omz + 1)
    }

    /// Lift this function onto the common denominator `(a, b)`;
    /// `a >= den_z`, `b >= den_omz` is required.
    fn lift(&self, a: u32, b: u32) -> Polynomial {
        debug_assert!(a >= self.den_z && b >= self.den_omz);
        let extra = Polynomial::pole_basis(a - self.den_z, b - self.den_omz);
        self.num.mul(&extra)
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        let a = self.den_z.max(other.den_z);
        let b = self.den_omz.max(other.den_omz);
        RationalFn::new(self.lift(a, b).add(&other.lift(a, b)), a, b)
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            self.num.mul(&other.num),
            self.den_z + other.den_z,
            self.den_omz + other.den_omz,
        )
    }

    pub fn scale(&self, s: f64) -> RationalFn {
        RationalFn::new(self.num.scale(s), self.den_z, self.den_omz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_one_over_z() {
        // d/dz (1/z) = -1/z^2
        let f = RationalFn::new(Polynomial::constant(1.0), 1, 0);
        let d = f.derivative();
        for &z in &[0.3, 0.5, 0.9, 2.0] {
            let expect = -1.0 / (z * z);
            assert!((d.eval(z).unwrap() - expect).abs() <= 1e-12 * expect.abs());
        }
    }

    #[test]
    fn derivative_of_z_over_one_minus_z() {
        // d/dz (z/(1-z)) = 1/(1-z)^2
        let f = RationalFn::new(Polynomial::monomial(1.0, 1), 0, 1);
        let d = f.derivative();
        for &z in &[0.1, 0.4, 0.7] {
            let expect = 1.0 / ((1.0 - z) * (1.0 - z));
            assert!((d.eval(z).unwrap() - expect).abs() <= 1e-12 * expect.abs());
        }
    }

    #[test]
    fn add_and_mul_agree_pointwise() {
        let f = RationalFn::new(Polynomial::new(vec![1.0, 2.0]), 1, 0);
        let g = RationalFn::new(Polynomial::new(vec![-1.0, 0.0, 3.0]), 0, 2);
        for &z in &[0.2, 0.5, 0.8] {
            let fv = f.eval(z).unwrap();
            let gv = g.eval(z).unwrap();
            assert!((f.add(&g).eval(z).unwrap() - (fv + gv)).abs() < 1e-12);
            assert!((f.mul(&g).eval(z).unwrap() - fv * gv).abs() < 1e-12);
        }
    }

    #[test]
    fn pole_detected() {
        let f = RationalFn::new(Polynomial::constant(1.0), 1, 1);
        assert!(f.eval(0.0).is_err());
        assert!(f.eval(1.0).is_err());
        assert!(f.eval(0.5).is_ok());
    }
}
