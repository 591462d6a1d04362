//! Pekeris-type approximation of the centrifugal term `1/r^2` in the
//! deformed exponential basis, plus the centrifugal strength `omega`.
//!
//! The centrifugal term is replaced by
//!
//! ```text
//! 1/r^2  ~  g(r) = (1/r_e^2) (c0 + c1 u + c2 u^2),
//! u(r) = -e^{-2 a r} / (1 + q e^{-2 a r})
//! ```
//!
//! with `(c0, c1, c2)` fixed by matching `g` to `1/r^2` in value, first,
//! and second derivative at the equilibrium distance `r_e`. The matching
//! conditions form a 3x3 linear system in the coefficients, solved here
//! by Cramer's rule (the matrix is triangular in the value row and far
//! from singular for any `a r_e > 0`).

use crate::error::{Error, Result};
use crate::qdeform::Deformation;

/// Matched expansion coefficients together with the parameters that
/// produced them.
#[derive(Debug, Clone, Copy)]
pub struct PekerisCoeffs {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub r_e: f64,
    pub q: f64,
    pub alpha: f64,
}

/// The strength `omega = (l' + (D-1)/2)(l' + (D-3)/2) / r_e^2` the
/// centrifugal term carries into the radial equation.
#[derive(Debug, Clone, Copy)]
pub struct CentrifugalStrength {
    pub omega: f64,
    pub ell_prime: f64,
    pub dimension: u32,
}

/// `omega` for orbital number `l' >= 0` in dimension `D >= 3`.
pub fn centrifugal_omega(ell_prime: f64, dimension: u32, r_e: f64) -> Result<CentrifugalStrength> {
    if dimension < 3 {
        return Err(Error::InvalidParameter {
            name: "D",
            value: dimension as f64,
            reason: "dimension must be >= 3",
        });
    }
    if !(r_e > 0.0) {
        return Err(Error::InvalidParameter {
            name: "r_e",
            value: r_e,
            reason: "equilibrium distance must be > 0",
        });
    }
    if !(ell_prime >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "ell_prime",
            value: ell_prime,
            reason: "orbital number must be >= 0",
        });
    }
    let d = dimension as f64;
    let omega = (ell_prime + (d - 1.0) / 2.0) * (ell_prime + (d - 3.0) / 2.0) / (r_e * r_e);
    Ok(CentrifugalStrength {
        omega,
        ell_prime,
        dimension,
    })
}

/// `u(r)` and its first two radial derivatives.
fn u_and_derivatives(q: f64, alpha: f64, r: f64) -> (f64, f64, f64) {
    let t = (-2.0 * alpha * r).exp();
    let d = 1.0 + q * t;
    let u = -t / d;
    let up = 2.0 * alpha * t / (d * d);
    let upp = -4.0 * alpha * alpha * t * (1.0 - q * t) / (d * d * d);
    (u, up, upp)
}

/// Solve the 3x3 matching system for `(c0, c1, c2)`.
pub fn pekeris_coeffs(q: Deformation, alpha: f64, r_e: f64) -> Result<PekerisCoeffs> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "screening parameter must be finite and > 0",
        });
    }
    if !(r_e > 0.0) || !r_e.is_finite() {
        return Err(Error::InvalidParameter {
            name: "r_e",
            value: r_e,
            reason: "equilibrium distance must be > 0",
        });
    }
    let (u, up, upp) = u_and_derivatives(q.q(), alpha, r_e);

    // Matching at r_e (after multiplying by r_e^2):
    //   c0 + c1 u      + c2 u^2                 = 1
    //        c1 u'     + c2 (2 u u')            = -2 / r_e
    //        c1 u''    + c2 (2 u'^2 + 2 u u'')  =  6 / r_e^2
    let m = [
        [1.0, u, u * u],
        [0.0, up, 2.0 * u * up],
        [0.0, upp, 2.0 * (up * up + u * upp)],
    ];
    let rhs = [1.0, -2.0 / r_e, 6.0 / (r_e * r_e)];

    let det3 = |a: &[[f64; 3]; 3]| -> f64 {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let det = det3(&m);
    // The sub-determinant u' * 2(u'^2 + u u'') - u'' * 2 u u' is a smooth
    // nonzero function of a*r_e > 0; a vanishing determinant would mean
    // the matching basis degenerated, which cannot happen here.
    assert!(
        det != 0.0 && det.is_finite(),
        "degenerate Pekeris matching system (a*r_e = {})",
        alpha * r_e
    );

    let mut c = [0.0; 3];
    for (j, slot) in c.iter_mut().enumerate() {
        let mut mj = m;
        for i in 0..3 {
            mj[i][j] = rhs[i];
        }
        *slot = det3(&mj) / det;
    }

    Ok(PekerisCoeffs {
        c0: c[0],
        c1: c[1],
        c2: c[2],
        r_e,
        q: q.q(),
        alpha,
    })
}

/// Evaluate the approximation `g(r)` to `1/r^2`.
pub fn pekeris_eval(coeffs: &PekerisCoeffs, r: f64) -> f64 {
    let (u, _, _) = u_and_derivatives(coeffs.q, coeffs.alpha, r);
    (coeffs.c0 + coeffs.c1 * u + coeffs.c2 * u * u) / (coeffs.r_e * coeffs.r_e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_values() {
        assert_eq!(centrifugal_omega(0.0, 3, 1.0).unwrap().omega, 0.0);
        assert_eq!(centrifugal_omega(1.0, 3, 1.0).unwrap().omega, 2.0);
        let w = centrifugal_omega(1.0, 5, 0.1671).unwrap().omega;
        assert!((w - 6.0 / (0.1671 * 0.1671)).abs() < 1e-9);
        assert!(centrifugal_omega(1.0, 2, 1.0).is_err());
        assert!(centrifugal_omega(1.0, 3, 0.0).is_err());
    }

    #[test]
    fn matching_value_is_exact() {
        let q = Deformation::new(0.8).unwrap();
        let c = pekeris_coeffs(q, 0.5, 0.1335).unwrap();
        let target = 1.0 / (0.1335f64 * 0.1335);
        assert!((pekeris_eval(&c, 0.1335) - target).abs() <= 1e-12 * target);
    }

    #[test]
    fn golden_coefficients_q1() {
        // Frozen from an independent linear-algebra oracle
        // (NumPy solve of the same matching system).
        let q = Deformation::new(1.0).unwrap();
        let c = pekeris_coeffs(q, 0.5, 0.1671).unwrap();
        assert!((c.c0 - 343.37656270959224).abs() < 1e-8);
        assert!((c.c1 - 1542.2544791071912).abs() < 1e-7);
        assert!((c.c2 - 1735.0958598168331).abs() < 1e-7);
    }
}
