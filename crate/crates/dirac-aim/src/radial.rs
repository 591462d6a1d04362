//! Radial sector: parameter substitutions, the closed-form AIM
//! eigenvalue, the relativistic energy residual, and unnormalized radial
//! wave functions.
//!
//! After the Pekeris replacement of the centrifugal term, the radial
//! equation collapses to a hypergeometric problem in
//! `z = (1 - tanh_q(alpha r)) / 2` with parameters
//!
//! ```text
//! a^2 E'       = -(W + (M^2 - E^2)),   W = w (c0 - c1/(2 sqrt q) + c2/(2q))
//! a^2 rho      = w (c1/(2 sqrt q) - c2/(2q)) + V1 (M + E)
//! a^2 nu(nu+1) = w c2 / 4 + V0 (M + E)
//! 4 d^2 = rho - E',  4 g^2 = -rho - E',  eps_n = nu(nu+1)/q
//! ```
//!
//! and the AIM termination condition `eps_n = (d + g + n)(d + g + n + 1)`
//! turns into the transcendental energy relation
//!
//! ```text
//! M^2 - E^2 = a^2 [ rho^2 / (4 Y^2) + Y^2 ] - W,
//! Y = sqrt(eps_n + 1/4) - n - 1/2
//! ```
//!
//! whose signed left-minus-right value is what [`energy_residual`]
//! returns to the spectrum module's root finder.

use crate::aim::{hypergeom_2f1_terminating, pochhammer, Polynomial, RationalFn};
use crate::error::{Error, Result};
use crate::pekeris::PekerisCoeffs;
use crate::qdeform::Deformation;

/// Physical parameters of the radial problem.
#[derive(Debug, Clone, Copy)]
pub struct RadialConfig {
    /// Rosen-Morse well depth (sech_q^2 strength).
    pub v0: f64,
    /// Rosen-Morse asymmetry (tanh_q strength).
    pub v1: f64,
    /// Screening parameter (fm^-1).
    pub alpha: f64,
    pub q: Deformation,
    /// Mass (fm^-1).
    pub m: f64,
    /// Spin-symmetry constant (fm^-1); 0 in every scenario exercised here.
    pub c_s: f64,
    /// Spatial dimension (3 or 5).
    pub dimension: u32,
    /// Radial quantum number.
    pub n: u32,
}

impl RadialConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: self.alpha,
                reason: "screening parameter must be > 0",
            });
        }
        if !(self.m > 0.0) {
            return Err(Error::InvalidParameter {
                name: "M",
                value: self.m,
                reason: "mass must be > 0",
            });
        }
        if self.dimension != 3 && self.dimension != 5 {
            return Err(Error::InvalidParameter {
                name: "D",
                value: self.dimension as f64,
                reason: "dimension must be 3 or 5",
            });
        }
        Ok(())
    }
}

/// Substituted radial parameters at one energy.
#[derive(Debug, Clone, Copy)]
pub struct RadialShape {
    pub e_prime: f64,
    pub rho: f64,
    /// `nu(nu+1)`.
    pub nu_nu1: f64,
    pub delta: f64,
    pub gamma: f64,
    /// `eps_n = nu(nu+1)/q`.
    pub eps_n: f64,
}

/// The raw substitutions shared by the residual and the shape builder.
fn raw_params(cfg: &RadialConfig, e: f64, omega: f64, coeffs: &PekerisCoeffs) -> (f64, f64, f64, f64) {
    let q = cfg.q.q();
    let sq = q.sqrt();
    let a2 = cfg.alpha * cfg.alpha;
    let me = cfg.m + e;
    let w_term = omega * (coeffs.c0 - coeffs.c1 / (2.0 * sq) + coeffs.c2 / (2.0 * q));
    let e_prime = -(w_term + (cfg.m * cfg.m - e * e)) / a2;
    let rho = (omega * (coeffs.c1 / (2.0 * sq) - coeffs.c2 / (2.0 * q)) + cfg.v1 * me) / a2;
    let nu_nu1 = (omega * coeffs.c2 / 4.0 + cfg.v0 * me) / a2;
    (w_term, e_prime, rho, nu_nu1)
}

/// Full substituted shape. The exponents come from the termination
/// condition with `Y = nu - n`: `delta = (Y + rho/(2Y))/2` and
/// `gamma = (Y - rho/(2Y))/2`. These are the *signed* roots of
/// `delta^2 = (rho - E')/4` and `gamma^2 = (-rho - E')/4` at a residual
/// zero; taking square roots there instead would silently flip the sign
/// of a negative exponent and admit states whose polynomial ansatz does
/// not solve the equation. Negative values are reported as-is and
/// rejected by the admissibility filter.
pub fn substituted_params(
    cfg: &RadialConfig,
    e: f64,
    omega: f64,
    coeffs: &PekerisCoeffs,
) -> Result<RadialShape> {
    let (_, e_prime, rho, nu_nu1) = raw_params(cfg, e, omega, coeffs);
    let eps_n = nu_nu1 / cfg.q.q();
    let under = eps_n + 0.25;
    if under < 0.0 {
        return Err(Error::NotBoundState("eps_n + 1/4 < 0"));
    }
    let y = under.sqrt() - cfg.n as f64 - 0.5;
    if y == 0.0 {
        return Err(Error::QuantizationPole(e));
    }
    Ok(RadialShape {
        e_prime,
        rho,
        nu_nu1,
        delta: (y + rho / (2.0 * y)) / 2.0,
        gamma: (y - rho / (2.0 * y)) / 2.0,
        eps_n,
    })
}

/// Signed relativistic energy residual
/// `(M^2 - E^2) - (a^2 [rho^2/(4 Y^2) + Y^2] - W)` with
/// `Y = sqrt(eps_n + 1/4) - n - 1/2`.
pub fn energy_residual(
    cfg: &RadialConfig,
    e: f64,
    omega: f64,
    coeffs: &PekerisCoeffs,
) -> Result<f64> {
    let (w_term, _, rho, nu_nu1) = raw_params(cfg, e, omega, coeffs);
    let eps_n = nu_nu1 / cfg.q.q();
    let under = eps_n + 0.25;
    if under < 0.0 {
        return Err(Error::NotBoundState("eps_n + 1/4 < 0"));
    }
    let y = under.sqrt() - cfg.n as f64 - 0.5;
    if y == 0.0 {
        return Err(Error::QuantizationPole(e));
    }
    let a2 = cfg.alpha * cfg.alpha;
    Ok((cfg.m * cfg.m - e * e) - (a2 * (rho * rho / (4.0 * y * y) + y * y) - w_term))
}

/// Same residual through the quadratic-formula route for the termination
/// condition: solving `eps_n = (x + n + 1)^2 - (x + n + 1)` for `x` gives
/// `Y = (1 + sqrt(1 + 4 eps_n))/2 - (n + 1)`. Algebraically identical to
/// [`energy_residual`]; kept as an independent arithmetic path for
/// equivalence testing.
pub fn energy_residual_eq61(
    cfg: &RadialConfig,
    e: f64,
    omega: f64,
    coeffs: &PekerisCoeffs,
) -> Result<f64> {
    let (w_term, _, rho, nu_nu1) = raw_params(cfg, e, omega, coeffs);
    let eps_n = nu_nu1 / cfg.q.q();
    let disc = 1.0 + 4.0 * eps_n;
    if disc < 0.0 {
        return Err(Error::NotBoundState("eps_n + 1/4 < 0"));
    }
    let y = (1.0 + disc.sqrt()) / 2.0 - (cfg.n as f64 + 1.0);
    if y == 0.0 {
        return Err(Error::QuantizationPole(e));
    }
    let a2 = cfg.alpha * cfg.alpha;
    Ok((cfg.m * cfg.m - e * e) - (a2 * (rho * rho / (4.0 * y * y) + y * y) - w_term))
}

/// Unnormalized radial wave function
/// `F_n(r) = z^d (1-z)^g (-1)^n (2d + 1)_n 2F1(-n, 2d + 2g + n + 1; 2d + 1; z)`
/// with `z = (1 - tanh_q(alpha r)) / 2`.
pub fn radial_wavefunction(
    shape: &RadialShape,
    cfg: &RadialConfig,
    n: u32,
    r: f64,
) -> Result<f64> {
    if !(shape.delta > 0.0 && shape.gamma > 0.0) {
        return Err(Error::NotBoundState("delta or gamma not positive"));
    }
    if !(r > 0.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            reason: "radius must be > 0",
        });
    }
    let z = (1.0 - cfg.q.tanh(cfg.alpha * r)) / 2.0;
    let n = n as usize;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let prefactor = sign * pochhammer(2.0 * shape.delta + 1.0, n);
    let f = hypergeom_2f1_terminating(
        n,
        2.0 * shape.delta + 2.0 * shape.gamma + n as f64 + 1.0,
        2.0 * shape.delta + 1.0,
        z,
    )?;
    Ok(z.powf(shape.delta) * (1.0 - z).powf(shape.gamma) * prefactor * f)
}

/// AIM coefficient family of the radial equation in `z`:
/// `l0 = ((2d + 2g + 2) z - (2d + 1)) / (z(1-z))`,
/// `s0(eps) = ((d + g)(d + g + 1) - eps) / (z(1-z))`;
/// the eigenvalues are `eps_n = (d + g + n)(d + g + n + 1)`.
pub fn radial_aim_family(delta: f64, gamma: f64) -> impl Fn(f64) -> (RationalFn, RationalFn) {
    move |eps: f64| {
        let l0 = RationalFn::new(
            Polynomial::new(vec![-(2.0 * delta + 1.0), 2.0 * delta + 2.0 * gamma + 2.0]),
            1,
            1,
        );
        let s = delta + gamma;
        let s0 = RationalFn::new(Polynomial::constant(s * (s + 1.0) - eps), 1, 1);
        (l0, s0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pekeris::pekeris_coeffs;

    fn cfg(n: u32) -> RadialConfig {
        RadialConfig {
            v0: 6.0,
            v1: -1.0,
            alpha: 0.5,
            q: Deformation::new(1.0).unwrap(),
            m: 5.0,
            c_s: 0.0,
            dimension: 5,
            n,
        }
    }

    #[test]
    fn zero_potential_trivia() {
        let c = cfg(0);
        let coeffs = pekeris_coeffs(c.q, c.alpha, 0.1671).unwrap();
        // V1 = 0 and omega = 0 kill rho.
        let mut c2 = c;
        c2.v1 = 0.0;
        let shape = substituted_params(&c2, -1.0, 0.0, &coeffs).unwrap();
        assert_eq!(shape.rho, 0.0);
        // V0 = 0 and omega = 0 kill nu(nu+1).
        let mut c3 = c;
        c3.v0 = 0.0;
        let (_, _, _, nn1) = raw_params(&c3, -1.0, 0.0, &coeffs);
        assert_eq!(nn1, 0.0);
    }

    #[test]
    fn residual_paths_agree() {
        let c = cfg(1);
        let coeffs = pekeris_coeffs(c.q, c.alpha, 0.1671).unwrap();
        for &e in &[-4.0, -2.0, 0.0, 2.5, 4.9] {
            for &w in &[0.0, 0.5, 3.0] {
                let a = energy_residual(&c, e, w, &coeffs).unwrap();
                let b = energy_residual_eq61(&c, e, w, &coeffs).unwrap();
                assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn quantization_pole_detected() {
        // Engineer eps_n = (n + 1/2)^2 - 1/4 = n(n+1) so Y = 0: with
        // omega = 0 and q = 1, eps_n = V0 (M+E)/a^2. Take n = 1, so we
        // need V0 (M+E) = 2 a^2.
        let mut c = cfg(1);
        c.v0 = 1.0;
        let coeffs = pekeris_coeffs(c.q, c.alpha, 0.1671).unwrap();
        let e = 2.0 * c.alpha * c.alpha - c.m; // M + E = 2 a^2
        match energy_residual(&c, e, 0.0, &coeffs) {
            Err(Error::QuantizationPole(_)) => {}
            other => panic!("expected quantization pole, got {other:?}"),
        }
    }
}
