//! Terminating Gauss hypergeometric series and the closed-form template
//! solution used by the exactly solvable AIM problems.

use crate::error::{Error, Result};

/// Pochhammer symbol `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: f64, n: usize) -> f64 {
    let mut p = 1.0;
    for m in 0..n {
        p *= x + m as f64;
    }
    p
}

/// Terminating `2F1(-n, b; c; z)` as the exact finite sum
/// `sum_{m=0}^{n} (-n)_m (b)_m / ((c)_m m!) z^m`.
///
/// Errors if a denominator factor `(c)_m` vanishes within the reachable
/// terms (i.e. `c` is a non-positive integer with `-c < n`).
pub fn hypergeom_2f1_terminating(n: usize, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    for m in 0..n {
        let mf = m as f64;
        let denom = (c + mf) * (mf + 1.0);
        if c + mf == 0.0 {
            return Err(Error::HypergeomPole(m + 1));
        }
        term *= (-(n as f64) + mf) * (b + mf) / denom * z;
        sum += term;
    }
    Ok(sum)
}

/// Parameters of the reference equation
///
/// ```text
/// y'' = 2 ( a z^{N+1} / (1 - b z^{N+2}) - (t+1)/z ) y'
///       - w z^N / (1 - b z^{N+2}) y
/// ```
///
/// whose polynomial solutions are hypergeometric. `sigma` and `rho_t` are
/// the derived template parameters (`rho_t` is named with a suffix to
/// keep it apart from the radial substitution parameter `rho`).
#[derive(Debug, Clone, Copy)]
pub struct HypergeomTemplate {
    pub a: f64,
    pub b: f64,
    pub t: f64,
    pub n_exp: f64,
    pub w: f64,
}

impl HypergeomTemplate {
    pub fn new(a: f64, b: f64, t: f64, n_exp: f64, w: f64) -> Result<Self> {
        if n_exp + 2.0 == 0.0 {
            return Err(Error::InvalidParameter {
                name: "N",
                value: n_exp,
                reason: "template requires N + 2 != 0",
            });
        }
        if b == 0.0 {
            return Err(Error::InvalidParameter {
                name: "b",
                value: b,
                reason: "template requires b != 0 for rho_t",
            });
        }
        Ok(HypergeomTemplate { a, b, t, n_exp, w })
    }

    /// `sigma = (2t + N + 3) / (N + 2)`
    pub fn sigma(&self) -> f64 {
        (2.0 * self.t + self.n_exp + 3.0) / (self.n_exp + 2.0)
    }

    /// `rho_t = ((2t + 1) b + 2a) / ((N + 2) b)`
    pub fn rho_t(&self) -> f64 {
        ((2.0 * self.t + 1.0) * self.b + 2.0 * self.a) / ((self.n_exp + 2.0) * self.b)
    }
}

/// Unnormalized template solution
/// `y_n(z) = (-1)^n (N+2)^n (sigma)_n 2F1(-n, rho_t + n; sigma; b z^{N+2})`
/// (normalization constant taken as 1).
pub fn template_solution(tpl: &HypergeomTemplate, n: usize, z: f64) -> Result<f64> {
    let sigma = tpl.sigma();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let prefactor = sign * (tpl.n_exp + 2.0).powi(n as i32) * pochhammer(sigma, n);
    let arg = tpl.b * z.powf(tpl.n_exp + 2.0);
    Ok(prefactor * hypergeom_2f1_terminating(n, tpl.rho_t() + n as f64, sigma, arg)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(hypergeom_2f1_terminating(0, 7.3, -0.2, 0.9).unwrap(), 1.0);
        // n=1, b=2, c=3, z=0.5: 1 - (2/3)(0.5) = 2/3
        let v = hypergeom_2f1_terminating(1, 2.0, 3.0, 0.5).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn pole_of_c() {
        // c = -1 is hit at m = 1 when n >= 2.
        assert!(hypergeom_2f1_terminating(3, 1.0, -1.0, 0.5).is_err());
        // but unreachable for n = 0.
        assert!(hypergeom_2f1_terminating(0, 1.0, -1.0, 0.5).is_ok());
    }

    #[test]
    fn template_parameters() {
        let tpl = HypergeomTemplate::new(2.0, 1.0, 0.0, 0.0, 1.0).unwrap();
        assert!((tpl.sigma() - 1.5).abs() < 1e-15);
        assert!((tpl.rho_t() - 2.5).abs() < 1e-15);
        assert!((template_solution(&tpl, 0, 0.3).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn template_guards() {
        assert!(HypergeomTemplate::new(1.0, 0.0, 0.0, 0.0, 1.0).is_err());
        assert!(HypergeomTemplate::new(1.0, 1.0, 0.0, -2.0, 1.0).is_err());
    }
}
