//! The asymptotic iteration method (AIM) proper.
//!
//! For a second-order equation `y'' = l0(z) y' + s0(z) y` the iterates
//!
//! ```text
//! l_k = l_{k-1}' + s_{k-1} + l0 l_{k-1}
//! s_k = s_{k-1}' + s0 l_{k-1}
//! ```
//!
//! terminate on an eigenvalue exactly when the quantization determinant
//! `D_k(z) = l_k(z) s_{k-1}(z) - l_{k-1}(z) s_k(z)` vanishes — for the
//! exactly solvable problems here, independently of the probe point `z`.
//! Eigenvalues of a one-parameter family `(l0, s0)(eps)` are located by
//! bracketing a sign change of `D_{n+1}(z0; eps)` and bisecting, with a
//! few secant steps to polish.

use super::rational::RationalFn;
use crate::error::{Error, Result};

/// Divergence guard: numerator degrees past this abort the recurrence.
pub const DEFAULT_DEGREE_CAP: usize = 256;

/// One AIM iterate: `(k, l_k, s_k)`.
#[derive(Debug, Clone)]
pub struct AimState {
    k: usize,
    lambda: RationalFn,
    s: RationalFn,
}

impl AimState {
    /// The `k = 0` state is the supplied coefficient pair itself.
    pub fn initial(lambda0: RationalFn, s0: RationalFn) -> Self {
        AimState {
            k: 0,
            lambda: lambda0,
            s: s0,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> &RationalFn {
        &self.lambda
    }

    pub fn s(&self) -> &RationalFn {
        &self.s
    }
}

/// Advance the recurrence by one step.
pub fn aim_step(prev: &AimState, lambda0: &RationalFn, s0: &RationalFn) -> Result<AimState> {
    aim_step_capped(prev, lambda0, s0, DEFAULT_DEGREE_CAP)
}

/// `aim_step` with an explicit numerator-degree cap.
pub fn aim_step_capped(
    prev: &AimState,
    lambda0: &RationalFn,
    s0: &RationalFn,
    cap: usize,
) -> Result<AimState> {
    let lambda = prev
        .lambda
        .derivative()
        .add(&prev.s)
        .add(&lambda0.mul(&prev.lambda));
    let s = prev.s.derivative().add(&s0.mul(&prev.lambda));
    for f in [&lambda, &s] {
        if let Some(d) = f.num_degree() {
            if d > cap {
                return Err(Error::DegreeOverflow { degree: d, cap });
            }
        }
    }
    Ok(AimState {
        k: prev.k + 1,
        lambda,
        s,
    })
}

/// Quantization determinant `D_k(z0) = l_k s_{k-1} - l_{k-1} s_k` at `z0`.
pub fn quantization_delta(state_k: &AimState, state_km1: &AimState, z0: f64) -> Result<f64> {
    let lk = state_k.lambda.eval(z0)?;
    let sk = state_k.s.eval(z0)?;
    let lkm1 = state_km1.lambda.eval(z0)?;
    let skm1 = state_km1.s.eval(z0)?;
    Ok(lk * skm1 - lkm1 * sk)
}

/// `D_{n+1}(z0; eps)` together with its natural magnitude scale
/// `|l_k s_{k-1}| + |l_{k-1} s_k|`, for relative smallness checks.
pub fn delta_with_scale<F>(family: &F, n: usize, z0: f64, eps: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> (RationalFn, RationalFn),
{
    let (lambda0, s0) = family(eps);
    let mut prev = AimState::initial(lambda0.clone(), s0.clone());
    let mut cur = aim_step(&prev, &lambda0, &s0)?;
    for _ in 1..=n {
        let next = aim_step(&cur, &lambda0, &s0)?;
        prev = cur;
        cur = next;
    }
    let lk = cur.lambda.eval(z0)?;
    let sk = cur.s.eval(z0)?;
    let lkm1 = prev.lambda.eval(z0)?;
    let skm1 = prev.s.eval(z0)?;
    Ok((lk * skm1 - lkm1 * sk, (lk * skm1).abs() + (lkm1 * sk).abs()))
}

/// Find the eigenvalue `eps` of quantum number `n` for a one-parameter
/// coefficient family, by bisecting a sign change of `D_{n+1}(z0; eps)`
/// over `bracket` and polishing with secant steps. `tol` is absolute
/// on `eps`.
pub fn find_eigenvalue<F>(
    family: F,
    n: usize,
    z0: f64,
    bracket: (f64, f64),
    tol: f64,
) -> Result<f64>
where
    F: Fn(f64) -> (RationalFn, RationalFn),
{
    let delta = |eps: f64| -> Result<f64> { Ok(delta_with_scale(&family, n, z0, eps)?.0) };

    let (mut lo, mut hi) = bracket;
    let mut flo = delta(lo)?;
    let fhi = delta(hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }

    let max_iter = 200;
    let mut iter = 0;
    while hi - lo > tol {
        iter += 1;
        if iter > max_iter {
            return Err(Error::IterationCap(max_iter));
        }
        let mid = 0.5 * (lo + hi);
        let fmid = delta(mid)?;
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }

    // Secant polish from the bracket endpoints; keep iterates inside.
    let mut x0 = lo;
    let mut x1 = hi;
    let mut f0 = delta(x0)?;
    let mut f1 = delta(x1)?;
    for _ in 0..4 {
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2 < bracket.0 || x2 > bracket.1 {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = delta(x1)?;
    }
    Ok(x1)
}
