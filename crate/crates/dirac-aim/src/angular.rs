//! The four polar-angle equations with q-deformed trigonometric Scarf
//! potentials, solved as a cascade: axis 1 yields the separation constant
//! `lambda_1`, which feeds the shape parameters of axis 2, and so on up
//! to `lambda_{D-1} = l'(l' + D - 2)`, the orbital number entering the
//! radial equation. The whole chain is a pure function of `M + E` — the
//! energy dependence is resolved by the spectrum module's root finder,
//! never here.
//!
//! Shape parameters:
//! * axis 1: the positive roots of `2x(2x - 1) = (M+E) C -/+` with the
//!   Scarf combinations `C-/+ = (b^2 + a(a-1))/q -/+ 2b(a - 1/2) sqrt(q)/q`
//!   (minus for `delta`, plus for `gamma`).
//! * axes 2..4: square-root forms
//!   `x = sqrt(lambda_prev + add_i + (M+E) C -/+ + 1/2) / 2`, with the
//!   printed additive constants `add = 0, 1/4, -1/2` for axes 2, 3, 4.
//!   The published source feeds `lambda_4` into axis 2's `gamma` — a
//!   circular reference, since `lambda_4` is the chain's *output*. The
//!   default reading substitutes `lambda_1` (the only constant axis 2 can
//!   depend on); [`ChainReading::LiteralLambda4`] keeps the circular form
//!   and resolves it by fixed-point iteration, for reproduction
//!   experiments.

use crate::aim::{hypergeom_2f1_terminating, pochhammer, Polynomial, RationalFn};
use crate::error::{Error, Result};
use crate::qdeform::Deformation;

/// Which value axis 2's `gamma` receives in place of the circular
/// `lambda_4` reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChainReading {
    /// Substitute `lambda_1` (default; the separation structure only
    /// allows axis 2 to depend on axis 1's constant).
    #[default]
    Corrected,
    /// Keep `lambda_4` and close the loop by damped fixed-point
    /// iteration on the chain.
    LiteralLambda4,
}

/// Per-axis Scarf potential strengths.
#[derive(Debug, Clone, Copy)]
pub struct ScarfParams {
    /// Axis index, 1-based (1..=4).
    pub axis: u8,
    pub a: f64,
    pub b: f64,
    pub q: Deformation,
}

/// One axis of chain input: potential strengths plus the angular quantum
/// number `n_i`.
#[derive(Debug, Clone, Copy)]
pub struct AxisSpec {
    pub scarf: ScarfParams,
    pub n: u32,
}

/// Solved shape data for one axis.
#[derive(Debug, Clone, Copy)]
pub struct AxisSolution {
    pub axis: u8,
    pub delta_s: f64,
    pub gamma_s: f64,
    pub n: u32,
    pub ell: f64,
    pub lambda: f64,
    /// Axis 1 only: `O_s1` with `O_s1^2 = lambda_1`.
    pub o_s1: Option<f64>,
}

/// The full solved cascade at one energy.
#[derive(Debug, Clone)]
pub struct AngularChain {
    pub axes: Vec<AxisSolution>,
    pub ell_prime: f64,
    /// `M + E` the chain was evaluated at.
    pub me_sum: f64,
}

/// The Scarf combinations `(C_minus, C_plus)` entering `delta`/`gamma`.
fn scarf_combos(p: &ScarfParams) -> (f64, f64) {
    let q = p.q.q();
    let base = (p.b * p.b + p.a * (p.a - 1.0)) / q;
    let cross = 2.0 * p.b * (p.a - 0.5) * q.sqrt() / q;
    (base - cross, base + cross)
}

/// Larger root of `2x(2x - 1) = rhs` (equals 1/2 when `rhs = 0`).
fn quadratic_root(axis: u8, rhs: f64) -> Result<f64> {
    let disc = 1.0 + 4.0 * rhs;
    if disc < 0.0 {
        return Err(Error::AxisNotBound {
            axis,
            discriminant: disc,
        });
    }
    Ok((1.0 + disc.sqrt()) / 4.0)
}

/// Printed additive constant for axes 2..4.
fn printed_additive(axis: u8) -> f64 {
    match axis {
        2 => 0.0,
        3 => 0.25,
        4 => -0.5,
        _ => unreachable!("additive constants exist for axes 2..4 only"),
    }
}

/// Square-root shape form for axes 2..4.
fn sqrt_shape(axis: u8, under_root: f64) -> Result<f64> {
    if under_root < 0.0 {
        return Err(Error::AxisNotBound {
            axis,
            discriminant: under_root,
        });
    }
    Ok(under_root.sqrt() / 2.0)
}

/// Shape parameters `(delta_s, gamma_s)` of one axis, corrected reading
/// (axis >= 2 takes `lambda_prev` for both exponents).
pub fn scarf_shape_params(
    axis: u8,
    p: &ScarfParams,
    me_sum: f64,
    lambda_prev: f64,
) -> Result<(f64, f64)> {
    scarf_shape_params_split(axis, p, me_sum, lambda_prev, lambda_prev)
}

/// As [`scarf_shape_params`] but with independent `lambda` feeds for the
/// two exponents, so the literal (circular) axis-2 `gamma` can be driven
/// by a fixed-point iterate.
fn scarf_shape_params_split(
    axis: u8,
    p: &ScarfParams,
    me_sum: f64,
    lambda_delta: f64,
    lambda_gamma: f64,
) -> Result<(f64, f64)> {
    let (c_minus, c_plus) = scarf_combos(p);
    match axis {
        1 => Ok((
            quadratic_root(1, me_sum * c_minus)?,
            quadratic_root(1, me_sum * c_plus)?,
        )),
        2..=4 => {
            let add = printed_additive(axis);
            let delta = sqrt_shape(axis, lambda_delta + add + me_sum * c_minus + 0.5)?;
            let gamma = sqrt_shape(axis, lambda_gamma + add + me_sum * c_plus + 0.5)?;
            Ok((delta, gamma))
        }
        _ => Err(Error::InvalidParameter {
            name: "axis",
            value: axis as f64,
            reason: "axis index must be 1..=4",
        }),
    }
}

/// `(ell_i, lambda_i)` from the shape parameters and `n_i`:
/// `ell_i = delta + gamma + n_i - (i-1)/2`, `lambda_i = ell_i (ell_i + i - 1)`.
pub fn angular_lambda(axis: u8, delta_s: f64, gamma_s: f64, n_i: u32) -> (f64, f64) {
    let shift = (axis as f64 - 1.0) / 2.0;
    let ell = delta_s + gamma_s + n_i as f64 - shift;
    let lambda = ell * (ell + axis as f64 - 1.0);
    (ell, lambda)
}

/// Nonnegative orbital number from `lambda = l'(l' + D - 2)`.
pub fn orbital_from_lambda(lambda_last: f64, dimension: u32) -> Result<f64> {
    let dm2 = dimension as f64 - 2.0;
    let disc = dm2 * dm2 + 4.0 * lambda_last;
    if disc < 0.0 {
        return Err(Error::InadmissibleChain(format!(
            "lambda_last = {lambda_last} gives complex orbital number"
        )));
    }
    Ok((-dm2 + disc.sqrt()) / 2.0)
}

/// Evaluate the full cascade at `M + E`. `axes.len()` must be `D - 1`
/// (4 axes for D = 5, 2 for D = 3).
pub fn solve_chain(
    axes: &[AxisSpec],
    me_sum: f64,
    dimension: u32,
    reading: ChainReading,
) -> Result<AngularChain> {
    let expected = dimension as usize - 1;
    if axes.len() != expected {
        return Err(Error::InvalidParameter {
            name: "axes",
            value: axes.len() as f64,
            reason: "need exactly D - 1 angular axes",
        });
    }

    match reading {
        ChainReading::Corrected => chain_pass(axes, me_sum, dimension, None),
        ChainReading::LiteralLambda4 => {
            // The literal axis-2 gamma references the chain's own output;
            // iterate it to a fixed point, seeded with lambda_1's stand-in.
            let mut lambda_out = chain_pass(axes, me_sum, dimension, None)?
                .axes
                .last()
                .expect("chain has at least one axis")
                .lambda;
            for _ in 0..200 {
                let chain = chain_pass(axes, me_sum, dimension, Some(lambda_out))?;
                let next = chain.axes.last().unwrap().lambda;
                if (next - lambda_out).abs() < 1e-12 * next.abs().max(1.0) {
                    return Ok(chain);
                }
                // Damp to keep oscillatory maps convergent.
                lambda_out = 0.5 * (lambda_out + next);
            }
            Err(Error::IterationCap(200))
        }
    }
}

/// One sequential pass over the axes. `gamma2_lambda` overrides the
/// lambda feed of axis 2's gamma (the literal reading); `None` uses the
/// corrected `lambda_1`.
fn chain_pass(
    axes: &[AxisSpec],
    me_sum: f64,
    dimension: u32,
    gamma2_lambda: Option<f64>,
) -> Result<AngularChain> {
    let mut solved = Vec::with_capacity(axes.len());
    let mut lambda_prev = 0.0;
    for spec in axes {
        let axis = spec.scarf.axis;
        let (delta, gamma) = match (axis, gamma2_lambda) {
            (2, Some(lg)) => {
                scarf_shape_params_split(2, &spec.scarf, me_sum, lambda_prev, lg)?
            }
            _ => scarf_shape_params(axis, &spec.scarf, me_sum, lambda_prev)?,
        };
        let (ell, lambda) = angular_lambda(axis, delta, gamma, spec.n);
        solved.push(AxisSolution {
            axis,
            delta_s: delta,
            gamma_s: gamma,
            n: spec.n,
            ell,
            lambda,
            o_s1: (axis == 1).then(|| lambda.max(0.0).sqrt()),
        });
        lambda_prev = lambda;
    }
    let ell_prime = orbital_from_lambda(lambda_prev, dimension)?;
    Ok(AngularChain {
        axes: solved,
        ell_prime,
        me_sum,
    })
}

/// Unnormalized angular wave function of one axis at polar angle `theta`:
/// `P = z^d (1-z)^g (-1)^n (2d + 1/2)_n 2F1(-n, 2d + 2g + n; 2d + 1/2; z)`
/// with `z = (1 - cos theta)/2` (the deformation factors cancel in z).
pub fn angular_wavefunction(sol: &AxisSolution, theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::InvalidParameter {
            name: "theta",
            value: theta,
            reason: "polar angle must lie in (0, pi)",
        });
    }
    let z = (1.0 - theta.cos()) / 2.0;
    let n = sol.n as usize;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let prefactor = sign * pochhammer(2.0 * sol.delta_s + 0.5, n);
    let f = hypergeom_2f1_terminating(
        n,
        2.0 * sol.delta_s + 2.0 * sol.gamma_s + n as f64,
        2.0 * sol.delta_s + 0.5,
        z,
    )?;
    Ok(z.powf(sol.delta_s) * (1.0 - z).powf(sol.gamma_s) * prefactor * f)
}

/// AIM coefficient family of the axis-1 equation in `z`:
/// `l0 = ((2d + 2g + 1) z - (2d + 1/2)) / (z(1-z))`,
/// `s0(eps) = ((d + g)^2 - eps) / (z(1-z))`;
/// the eigenvalues are `eps_n = (d + g + n)^2`.
pub fn angular_aim_family(
    delta_s: f64,
    gamma_s: f64,
) -> impl Fn(f64) -> (RationalFn, RationalFn) {
    move |eps: f64| {
        let l0 = RationalFn::new(
            Polynomial::new(vec![
                -(2.0 * delta_s + 0.5),
                2.0 * delta_s + 2.0 * gamma_s + 1.0,
            ]),
            1,
            1,
        );
        let s = delta_s + gamma_s;
        let s0 = RationalFn::new(Polynomial::constant(s * s - eps), 1, 1);
        (l0, s0)
    }
}
