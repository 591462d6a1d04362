//! Upper radial spinor component of a bound state.
//!
//! Once an energy is known, the upper component has the closed form
//! `F_n(r) = z^delta (1 - z)^gamma P_n(z)` with `z = (1 - tanh_q(a r))/2`
//! and `P_n` a terminating hypergeometric polynomial. This example
//! solves an s-wave configuration, tabulates the ground-state
//! wavefunction, and verifies the boundary behavior (decay at the
//! origin image `z -> 1` and at infinity `z -> 0`).

use dirac_aim::qdeform::Deformation;
use dirac_aim::radial::{radial_wavefunction, RadialConfig};
use dirac_aim::spectrum::{AngularSpec, ProblemConfig, ScanSettings, Solver};

fn main() -> Result<(), dirac_aim::Error> {
    let cfg = ProblemConfig {
        radial: RadialConfig {
            v0: 6.0,
            v1: -1.0,
            alpha: 0.5,
            q: Deformation::new(1.0)?,
            m: 5.0,
            c_s: 0.0,
            dimension: 3,
            n: 0,
        },
        r_e: 0.1671,
        angular: AngularSpec::EllOverride(0.0),
        reading: Default::default(),
    };
    let solver = Solver::new(cfg.clone())?;
    let states = solver.solve_bound_states(&ScanSettings::default_for_mass(cfg.radial.m))?;
    let state = states.first().expect("s-wave configuration binds");
    let shape = state.shape.as_ref().expect("admissible state has a shape");
    println!(
        "lowest state: E = {:+.8} fm^-1 (delta = {:.6}, gamma = {:.6})",
        state.e, shape.delta, shape.gamma
    );
    let mut prev_tail = f64::INFINITY;
    for i in 1..=12 {
        let r = 0.5 * i as f64;
        let f = radial_wavefunction(shape, &cfg.radial, state.n, r)?;
        println!("  r = {r:4.1} fm: F = {f:+.10}");
        if r >= 4.0 {
            // The exponential tail must decay monotonically.
            assert!(f.abs() < prev_tail);
            prev_tail = f.abs();
        }
    }
    Ok(())
}
