//! Spin-doublet degeneracy.
//!
//! For each orbital number `l > 0` the relativistic quantum number takes
//! two values, `K = -l - 1` (aligned, `j = l + 1/2`) and `K = l`
//! (anti-aligned, `j = l - 1/2`). Both give the same `K(K + 1) =
//! l(l + 1)`, so under exact spin symmetry (`C_s = 0`) the two doublet
//! members are exactly degenerate. This example computes both members
//! for a few doublets and checks the degeneracy to the bisection
//! tolerance.

use dirac_aim::qdeform::Deformation;
use dirac_aim::radial::RadialConfig;
use dirac_aim::spectrum::{doublet_energies, kappa_of, AngularSpec, ProblemConfig};

fn main() -> Result<(), dirac_aim::Error> {
    let base = ProblemConfig {
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
        r_e: 3.0,
        angular: AngularSpec::EllOverride(0.0),
        reading: Default::default(),
    };
    for ell in 1..=3u32 {
        let k_plus = kappa_of(ell, 2 * ell + 1)?;
        let k_minus = kappa_of(ell, 2 * ell - 1)?;
        let (e_aligned, e_anti) = doublet_energies(ell, 0, &base)?;
        println!(
            "l = {ell}: K = {k_plus} gives E = {e_aligned:+.12}, \
             K = {k_minus} gives E = {e_anti:+.12}, split = {:.3e}",
            (e_aligned - e_anti).abs()
        );
        assert!((e_aligned - e_anti).abs() <= 1e-10);
    }
    Ok(())
}
