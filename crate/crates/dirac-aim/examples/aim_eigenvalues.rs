//! Asymptotic iteration on the radial and angular coefficient families.
//!
//! Both separated equations reduce, after substitution, to
//! `y'' = lambda_0 y' + s_0 y` with rational coefficients on `z in
//! (0, 1)`. The iteration `lambda_k = lambda_{k-1}' + s_{k-1} +
//! lambda_0 lambda_{k-1}`, `s_k = s_{k-1}' + s_0 lambda_{k-1}` quantizes
//! the spectrum through the termination condition
//! `lambda_k s_{k-1} - lambda_{k-1} s_k = 0`. This example bisects that
//! condition numerically and compares against the closed forms
//! `eps_n = (delta + gamma + n)(delta + gamma + n + 1)` (radial) and
//! `eps_n = (delta + gamma + n)^2` (first angular axis).

use dirac_aim::aim::find_eigenvalue;
use dirac_aim::angular::angular_aim_family;
use dirac_aim::radial::radial_aim_family;

fn main() -> Result<(), dirac_aim::Error> {
    let (delta, gamma) = (0.75, 1.25);
    let z0 = 0.5;
    let tol = 1e-12;

    println!("radial family, delta = {delta}, gamma = {gamma}:");
    for n in 0..4u32 {
        let exact =
            (delta + gamma + n as f64) * (delta + gamma + n as f64 + 1.0);
        let eps = find_eigenvalue(
            radial_aim_family(delta, gamma),
            n as usize,
            z0,
            (exact - 0.9, exact + 0.9),
            tol,
        )?;
        println!("  n = {n}: AIM eps = {eps:.12}, closed form = {exact:.12}");
        assert!((eps - exact).abs() < 1e-9);
    }

    println!("angular family (axis 1), delta = {delta}, gamma = {gamma}:");
    for n in 0..4u32 {
        let base = delta + gamma + n as f64;
        let exact = base * base;
        let eps = find_eigenvalue(
            angular_aim_family(delta, gamma),
            n as usize,
            z0,
            (exact - 0.9, exact + 0.9),
            tol,
        )?;
        println!("  n = {n}: AIM eps = {eps:.12}, closed form = {exact:.12}");
        assert!((eps - exact).abs() < 1e-9);
    }
    Ok(())
}
