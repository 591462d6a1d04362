//! Closed-form polynomial solutions from the AIM coefficient template.
//!
//! When `lambda_0` has the hypergeometric shape, the terminating series
//! solution can be written down directly from the template parameters
//! instead of iterating. This example builds the radial polynomial
//! factor from the template and cross-checks it against a direct
//! terminating `2F1` evaluation.

use dirac_aim::aim::{
    hypergeom_2f1_terminating, pochhammer, template_solution, HypergeomTemplate,
};

fn main() -> Result<(), dirac_aim::Error> {
    let (delta, gamma) = (0.75, 1.25);
    // Radial template: b = 1, N = -1, t = delta - 1/2, a = gamma + 1/2
    // gives sigma = 2 delta + 1, rho_t = 2(delta + gamma) + 1 and the
    // polynomial 2F1(-n, 2(delta + gamma) + n + 1; 2 delta + 1; z).
    let template = HypergeomTemplate::new(
        gamma + 0.5,
        1.0,
        delta - 0.5,
        -1.0,
        2.0 * delta,
    )?;
    println!(
        "template: sigma = {:.6}, rho_t = {:.6}",
        template.sigma(),
        template.rho_t()
    );
    for n in 0..3usize {
        for z in [0.2, 0.5, 0.8] {
            let via_template = template_solution(&template, n, z)?;
            let direct = (-1.0f64).powi(n as i32)
                * pochhammer(template.sigma(), n)
                * hypergeom_2f1_terminating(
                    n,
                    2.0 * (delta + gamma) + n as f64 + 1.0,
                    2.0 * delta + 1.0,
                    z,
                )?;
            println!(
                "  n = {n}, z = {z}: template = {via_template:+.12}, direct 2F1 = {direct:+.12}"
            );
            assert!((via_template - direct).abs() <= 1e-10 * direct.abs().max(1.0));
        }
    }
    Ok(())
}
