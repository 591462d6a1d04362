//! Deformed hyperbolic and trigonometric functions.
//!
//! Prints the deformed functions at a few points and checks the two
//! identities that replace the usual Pythagorean relations:
//! `cosh_q^2 - sinh_q^2 = q` and `sin_q^2 + cos_q^2 = q` (with the
//! real-parameter reading `sin_q t = sqrt(q) sin t`). Also shows the
//! translation `Delta r = ln(sqrt(q)) / alpha` that maps a deformed
//! profile back onto the undeformed one.

use dirac_aim::qdeform::{deformation_shift, Deformation};

fn main() -> Result<(), dirac_aim::Error> {
    for q in [0.5, 1.0, 2.0] {
        let d = Deformation::new(q)?;
        println!("q = {q}");
        for x in [0.25, 1.0, 3.0] {
            let hyper = d.cosh(x) * d.cosh(x) - d.sinh(x) * d.sinh(x);
            let trig = d.sin(x) * d.sin(x) + d.cos(x) * d.cos(x);
            println!(
                "  x = {x:4}: tanh_q = {:+.6}  cosh_q^2 - sinh_q^2 = {:.12}  \
                 sin_q^2 + cos_q^2 = {:.12}",
                d.tanh(x),
                hyper,
                trig
            );
            assert!((hyper - q).abs() < 1e-12);
            assert!((trig - q).abs() < 1e-12);
        }
        let alpha = 0.5;
        let shift = deformation_shift(d, alpha)?;
        // tanh_q(alpha r) = tanh(alpha (r - shift)): the deformation is a
        // pure translation of the hyperbolic profile.
        let r = 2.0;
        let lhs = d.tanh(alpha * r);
        let rhs = (alpha * (r - shift)).tanh();
        println!("  shift = {shift:+.6}: tanh_q(ar) = {lhs:.12}, tanh(a(r - shift)) = {rhs:.12}");
        assert!((lhs - rhs).abs() < 1e-12);
    }
    Ok(())
}
