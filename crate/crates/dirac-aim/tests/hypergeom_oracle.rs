//! Terminating hypergeometric sums against an exact-fraction oracle.
//!
//! The oracle evaluates the same finite sum in arbitrary-precision
//! rational arithmetic (all parameters drawn as small rationals), so any
//! disagreement beyond rounding is a bug in the f64 recurrence, not in
//! the reference.

use dirac_aim::aim::{hypergeom_2f1_terminating, pochhammer};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact terminating 2F1(-n, b; c; z) with rational b, c, z. Also
/// returns the largest |term| of the sum: for alternating series the f64
/// result can only be accurate relative to that scale (catastrophic
/// cancellation destroys digits of the much smaller sum).
fn oracle_2f1(
    n: u32,
    b: &BigRational,
    c: &BigRational,
    z: &BigRational,
) -> (BigRational, f64) {
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    let mut max_term = 0.0f64;
    for m in 0..=n {
        if m > 0 {
            let mm = big(m as i64 - 1);
            // term *= (-n + m - 1)(b + m - 1) z / ((c + m - 1) m)
            term *= (big(-(n as i64)) + &mm) * (b + &mm) * z
                / ((c + &mm) * big(m as i64));
        }
        max_term = max_term.max(term.to_f64().unwrap_or(f64::MAX).abs());
        sum += &term;
    }
    (sum, max_term)
}

#[test]
fn matches_exact_fraction_oracle() {
    let mut rng = StdRng::seed_from_u64(0x2f1);
    let mut checked = 0;
    while checked < 1_000 {
        let n = rng.random_range(0..=8u32);
        // Small rationals keep the exact arithmetic cheap and the f64
        // parameters exactly representable.
        let (bn, bd) = (rng.random_range(-40..=40i64), rng.random_range(1..=8i64));
        let (cn, cd) = (rng.random_range(-40..=40i64), rng.random_range(1..=8i64));
        let (zn, zd) = (rng.random_range(-16..=16i64), rng.random_range(1..=16i64));
        let b = big(bn) / big(bd);
        let c = big(cn) / big(cd);
        let z = big(zn) / big(zd);

        // Skip parameter sets where (c)_m hits zero: the f64 path
        // rejects them by design.
        let c_f = cn as f64 / cd as f64;
        if (0..8).any(|m| c_f + m as f64 == 0.0) {
            continue;
        }

        let (exact, max_term) = oracle_2f1(n, &b, &c, &z);
        let exact_f = exact.to_f64().expect("finite");
        let got = hypergeom_2f1_terminating(
            n as usize,
            bn as f64 / bd as f64,
            c_f,
            zn as f64 / zd as f64,
        )
        .unwrap();
        let scale = exact_f.abs().max(max_term).max(1.0);
        assert!(
            (got - exact_f).abs() <= 1e-12 * scale,
            "2F1(-{n}, {b}; {c}; {z}): got {got}, exact {exact_f}"
        );
        checked += 1;
    }
}

#[test]
fn pochhammer_against_exact_products() {
    let mut rng = StdRng::seed_from_u64(0x90c4);
    for _ in 0..1_000 {
        let x_num = rng.random_range(-30..=30i64);
        let x_den = rng.random_range(1..=4i64);
        let n = rng.random_range(0..=10usize);
        let mut exact = BigRational::one();
        for m in 0..n {
            exact *= big(x_num) / big(x_den) + big(m as i64);
        }
        let got = pochhammer(x_num as f64 / x_den as f64, n);
        let exact_f = exact.to_f64().unwrap();
        assert!(
            (got - exact_f).abs() <= 1e-12 * exact_f.abs().max(1.0),
            "({x_num}/{x_den})_{n}: got {got}, exact {exact_f}"
        );
    }
}
