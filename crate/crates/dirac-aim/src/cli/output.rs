//! Deterministic CSV formatting: fixed significant digits for energies,
//! scientific notation for residuals, and the provenance footer every
//! emission carries.

/// The bit-exact bound-state CSV header.
pub const BOUND_STATE_HEADER: &str = "row,q,r_e,n,n_l,E_computed,E_paper,residual,admissible";

/// Six significant digits, plain decimal notation.
pub fn fmt_e(x: f64) -> String {
    if !x.is_finite() {
        return String::from("nan");
    }
    if x == 0.0 {
        return String::from("0.00000");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Residual formatting: scientific, six digits after the point.
pub fn fmt_res(x: f64) -> String {
    format!("{x:.6e}")
}

/// Input parameters echo through shortest-roundtrip formatting so `0.2`
/// stays `0.2`.
pub fn fmt_in(x: f64) -> String {
    format!("{x}")
}

/// FNV-1a 64-bit hash, for the provenance footer's config fingerprint.
pub fn fnv1a64(data: &str) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in data.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Provenance footer comment appended to every CSV emission.
pub fn provenance_footer(
    config_text: &str,
    chain_reading: crate::angular::ChainReading,
    bisect_tol: f64,
    steps: usize,
) -> String {
    let reading = match chain_reading {
        crate::angular::ChainReading::Corrected => "corrected",
        crate::angular::ChainReading::LiteralLambda4 => "literal",
    };
    format!(
        "# provenance: config-hash={:016x} chain-reading={} bisect-tol={:e} scan-steps={}\n",
        fnv1a64(config_text),
        reading,
        bisect_tol,
        steps
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(fmt_e(-6.472134567), "-6.47213");
        assert_eq!(fmt_e(-25.28371), "-25.2837");
        assert_eq!(fmt_e(0.0456789123), "0.0456789");
        assert_eq!(fmt_e(0.0), "0.00000");
        assert_eq!(fmt_e(123456.7), "123457");
    }

    #[test]
    fn inputs_roundtrip() {
        assert_eq!(fmt_in(0.2), "0.2");
        assert_eq!(fmt_in(1.0), "1");
        assert_eq!(fmt_in(0.1671), "0.1671");
    }

    #[test]
    fn hash_is_stable() {
        assert_eq!(fnv1a64(""), 0xcbf29ce484222325);
        assert_eq!(fnv1a64("a"), fnv1a64("a"));
        assert_ne!(fnv1a64("a"), fnv1a64("b"));
    }
}
