//! Crate-wide error type.
//!
//! Physics-domain failures (an axis with no bound solution, a quantization
//! pole on the energy scan, ...) are ordinary values for the scan loop, so
//! they get their own variants instead of being folded into a generic
//! message: the spectrum solver matches on them to skip grid points.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A physical or numerical parameter failed validation.
    #[error("invalid parameter `{name}`: {reason} (got {value})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Config-file syntax error, with a 1-based line number.
    #[error("config parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A mandatory config key was absent.
    #[error("missing mandatory key `{0}`")]
    MissingKey(&'static str),

    /// An angular axis has no admissible shape parameters at this energy.
    #[error("axis {axis} not bound: discriminant {discriminant} is negative")]
    AxisNotBound { axis: u8, discriminant: f64 },

    /// The separation chain cannot be completed at this energy.
    #[error("inadmissible chain: {0}")]
    InadmissibleChain(String),

    /// sqrt(eps_n + 1/4) hit n + 1/2, a pole of the energy equation.
    #[error("quantization pole at E = {0}")]
    QuantizationPole(f64),

    /// The radial shape exponents are complex at this energy; the scan
    /// treats the point as non-evaluable rather than as a fault.
    #[error("not a bound state at this energy: {0}")]
    NotBoundState(&'static str),

    /// A bracketing root finder was handed an interval without a root.
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// An iterative procedure ran out of its iteration budget.
    #[error("iteration cap exceeded after {0} iterations")]
    IterationCap(usize),

    /// AIM iterate numerators grew past the divergence guard.
    #[error("rational-function degree {degree} exceeds cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    /// A Pochhammer factor (c)_m in the 2F1 denominator vanished.
    #[error("hypergeometric pole: (c)_m = 0 at m = {0}")]
    HypergeomPole(usize),

    /// The quantization determinant was evaluated at a pole.
    #[error("evaluation point {0} is a pole of the AIM iterates")]
    PoleAtZ0(f64),

    /// The solver finished without finding any admissible bound state.
    #[error("no bound state found for this configuration")]
    NoBoundState,

    /// A sampling grid with zero points was requested.
    #[error("empty grid")]
    EmptyGrid,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code contract: 1 for parse/validation problems,
    /// 2 for solver failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter { .. }
            | Error::Parse { .. }
            | Error::MissingKey(_)
            | Error::EmptyGrid
            | Error::Io(_) => 1,
            _ => 2,
        }
    }
}
