//! Bound-state spectrum solver for the D-dimensional Dirac equation
//! (D = 5 and D = 3) under spin symmetry, with a q-deformed hyperbolic
//! Rosen-Morse radial potential and q-deformed trigonometric Scarf
//! non-central angular potentials, solved by the asymptotic iteration
//! method (AIM).
//!
//! Layout:
//! * [`qdeform`] — q-deformed hyperbolic/trigonometric function kernel;
//! * [`pekeris`] — centrifugal-term approximation and strength `omega`;
//! * [`aim`] — rational-function AIM engine, quantization determinant,
//!   terminating hypergeometric closed forms;
//! * [`angular`] — the Scarf angular cascade `lambda_1 -> ... -> l'`;
//! * [`radial`] — radial substitutions, energy residual, wave functions;
//! * [`spectrum`] — the coupled transcendental root finder over `E`;
//! * [`cli`] — config parsing, table reproduction, CSV emission.
//!
//! The `examples/` directory demonstrates each capability end to end;
//! the `dirac-aim` binary is a thin wrapper over [`cli`].

pub mod aim;
pub mod angular;
pub mod cli;
pub mod error;
pub mod pekeris;
pub mod qdeform;
pub mod radial;
pub mod spectrum;

pub use error::{Error, Result};
