//! Generic asymptotic-iteration-method engine: exact rational-function
//! arithmetic for the iterates, the quantization determinant, eigenvalue
//! search over a one-parameter coefficient family, and the terminating
//! hypergeometric closed forms.

pub mod engine;
pub mod hypergeom;
pub mod poly;
pub mod rational;

pub use engine::{
    aim_step, aim_step_capped, delta_with_scale, find_eigenvalue, quantization_delta, AimState,
    DEFAULT_DEGREE_CAP,
};
pub use hypergeom::{
    hypergeom_2f1_terminating, pochhammer, template_solution, HypergeomTemplate,
};
pub use poly::Polynomial;
pub use rational::RationalFn;
