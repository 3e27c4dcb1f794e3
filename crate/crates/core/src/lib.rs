//! Biquaternion (complexified quaternion) arithmetic and the square roots of −1.
//!
//! Every root of −1 among biquaternions `q = (a + bμ) + (c + dν)I` falls in
//! one of three families:
//!
//! * `q = cosh(t) μ + sinh(t) ν I` with `μ ⊥ ν`, `t > 0` (nontrivial),
//! * `q = μ`, a unit pure real quaternion,
//! * `q = ±I`.
//!
//! [`roots`] constructs and classifies these; [`oracle`] provides sampling,
//! lattice search, Newton refinement and product-term tables used to check
//! the classification numerically.

pub mod algebra;
mod error;
pub mod format;
pub mod oracle;
pub mod roots;

pub use algebra::{
    biquat_mul, convert_view, dot_cross, quat_mul, scalar_vector_split, Biquaternion, ComplexScalar, ComplexView,
    Presentation, PureUnit, Quaternion, View,
};
pub use error::{Error, Result};
pub use roots::{
    classify_root, constraint_residuals, decompose, make_nontrivial_root, make_nontrivial_root_with_tolerance,
    recover_parameter, DecomposedForm, Residuals, RootClassification, PERPENDICULAR_TOLERANCE, RESIDUAL_TOLERANCE,
};
