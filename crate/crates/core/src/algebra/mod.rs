//! Real quaternions, biquaternions and the two biquaternion views.

mod biquaternion;
mod complex;
mod quaternion;

pub use biquaternion::{biquat_mul, Biquaternion};
pub use complex::{convert_view, ComplexScalar, ComplexView, Presentation, View};
pub use quaternion::{dot_cross, quat_mul, scalar_vector_split, PureUnit, Quaternion, UNIT_TOLERANCE};
