//! The complex-components view `w + x i + y j + z k` with `w, x, y, z ∈ ℂ`.
//!
//! The view is a relabeling of the same eight reals stored in a
//! [`Biquaternion`]; conversion in either direction performs no arithmetic.

use std::fmt;

use super::biquaternion::Biquaternion;
use super::quaternion::Quaternion;

/// A complex number `re + im I`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl ComplexScalar {
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}I", self.re, self.im)
    }
}

/// A biquaternion seen as four complex coefficients of `1, i, j, k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexView {
    pub w: ComplexScalar,
    pub x: ComplexScalar,
    pub y: ComplexScalar,
    pub z: ComplexScalar,
}

impl ComplexView {
    pub fn components(&self) -> [ComplexScalar; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// Coefficients interleaved as `(Re w, Im w, Re x, Im x, ...)`.
    pub fn to_interleaved(&self) -> [f64; 8] {
        let [w, x, y, z] = self.components();
        [w.re, w.im, x.re, x.im, y.re, y.im, z.re, z.im]
    }

    pub fn from_interleaved([a, b, c, d, e, f, g, h]: [f64; 8]) -> Self {
        Self {
            w: ComplexScalar::new(a, b),
            x: ComplexScalar::new(c, d),
            y: ComplexScalar::new(e, f),
            z: ComplexScalar::new(g, h),
        }
    }
}

impl From<Biquaternion> for ComplexView {
    fn from(q: Biquaternion) -> Self {
        let (r, i) = (q.qr, q.qi);
        Self {
            w: ComplexScalar::new(r.w, i.w),
            x: ComplexScalar::new(r.x, i.x),
            y: ComplexScalar::new(r.y, i.y),
            z: ComplexScalar::new(r.z, i.z),
        }
    }
}

impl From<ComplexView> for Biquaternion {
    fn from(v: ComplexView) -> Self {
        Biquaternion::new(
            Quaternion::new(v.w.re, v.x.re, v.y.re, v.z.re),
            Quaternion::new(v.w.im, v.x.im, v.y.im, v.z.im),
        )
    }
}

/// Which of the two equivalent presentations to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum View {
    /// `q_r + q_i I`
    Parts,
    /// `w + x i + y j + z k`, complex coefficients
    Complex,
}

/// A biquaternion presented in one of the two views.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Presentation {
    Parts(Biquaternion),
    Complex(ComplexView),
}

impl Presentation {
    pub fn view(&self) -> View {
        match self {
            Presentation::Parts(_) => View::Parts,
            Presentation::Complex(_) => View::Complex,
        }
    }

    pub fn biquaternion(&self) -> Biquaternion {
        match *self {
            Presentation::Parts(q) => q,
            Presentation::Complex(v) => v.into(),
        }
    }
}

impl From<Presentation> for Biquaternion {
    fn from(p: Presentation) -> Self {
        p.biquaternion()
    }
}

/// Presents `q` in the requested view.
pub fn convert_view(q: impl Into<Biquaternion>, target: View) -> Presentation {
    let q = q.into();
    match target {
        View::Parts => Presentation::Parts(q),
        View::Complex => Presentation::Complex(q.into()),
    }
}
