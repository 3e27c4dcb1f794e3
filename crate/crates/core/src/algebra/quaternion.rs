//! Real quaternions and unit pure quaternions.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use approx::AbsDiffEq;

use crate::error::{Error, Result};

/// Default absolute tolerance for the unit-norm check on [`PureUnit`].
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// A real quaternion `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[repr(C)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    pub const fn pure(x: f64, y: f64, z: f64) -> Self {
        Self::new(0.0, x, y, z)
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub const fn from_array([w, x, y, z]: [f64; 4]) -> Self {
        Self::new(w, x, y, z)
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// Scalar part `S(q)`.
    pub fn scalar(&self) -> f64 {
        self.w
    }

    /// Vector part, with the scalar coefficient set to zero.
    pub fn vector(&self) -> Self {
        Self::pure(self.x, self.y, self.z)
    }

    /// Splits into scalar and vector parts; `scalar + vector` rebuilds `self` exactly.
    pub fn split(&self) -> (f64, Self) {
        (self.scalar(), self.vector())
    }

    pub fn is_pure(&self) -> bool {
        self.w == 0.0
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_squared(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Hamilton product, following `i² = j² = k² = ijk = −1`.
    pub fn product(&self, rhs: &Self) -> Self {
        let (a, b) = (self, rhs);
        Self::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }

    /// Dot product of the vector parts, ignoring scalars.
    pub(crate) fn vector_dot(&self, rhs: &Self) -> f64 {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub(crate) fn vector_cross(&self, rhs: &Self) -> Self {
        Self::pure(
            self.y * rhs.z - self.z * rhs.y,
            self.z * rhs.x - self.x * rhs.z,
            self.x * rhs.y - self.y * rhs.x,
        )
    }

    /// Dot and cross product of two pure quaternions.
    ///
    /// For pure `u`, `v` the Hamilton product satisfies `uv = −(u·v) + u×v`.
    /// Inputs with a nonzero scalar part are rejected.
    pub fn dot_cross(&self, rhs: &Self) -> Result<(f64, Self)> {
        for q in [self, rhs] {
            if !q.is_pure() {
                return Err(Error::NotPure { scalar: q.w });
            }
        }
        Ok((self.vector_dot(rhs), self.vector_cross(rhs)))
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.to_array()
            .iter()
            .zip(rhs.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Free-function form of the Hamilton product.
pub fn quat_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    p.product(&q)
}

/// Free-function form of [`Quaternion::split`].
pub fn scalar_vector_split(q: Quaternion) -> (f64, Quaternion) {
    q.split()
}

/// Free-function form of [`Quaternion::dot_cross`].
pub fn dot_cross(u: Quaternion, v: Quaternion) -> Result<(f64, Quaternion)> {
    u.dot_cross(&v)
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        rhs.scale(self)
    }
}

impl AbsDiffEq for Quaternion {
    type Epsilon = f64;

    fn default_epsilon() -> f64 {
        f64::EPSILON
    }

    fn abs_diff_eq(&self, other: &Self, epsilon: f64) -> bool {
        self.max_abs_diff(other) <= epsilon
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

/// A unit pure quaternion, i.e. a direction in 3-space. Squares to −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureUnit {
    x: f64,
    y: f64,
    z: f64,
}

impl PureUnit {
    pub const I: Self = Self { x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Self = Self { x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Self = Self { x: 0.0, y: 0.0, z: 1.0 };

    /// Accepts `(x, y, z)` as-is if its norm is within [`UNIT_TOLERANCE`] of 1.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::with_tolerance(x, y, z, UNIT_TOLERANCE)
    }

    pub fn with_tolerance(x: f64, y: f64, z: f64, tol: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite("unit vector"));
        }
        let norm = (x * x + y * y + z * z).sqrt();
        if (norm - 1.0).abs() > tol {
            return Err(Error::NotUnit { norm });
        }
        Ok(Self { x, y, z })
    }

    /// Scales `(x, y, z)` to unit length. `None` for zero or non-finite input.
    pub fn normalize(x: f64, y: f64, z: f64) -> Option<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return None;
        }
        Some(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// Direction of the vector part of `q`, if it is nonzero.
    pub fn from_vector_part(q: &Quaternion) -> Option<Self> {
        Self::normalize(q.x, q.y, q.z)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn quaternion(&self) -> Quaternion {
        Quaternion::pure(self.x, self.y, self.z)
    }

    pub fn dot(&self, rhs: &Self) -> f64 {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.quaternion().max_abs_diff(&rhs.quaternion())
    }
}

impl Neg for PureUnit {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl From<PureUnit> for Quaternion {
    fn from(u: PureUnit) -> Self {
        u.quaternion()
    }
}
