//! Biquaternions stored as `q_r + q_i I`, where `I` is a complex unit that
//! commutes with `i`, `j` and `k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use approx::AbsDiffEq;

use super::quaternion::Quaternion;

/// A biquaternion. The eight reals are laid out as
/// `(w_r, x_r, y_r, z_r, w_i, x_i, y_i, z_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[repr(C)]
pub struct Biquaternion {
    /// Real part.
    pub qr: Quaternion,
    /// Coefficient of `I`.
    pub qi: Quaternion,
}

impl Biquaternion {
    pub const ZERO: Self = Self::new(Quaternion::ZERO, Quaternion::ZERO);
    pub const ONE: Self = Self::new(Quaternion::ONE, Quaternion::ZERO);
    /// The complex unit `I`.
    pub const IMAG: Self = Self::new(Quaternion::ZERO, Quaternion::ONE);

    pub const fn new(qr: Quaternion, qi: Quaternion) -> Self {
        Self { qr, qi }
    }

    pub const fn from_real(qr: Quaternion) -> Self {
        Self::new(qr, Quaternion::ZERO)
    }

    /// `q I`, for a real quaternion `q`.
    pub const fn from_imag(qi: Quaternion) -> Self {
        Self::new(Quaternion::ZERO, qi)
    }

    pub const fn scalar(s: f64) -> Self {
        Self::from_real(Quaternion::real(s))
    }

    pub const fn to_array(self) -> [f64; 8] {
        let [a, b, c, d] = self.qr.to_array();
        let [e, f, g, h] = self.qi.to_array();
        [a, b, c, d, e, f, g, h]
    }

    pub const fn from_array([a, b, c, d, e, f, g, h]: [f64; 8]) -> Self {
        Self::new(Quaternion::new(a, b, c, d), Quaternion::new(e, f, g, h))
    }

    pub fn is_finite(&self) -> bool {
        self.qr.is_finite() && self.qi.is_finite()
    }

    /// Euclidean norm of the eight real coefficients. Unlike the algebraic
    /// biquaternion norm this never vanishes on a nonzero element.
    pub fn coefficient_norm(&self) -> f64 {
        (self.qr.norm_squared() + self.qi.norm_squared()).sqrt()
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.qr.max_abs_diff(&rhs.qr).max(self.qi.max_abs_diff(&rhs.qi))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.qr.scale(s), self.qi.scale(s))
    }

    /// `(p_r + p_i I)(q_r + q_i I) = (p_r q_r − p_i q_i) + (p_r q_i + p_i q_r) I`
    pub fn product(&self, rhs: &Self) -> Self {
        Self::new(self.qr * rhs.qr - self.qi * rhs.qi, self.qr * rhs.qi + self.qi * rhs.qr)
    }

    pub fn square(&self) -> Self {
        self.product(self)
    }

    /// `q² + 1`, whose coefficient norm measures distance from being a root of −1.
    pub fn square_plus_one(&self) -> Self {
        self.square() + Self::ONE
    }
}

/// Free-function form of the biquaternion product.
pub fn biquat_mul(p: Biquaternion, q: Biquaternion) -> Biquaternion {
    p.product(&q)
}

impl From<Quaternion> for Biquaternion {
    fn from(q: Quaternion) -> Self {
        Self::from_real(q)
    }
}

impl Add for Biquaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.qr + rhs.qr, self.qi + rhs.qi)
    }
}

impl Sub for Biquaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.qr - rhs.qr, self.qi - rhs.qi)
    }
}

impl Neg for Biquaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.qr, -self.qi)
    }
}

impl Mul for Biquaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl Mul<f64> for Biquaternion {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Biquaternion> for f64 {
    type Output = Biquaternion;
    fn mul(self, rhs: Biquaternion) -> Biquaternion {
        rhs.scale(self)
    }
}

impl std::iter::Sum for Biquaternion {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::ZERO, |acc, q| acc + q)
    }
}

impl AbsDiffEq for Biquaternion {
    type Epsilon = f64;

    fn default_epsilon() -> f64 {
        f64::EPSILON
    }

    fn abs_diff_eq(&self, other: &Self, epsilon: f64) -> bool {
        self.max_abs_diff(other) <= epsilon
    }
}

impl fmt::Display for Biquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})I", self.qr, self.qi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn bq(c: [f64; 8]) -> Biquaternion {
        Biquaternion::from_array(c)
    }

    #[test]
    fn example_one_squares_to_minus_one() {
        let q = bq([0.0, 2f64.sqrt(), 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert_abs_diff_eq!(q.square(), -Biquaternion::ONE, epsilon = 1e-15);
    }

    #[test]
    fn example_three_squares_to_minus_one() {
        let s3 = 3f64.sqrt();
        let s2 = 2f64.sqrt();
        let mu = Quaternion::pure(1.0, 1.0, 1.0) * (1.0 / s3);
        let nu = Quaternion::pure(0.0, 1.0, -1.0) * (1.0 / s2);
        let q = Biquaternion::new(nu * 3.0, mu * (2.0 * s2));
        assert_abs_diff_eq!(q.square(), -Biquaternion::ONE, epsilon = 1e-12);
    }

    #[test]
    fn nilpotent_example() {
        // (i + jI)² = -1 + 1 + (ij + ji)I = 0
        let q = Biquaternion::new(Quaternion::I, Quaternion::J);
        assert_eq!(biquat_mul(q, q), Biquaternion::ZERO);
    }

    #[test]
    fn agrees_with_quaternion_product_on_real_parts() {
        let p = Quaternion::new(1.0, -2.0, 0.5, 3.0);
        let q = Quaternion::new(-0.25, 4.0, 1.0, -1.0);
        assert_eq!(Biquaternion::from(p) * Biquaternion::from(q), Biquaternion::from(p * q));
    }

    #[test]
    fn imag_unit_squares_to_minus_one() {
        assert_eq!(Biquaternion::IMAG.square(), -Biquaternion::ONE);
        assert_eq!((-Biquaternion::IMAG).square(), -Biquaternion::ONE);
    }

    #[test]
    fn coefficient_order() {
        let q = bq([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        assert_eq!(q.qr, Quaternion::new(1.0, 2.0, 3.0, 4.0));
        assert_eq!(q.qi, Quaternion::new(5.0, 6.0, 7.0, 8.0));
        assert_eq!(q.to_array(), [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        assert_eq!(std::mem::size_of::<Biquaternion>(), 8 * std::mem::size_of::<f64>());
    }

    #[test]
    fn coefficient_norm_of_nilpotent_is_nonzero() {
        let q = Biquaternion::new(Quaternion::I, Quaternion::J);
        assert_eq!(q.coefficient_norm(), 2f64.sqrt());
    }
}
