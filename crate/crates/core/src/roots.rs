//! Construction, decomposition and classification of the roots of −1.

use crate::algebra::{Biquaternion, PureUnit, Quaternion};
use crate::error::{Error, Result};

/// Default perpendicularity tolerance for [`make_nontrivial_root`].
pub const PERPENDICULAR_TOLERANCE: f64 = 1e-9;
/// Default residual tolerance for [`classify_root`].
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// Builds `cosh(t) μ + sinh(t) ν I`, which squares to −1 whenever `μ ⊥ ν`.
pub fn make_nontrivial_root(mu: PureUnit, nu: PureUnit, t: f64) -> Result<Biquaternion> {
    make_nontrivial_root_with_tolerance(mu, nu, t, PERPENDICULAR_TOLERANCE)
}

pub fn make_nontrivial_root_with_tolerance(mu: PureUnit, nu: PureUnit, t: f64, tol: f64) -> Result<Biquaternion> {
    if !t.is_finite() {
        return Err(Error::NonFinite("hyperbolic parameter"));
    }
    let dot = mu.dot(&nu);
    if dot.abs() > tol {
        return Err(Error::NotPerpendicular { dot });
    }
    Ok(Biquaternion::new(
        mu.quaternion() * t.cosh(),
        nu.quaternion() * t.sinh(),
    ))
}

/// `q = (a + b μ) + (c + d ν) I` with `b, d ≥ 0`.
///
/// A direction is `None` exactly when its modulus is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposedForm {
    pub a: f64,
    pub b: f64,
    pub mu: Option<PureUnit>,
    pub c: f64,
    pub d: f64,
    pub nu: Option<PureUnit>,
}

impl DecomposedForm {
    pub fn mu_vector(&self) -> Quaternion {
        self.mu.map_or(Quaternion::ZERO, |m| m.quaternion())
    }

    pub fn nu_vector(&self) -> Quaternion {
        self.nu.map_or(Quaternion::ZERO, |n| n.quaternion())
    }

    pub fn reconstruct(&self) -> Biquaternion {
        Biquaternion::new(
            Quaternion::real(self.a) + self.mu_vector() * self.b,
            Quaternion::real(self.c) + self.nu_vector() * self.d,
        )
    }

    /// `μ · ν`, zero if either direction is absent.
    pub fn direction_dot(&self) -> f64 {
        match (self.mu, self.nu) {
            (Some(m), Some(n)) => m.dot(&n),
            _ => 0.0,
        }
    }
}

pub fn decompose(q: &Biquaternion) -> DecomposedForm {
    let (a, vr) = q.qr.split();
    let (c, vi) = q.qi.split();
    let b = vr.norm();
    let d = vi.norm();
    DecomposedForm {
        a,
        b,
        mu: if b > 0.0 { PureUnit::from_vector_part(&vr) } else { None },
        c,
        d,
        nu: if d > 0.0 { PureUnit::from_vector_part(&vi) } else { None },
    }
}

/// The four component classes of `q² + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    /// Real scalar: `a² − b² − c² + d² + 1`.
    pub scalar: f64,
    /// Real vector: `2ab μ − 2cd ν`.
    pub vector: Quaternion,
    /// Scalar coefficient of `I`: `2ac − 2bd (μ·ν)`.
    pub imag_scalar: f64,
    /// Vector coefficient of `I`: `2ad ν + 2bc μ`.
    pub imag_vector: Quaternion,
    /// Euclidean norm of the eight coefficients of `q² + 1`, from the generic product.
    pub aggregate: f64,
}

impl Residuals {
    pub fn reassemble(&self) -> Biquaternion {
        Biquaternion::new(
            Quaternion::real(self.scalar) + self.vector,
            Quaternion::real(self.imag_scalar) + self.imag_vector,
        )
    }

    /// Largest absolute coefficient over the four components.
    pub fn max_component(&self) -> f64 {
        self.reassemble().max_abs_diff(&Biquaternion::ZERO)
    }
}

pub fn constraint_residuals(q: &Biquaternion) -> Residuals {
    let f = decompose(q);
    let (a, b, c, d) = (f.a, f.b, f.c, f.d);
    let (mu, nu) = (f.mu_vector(), f.nu_vector());
    Residuals {
        scalar: a * a - b * b - c * c + d * d + 1.0,
        vector: mu * (2.0 * a * b) - nu * (2.0 * c * d),
        imag_scalar: 2.0 * a * c - 2.0 * b * d * f.direction_dot(),
        imag_vector: nu * (2.0 * a * d) + mu * (2.0 * b * c),
        aggregate: q.square_plus_one().coefficient_norm(),
    }
}

/// Which family of roots of −1, if any, a biquaternion belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootClassification {
    /// `cosh(t) μ + sinh(t) ν I` with `μ ⊥ ν`, `t > 0`. `ν` is returned
    /// orthogonalized against `μ`.
    Nontrivial {
        mu: PureUnit,
        nu: PureUnit,
        t: f64,
    },
    /// A unit pure real quaternion.
    UnitPure {
        mu: PureUnit,
    },
    /// `±I`; `sign` is `1` or `-1`.
    ImaginaryUnit {
        sign: i8,
    },
    NotRoot {
        residual: f64,
    },
}

impl RootClassification {
    pub fn is_root(&self) -> bool {
        !matches!(self, RootClassification::NotRoot { .. })
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            RootClassification::Nontrivial { .. } => "nontrivial",
            RootClassification::UnitPure { .. } => "unit-pure",
            RootClassification::ImaginaryUnit { .. } => "imaginary-unit",
            RootClassification::NotRoot { .. } => "not-a-root",
        }
    }
}

/// Classifies `q` as a root of −1.
///
/// The residual decides root or not; family membership is then checked
/// against the decomposition. A root that fits no family is returned as
/// [`Error::TheoremViolation`].
pub fn classify_root(q: &Biquaternion, tol: f64) -> Result<RootClassification> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::BadTolerance(tol));
    }
    if !q.is_finite() {
        return Err(Error::NonFinite("biquaternion"));
    }
    let residual = q.square_plus_one().coefficient_norm();
    if !residual.is_finite() {
        return Err(Error::NonFinite("residual"));
    }
    if residual > tol {
        return Ok(RootClassification::NotRoot { residual });
    }

    let f = decompose(q);
    if f.b <= tol && f.d <= tol {
        if f.c.abs() <= tol {
            return Err(violation(q, &f, "both vector parts vanish but c = 0"));
        }
        return Ok(RootClassification::ImaginaryUnit {
            sign: if f.c > 0.0 { 1 } else { -1 },
        });
    }
    if f.d <= tol && f.c.abs() <= tol {
        return match f.mu {
            Some(mu) => Ok(RootClassification::UnitPure { mu }),
            None => Err(violation(q, &f, "unit-pure candidate without direction")),
        };
    }

    let (Some(mu), Some(nu)) = (f.mu, f.nu) else {
        return Err(violation(q, &f, "nontrivial candidate missing a direction"));
    };
    // Perpendicularity is tested on d (mu . nu), the mu-component of the I
    // vector part. The residual bounds that product, not the bare cosine,
    // which is ill-conditioned as d -> 0.
    let dot = f.direction_dot();
    let checks = [
        ("|c| <= tol", f.c.abs() <= tol),
        ("|a| <= tol", f.a.abs() <= tol),
        ("|b^2 - d^2 - 1| <= tol", ((f.b - f.d) * (f.b + f.d) - 1.0).abs() <= tol),
        ("|d (mu . nu)| <= tol", (f.d * dot).abs() <= tol),
    ];
    if let Some((what, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(violation(q, &f, &format!("nontrivial check failed: {what}")));
    }
    let [mx, my, mz] = mu.to_array();
    let [nx, ny, nz] = nu.to_array();
    let nu = PureUnit::normalize(nx - dot * mx, ny - dot * my, nz - dot * mz)
        .ok_or_else(|| violation(q, &f, "nu parallel to mu"))?;
    Ok(RootClassification::Nontrivial { mu, nu, t: f.d.asinh() })
}

fn violation(q: &Biquaternion, f: &DecomposedForm, what: &str) -> Error {
    Error::TheoremViolation(format!(
        "{what}; q = {:?}, a = {}, b = {}, c = {}, d = {}, mu.nu = {}",
        q.to_array(),
        f.a,
        f.b,
        f.c,
        f.d,
        f.direction_dot()
    ))
}

/// Recovers `(b, d, t)` with `b = cosh t`, `d = sinh t` from a nontrivial classification.
pub fn recover_parameter(class: &RootClassification) -> Result<(f64, f64, f64)> {
    match *class {
        RootClassification::Nontrivial { t, .. } => Ok((t.cosh(), t.sinh(), t)),
        _ => Err(Error::WrongVariant),
    }
}
