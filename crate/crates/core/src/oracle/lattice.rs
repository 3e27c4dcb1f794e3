use rayon::prelude::*;

use crate::algebra::{Biquaternion, PureUnit, Quaternion};
use crate::error::{Error, Result};
use crate::roots::{classify_root, RootClassification};

/// Scans larger than this are refused.
pub const MAX_LATTICE_POINTS: u128 = 100_000_000;

/// Grid over `(a, b, c, d) ∈ [−bound, bound]⁴` with spacing `step`, for
/// `q = (a + b μ) + (c + d ν) I` with fixed directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    pub bound: f64,
    pub step: f64,
    pub mu: PureUnit,
    pub nu: PureUnit,
}

impl LatticeSpec {
    /// Number of steps from 0 to `bound`. `bound / step` must be an integer.
    pub fn half_width(&self) -> Result<u64> {
        let (bound, step) = (self.bound, self.step);
        if !(bound > 0.0 && bound.is_finite() && step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidLattice(format!(
                "bound {bound} and step {step} must be positive and finite"
            )));
        }
        let ratio = bound / step;
        let n = ratio.round();
        if (ratio - n).abs() > 1e-9 * ratio.max(1.0) || n > u32::MAX as f64 {
            return Err(Error::InvalidLattice(format!(
                "bound {bound} is not an integer multiple of step {step}"
            )));
        }
        Ok(n as u64)
    }

    pub fn point_count(&self) -> Result<u128> {
        let side = 2 * self.half_width()? as u128 + 1;
        Ok(side.pow(4))
    }

    /// Axis values `k · step` for `k = −n..=n`, so 0 is always present.
    pub fn axis(&self) -> Result<Vec<f64>> {
        let n = self.half_width()? as i64;
        Ok((-n..=n).map(|k| k as f64 * self.step).collect())
    }

    pub fn point(&self, a: f64, b: f64, c: f64, d: f64) -> Biquaternion {
        Biquaternion::new(
            Quaternion::real(a) + self.mu.quaternion() * b,
            Quaternion::real(c) + self.nu.quaternion() * d,
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatticeHit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub residual: f64,
    /// `Err` holds the theorem-violation diagnostic for a hit that fit no family.
    pub classification: Result<RootClassification>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    /// Hits in lattice order (`a` slowest, `d` fastest).
    pub hits: Vec<LatticeHit>,
    pub scanned: u64,
    pub tolerance: f64,
}

impl SearchReport {
    pub fn violations(&self) -> impl Iterator<Item = &LatticeHit> {
        self.hits.iter().filter(|h| h.classification.is_err())
    }

    pub fn has_violation(&self) -> bool {
        self.violations().next().is_some()
    }

    /// Counts of (nontrivial, unit-pure, imaginary-unit) hits.
    pub fn family_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for hit in &self.hits {
            match hit.classification {
                Ok(RootClassification::Nontrivial { .. }) => counts.0 += 1,
                Ok(RootClassification::UnitPure { .. }) => counts.1 += 1,
                Ok(RootClassification::ImaginaryUnit { .. }) => counts.2 += 1,
                _ => {}
            }
        }
        counts
    }
}

/// Squares every lattice point and records those with `‖q² + 1‖ ≤ tol`.
///
/// Rows of constant `a` are scanned in parallel and concatenated in order,
/// so the report does not depend on the thread count.
pub fn lattice_search(spec: &LatticeSpec, tol: f64) -> Result<SearchReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::BadTolerance(tol));
    }
    let points = spec.point_count()?;
    if points > MAX_LATTICE_POINTS {
        return Err(Error::GridTooLarge {
            points,
            limit: MAX_LATTICE_POINTS,
        });
    }
    let axis = spec.axis()?;

    let rows: Vec<Vec<LatticeHit>> = axis
        .par_iter()
        .map(|&a| {
            let mut hits = Vec::new();
            for &b in &axis {
                for &c in &axis {
                    for &d in &axis {
                        let q = spec.point(a, b, c, d);
                        let residual = q.square_plus_one().coefficient_norm();
                        if residual <= tol {
                            let classification = classify_root(&q, tol);
                            hits.push(LatticeHit {
                                a,
                                b,
                                c,
                                d,
                                residual,
                                classification,
                            });
                        }
                    }
                }
            }
            hits
        })
        .collect();

    Ok(SearchReport {
        hits: rows.into_iter().flatten().collect(),
        scanned: points as u64,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(bound: f64, step: f64) -> LatticeSpec {
        LatticeSpec {
            bound,
            step,
            mu: PureUnit::I,
            nu: PureUnit::J,
        }
    }

    #[test]
    fn axis_contains_zero_and_units() {
        let axis = spec(2.0, 0.25).axis().unwrap();
        assert_eq!(axis.len(), 17);
        for v in [-2.0, -1.0, 0.0, 1.0, 2.0] {
            assert!(axis.contains(&v));
        }
        assert_eq!(spec(2.0, 0.25).point_count().unwrap(), 83_521);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(spec(1.0, 0.3).axis(), Err(Error::InvalidLattice(_))));
        assert!(matches!(spec(-1.0, 0.25).axis(), Err(Error::InvalidLattice(_))));
        assert!(matches!(spec(1.0, 0.0).axis(), Err(Error::InvalidLattice(_))));
        assert!(matches!(
            lattice_search(&spec(100.0, 0.01), 1e-9),
            Err(Error::GridTooLarge { points, .. }) if points == 20_001u128.pow(4)
        ));
        assert!(matches!(
            lattice_search(&spec(1.0, 0.5), -1.0),
            Err(Error::BadTolerance(_))
        ));
    }

    #[test]
    fn small_box_has_no_roots() {
        let report = lattice_search(&spec(0.5, 0.25), 1e-9).unwrap();
        assert!(report.hits.is_empty());
        assert_eq!(report.scanned, 625);
    }

    #[test]
    fn unit_box_finds_degenerate_roots() {
        let report = lattice_search(&spec(1.0, 1.0), 1e-9).unwrap();
        assert_eq!(report.family_counts(), (0, 2, 2));
        assert!(!report.has_violation());
    }
}
