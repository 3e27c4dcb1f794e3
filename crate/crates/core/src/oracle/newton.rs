use nalgebra::{SMatrix, SVector};

use crate::algebra::Biquaternion;
use crate::error::{Error, Result};
use crate::roots::{classify_root, RootClassification, RESIDUAL_TOLERANCE};

/// Largest starting residual accepted by [`refine_root`].
pub const BASIN_LIMIT: f64 = 0.1;
/// Target residual for a converged refinement.
pub const CONVERGED_RESIDUAL: f64 = 1e-12;
/// Central-difference step for the Jacobian.
pub const FD_STEP: f64 = 1e-6;

/// Singular values below this fraction of the largest are treated as zero.
const RANK_CUTOFF: f64 = 1e-10;
const MAX_HALVINGS: usize = 30;

type Vec8 = SVector<f64, 8>;
type Mat8 = SMatrix<f64, 8, 8>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refinement {
    pub root: Biquaternion,
    pub iterations: usize,
    pub residual: f64,
    pub classification: RootClassification,
}

fn to_vec(q: &Biquaternion) -> Vec8 {
    Vec8::from(q.to_array())
}

fn from_vec(v: &Vec8) -> Biquaternion {
    let mut c = [0.0; 8];
    c.copy_from_slice(v.as_slice());
    Biquaternion::from_array(c)
}

fn residual_map(v: &Vec8) -> Vec8 {
    to_vec(&from_vec(v).square_plus_one())
}

fn jacobian(v: &Vec8) -> Mat8 {
    let mut jac = Mat8::zeros();
    for k in 0..8 {
        let mut fwd = *v;
        let mut back = *v;
        fwd[k] += FD_STEP;
        back[k] -= FD_STEP;
        let column = (residual_map(&fwd) - residual_map(&back)) / (2.0 * FD_STEP);
        jac.set_column(k, &column);
    }
    jac
}

/// Minimum-norm solution of `J δ = −F`. The root set has dimension four,
/// so `J` is rank deficient on it and a plain solve would be singular.
fn newton_step(jac: &Mat8, f: &Vec8) -> Option<Vec8> {
    let svd = jac.svd(true, true);
    let cutoff = svd.singular_values.max() * RANK_CUTOFF;
    if cutoff <= 0.0 || !cutoff.is_finite() {
        return None;
    }
    svd.solve(&(-f), cutoff).ok()
}

/// Pulls a near-root onto `{q : q² = −1}` by Newton iteration on the eight
/// coefficients of `q² + 1`, then classifies the result.
///
/// Each iteration takes the minimum-norm Gauss-Newton step and halves it
/// until the residual decreases.
pub fn refine_root(q0: &Biquaternion, max_iter: usize) -> Result<Refinement> {
    if !q0.is_finite() {
        return Err(Error::NonFinite("starting point"));
    }
    let mut x = to_vec(q0);
    let mut f = residual_map(&x);
    let mut residual = f.norm();
    if residual.is_nan() || residual > BASIN_LIMIT {
        return Err(Error::OutsideBasin {
            residual,
            limit: BASIN_LIMIT,
        });
    }

    let mut iterations = 0;
    while residual > CONVERGED_RESIDUAL {
        if iterations == max_iter {
            return Err(Error::NotConverged { iterations, residual });
        }
        iterations += 1;

        let step = newton_step(&jacobian(&x), &f).ok_or(Error::Stalled { residual })?;
        let mut scale = 1.0;
        let mut accepted = None;
        for _ in 0..=MAX_HALVINGS {
            let candidate = x + step * scale;
            let fc = residual_map(&candidate);
            if fc.norm() < residual {
                accepted = Some((candidate, fc));
                break;
            }
            scale *= 0.5;
        }
        let (next, fnext) = accepted.ok_or(Error::Stalled { residual })?;
        x = next;
        f = fnext;
        residual = f.norm();
    }

    let root = from_vec(&x);
    let classification = classify_root(&root, RESIDUAL_TOLERANCE)?;
    Ok(Refinement {
        root,
        iterations,
        residual,
        classification,
    })
}
