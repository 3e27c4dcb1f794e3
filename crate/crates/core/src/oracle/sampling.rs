use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::algebra::{Biquaternion, PureUnit};
use crate::error::{Error, Result};
use crate::roots::make_nontrivial_root;

/// Projections shorter than this are redrawn in [`sample_perpendicular`].
const MIN_PROJECTION: f64 = 1e-6;

/// Random stream for task `task` of a run seeded with `seed`.
///
/// Every task gets the ChaCha8 generator keyed by `seed` with its stream
/// number set to `task`, so batch results do not depend on how tasks are
/// scheduled across threads.
pub fn task_rng(seed: u64, task: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(task);
    rng
}

/// Uniform direction on the unit sphere (normalized Gaussian triple).
pub fn sample_unit_pure<R: Rng + ?Sized>(rng: &mut R) -> PureUnit {
    loop {
        let x: f64 = rng.sample(StandardNormal);
        let y: f64 = rng.sample(StandardNormal);
        let z: f64 = rng.sample(StandardNormal);
        if let Some(u) = PureUnit::normalize(x, y, z) {
            return u;
        }
    }
}

/// Uniform direction on the great circle perpendicular to `mu`.
pub fn sample_perpendicular<R: Rng + ?Sized>(mu: &PureUnit, rng: &mut R) -> PureUnit {
    let m = mu.to_array();
    loop {
        let v = sample_unit_pure(rng).to_array();
        let along = v[0] * m[0] + v[1] * m[1] + v[2] * m[2];
        let p = [v[0] - along * m[0], v[1] - along * m[1], v[2] - along * m[2]];
        let len = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        if len < MIN_PROJECTION {
            continue;
        }
        if let Some(u) = PureUnit::normalize(p[0], p[1], p[2]) {
            return u;
        }
    }
}

/// A sampled nontrivial root together with the parameters that built it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledRoot {
    pub mu: PureUnit,
    pub nu: PureUnit,
    pub t: f64,
    pub root: Biquaternion,
}

/// Draws `mu`, then `nu ⊥ mu`, then `t` uniform in `(0, t_max]`.
pub fn sample_root_with_parameters<R: Rng + ?Sized>(rng: &mut R, t_max: f64) -> Result<SampledRoot> {
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "t_max must be positive and finite, got {t_max}"
        )));
    }
    let mu = sample_unit_pure(rng);
    let nu = sample_perpendicular(&mu, rng);
    let t = t_max * (1.0 - rng.gen::<f64>());
    let root = make_nontrivial_root(mu, nu, t)?;
    Ok(SampledRoot { mu, nu, t, root })
}

pub fn sample_root<R: Rng + ?Sized>(rng: &mut R, t_max: f64) -> Result<Biquaternion> {
    sample_root_with_parameters(rng, t_max).map(|s| s.root)
}

/// `count` roots; root `n` is drawn from `task_rng(seed, n)`.
pub fn sample_roots(seed: u64, count: usize, t_max: f64) -> Result<Vec<SampledRoot>> {
    (0..count as u64)
        .into_par_iter()
        .map(|n| sample_root_with_parameters(&mut task_rng(seed, n), t_max))
        .collect()
}
