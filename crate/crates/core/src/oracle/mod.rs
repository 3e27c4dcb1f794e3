//! Numerical evidence for the root classification: seeded sampling of
//! roots, lattice search over decomposed coefficients, Newton refinement
//! onto the root manifold and product-term tables.

mod lattice;
mod newton;
mod sampling;
mod table;

pub use lattice::{lattice_search, LatticeHit, LatticeSpec, SearchReport, MAX_LATTICE_POINTS};
pub use newton::{refine_root, Refinement, BASIN_LIMIT, CONVERGED_RESIDUAL, FD_STEP};
pub use sampling::{
    sample_perpendicular, sample_root, sample_root_with_parameters, sample_roots, sample_unit_pure, task_rng,
    SampledRoot,
};
pub use table::{symbolic, term_table, TermTable};
