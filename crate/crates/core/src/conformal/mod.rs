//! Riemann mapping of the unit disk onto the interior of a Jordan curve by
//! iterative boundary reparametrization, and evaluation of the solved map on
//! a polar mesh.

mod curve;
mod solve;

pub use curve::{BoundaryCurve, CurveFn, SampledCurve, Shape};
pub use solve::{
    centroid, coefficients, dissatisfaction, evaluate_disk, solve, solve_with_center, Center, ConformalSolution,
    DiskMesh, DEFAULT_MAX_ITER, DEFAULT_TOL, MIN_GRID,
};
