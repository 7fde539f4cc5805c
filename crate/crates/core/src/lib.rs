//! Projection onto the homogenization cone `K = cl cone(C x {1})` of a
//! closed convex set `C` containing the origin, using only a projector onto
//! `C`, together with polar-set and polar-cone membership oracles.

pub mod cli;
pub mod error;
pub mod figures;
pub mod format;
pub mod homproj;
pub mod oracle;
pub mod polar;
pub mod reference_run;
pub mod scaledfun;
pub mod sets;
pub mod vector;

pub use error::{Error, Result};
pub use homproj::{
    project_ball_pen, project_homogenization, project_ice_cream, Branch, ConePoint,
    ProjectionOptions, ProjectionResult,
};
pub use polar::{homogenization_polar_membership, polar_cone_membership, polar_membership};
pub use scaledfun::PsiEvaluator;
pub use sets::{ConeDescriptor, SetDescriptor, SetSpec};
pub use vector::Vector;
