//! Points, unordered configurations and symbolic paths shared by both planners.
//!
//! The circle factor of the annulus is `ℝ/ℤ` with circumference 1; the
//! increasing-angle direction is the transport direction of the annulus
//! planner. Configurations are canonicalized by sorting, so two unordered
//! configurations are equal exactly when their point lists are.

mod configuration;
mod path;
mod point;
mod validate;

pub use configuration::{
    bottleneck_distance, canonicalize, min_separation, Configuration, Tolerances, MIN_INPUT_SEPARATION,
};
pub use path::{evaluate_path, Motion, MoveKind, PathPlan, Segment};
pub use point::{circle_diff, wrap_turns, AnnulusPoint, PlanePoint, Surface, SurfacePoint};
pub use validate::{validate_path, ValidationReport};
