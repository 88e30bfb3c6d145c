//! Three points in the disc, modelled as the plane.
//!
//! Configurations are classified by collinearity of each end and by whether
//! the two ends share the normalized discriminant `δ`. Paths are built by
//! retracting both ends onto rotation-invariant canonical forms while `δ`
//! stays fixed.

mod align;
mod moves;
mod orientation;
mod planner;
mod retract;
mod stratum;

pub use align::{align_terminal, coorient, coorientation_gap, pair_deformation_to_path, relative_angle};
pub use moves::{PhaseLift, PlaneMove};
pub use orientation::{discriminant, is_collinear, orientation, rotate, Orientation};
pub use planner::{plan, DiscPlan};
pub use retract::{retract_line, retract_triangle, CanonicalForm, CanonicalKind, DiscPath};
pub use stratum::{stratum, Component, DiscStratum, StratumIndex};
