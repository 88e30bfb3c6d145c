//! Collision-free motion planning for unordered point configurations.
//!
//! * [`annulus`]: a planner for `n` points on the annulus with at most `2n`
//!   continuous rules, one per degree of the pair.
//! * [`disc3`]: a planner for 3 points in the plane with four rules, built
//!   from the discriminant orientation and two deformation retractions.
//! * [`braid`]: linking numbers of pure braids, commutator membership,
//!   conjugation action and related witnesses.
//! * [`harness`]: random instances, continuity probes, partition checks,
//!   export and rendering.

pub mod annulus;
pub mod braid;
pub mod config_space;
pub mod disc3;
pub mod error;
pub mod harness;

pub use error::{BraidError, HarnessError, PlanError};
