//! Motion planner for `n` unordered points on the annulus `S¹ × ℝ`.
//!
//! A pair `(x, y)` is labeled by its degree, the number of distinct angles
//! occupied by `x ∪ y`, which takes at most `2n` values. Within a degree the
//! pair is further classified by the per-fiber count differences up to
//! cyclic rotation. The rule is the same everywhere: while some fiber holds
//! more points of `x` than of `y`, the surplus top points slide to the next
//! fiber in the increasing-angle direction; once every fiber is balanced the
//! points are interpolated linearly inside their fibers.

mod fibers;
mod moves;
mod planner;

pub use fibers::{
    angular_support, degree, fiber_decomposition, min_rotation, psi_class, AnnulusStratum, FiberDecomposition,
};
pub use moves::AnnulusMove;
pub use planner::{
    interpolate_fiberwise, iteration_cap, plan, redistribution_step, stratum, AnnulusPath, AnnulusPlan, AnnulusTrace,
};
