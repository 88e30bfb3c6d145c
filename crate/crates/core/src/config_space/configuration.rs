use serde::{Deserialize, Serialize};

use super::point::SurfacePoint;
use crate::error::{PlanError, Result};

/// Smallest pairwise distance accepted for planner inputs.
pub const MIN_INPUT_SEPARATION: f64 = 1e-7;

/// An unordered configuration of pairwise distinct points, stored in
/// canonical order so that equality of configurations is list equality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Configuration<P> {
    points: Vec<P>,
}

impl<P: SurfacePoint> Configuration<P> {
    /// Sorts `points` into canonical order. Fails if two points coincide exactly.
    pub fn new(points: Vec<P>) -> Result<Self> {
        canonicalize(points)
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min_separation(&self) -> f64 {
        min_separation(&self.points)
    }

    /// Checks the planner input contract: finite coordinates and separation
    /// of at least [`MIN_INPUT_SEPARATION`].
    pub fn check_planner_input(&self) -> Result<()> {
        if self.points.iter().any(|p| p.coords().iter().any(|c| !c.is_finite())) {
            return Err(PlanError::NonFinite);
        }
        let sep = self.min_separation();
        if sep < MIN_INPUT_SEPARATION {
            return Err(PlanError::InsufficientSeparation {
                found: sep,
                required: MIN_INPUT_SEPARATION,
            });
        }
        Ok(())
    }
}

impl<P: SurfacePoint> Configuration<P> {
    pub fn into_points(self) -> Vec<P> {
        self.points
    }
}

/// Returns the canonical (sorted) configuration of `points`.
pub fn canonicalize<P: SurfacePoint>(mut points: Vec<P>) -> Result<Configuration<P>> {
    points.sort_by(|a, b| a.canonical_cmp(b));
    if points.windows(2).any(|w| w[0] == w[1]) {
        return Err(PlanError::DuplicatePoint);
    }
    Ok(Configuration { points })
}

/// Minimum pairwise distance; `f64::INFINITY` for fewer than two points.
pub fn min_separation<P: SurfacePoint>(points: &[P]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            best = best.min(a.distance(b));
        }
    }
    best
}

/// Bottleneck distance between two point lists of equal length: the smallest
/// `d` such that some bijection moves every point by at most `d`.
pub fn bottleneck_distance<P: SurfacePoint>(a: &[P], b: &[P]) -> f64 {
    assert_eq!(a.len(), b.len(), "bottleneck distance needs equal sizes");
    let n = a.len();
    if n == 0 {
        return 0.0;
    }
    let dist: Vec<Vec<f64>> = a.iter().map(|p| b.iter().map(|q| p.distance(q)).collect()).collect();

    // Index-wise matching is optimal whenever it moves each point by less
    // than half the separation of either side.
    let direct = (0..n).map(|i| dist[i][i]).fold(0.0, f64::max);
    if 2.0 * direct < min_separation(a).min(min_separation(b)) {
        return direct;
    }

    let mut thresholds: Vec<f64> = dist.iter().flatten().copied().collect();
    thresholds.sort_by(f64::total_cmp);
    thresholds.dedup();
    let (mut lo, mut hi) = (0, thresholds.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if has_perfect_matching(&dist, thresholds[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    thresholds[lo]
}

fn has_perfect_matching(dist: &[Vec<f64>], limit: f64) -> bool {
    let n = dist.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for row in 0..n {
        let mut seen = vec![false; n];
        if !augment(row, dist, limit, &mut seen, &mut owner) {
            return false;
        }
    }
    true
}

fn augment(row: usize, dist: &[Vec<f64>], limit: f64, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for col in 0..dist.len() {
        if dist[row][col] <= limit && !seen[col] {
            seen[col] = true;
            let free = match owner[col] {
                None => true,
                Some(other) => augment(other, dist, limit, seen, owner),
            };
            if free {
                owner[col] = Some(row);
                return true;
            }
        }
    }
    false
}

/// Numerical tolerances shared by both planners.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Angles closer than this (in turns) share a fiber.
    pub tau_angle: f64,
    /// Collinearity and coorientation threshold.
    pub tau_geom: f64,
    /// Number of uniform samples used by path validation.
    pub n_time_samples: usize,
    /// Grid size for lifting the orientation phase to the universal cover.
    pub lift_steps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tau_angle: 1e-9,
            tau_geom: 1e-9,
            n_time_samples: 1024,
            lift_steps: 4096,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let ok = self.tau_angle > 0.0 && self.tau_geom > 0.0 && self.n_time_samples > 0 && self.lift_steps > 0;
        if ok {
            Ok(())
        } else {
            Err(PlanError::InvalidTolerances(format!("{self:?}")))
        }
    }
}
