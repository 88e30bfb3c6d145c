use serde::Serialize;

use super::configuration::{canonicalize, min_separation, Tolerances};
use super::path::{Motion, PathPlan};
use super::point::SurfacePoint;

/// Outcome of sampling a path. Failures are carried as data.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    /// `evaluate(0)` and `evaluate(1)` equal the declared start and goal exactly.
    pub endpoints_ok: bool,
    /// Smallest pairwise distance seen over all samples (0 on a collision).
    pub min_separation_over_samples: f64,
    /// Largest single-track displacement between adjacent samples.
    pub max_step_displacement: f64,
    pub samples: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.endpoints_ok && self.min_separation_over_samples > 0.0
    }
}

/// Samples `path` at `tol.n_time_samples` uniform times (both endpoints
/// included) and reports endpoint exactness, clearance and step size.
pub fn validate_path<M: Motion>(path: &PathPlan<M>, tol: &Tolerances) -> ValidationReport {
    let samples = path.sample_tracks(tol.n_time_samples);
    let endpoints_ok = {
        let first = canonicalize(samples[0].1.clone());
        let last = canonicalize(samples[samples.len() - 1].1.clone());
        matches!(first, Ok(ref c) if c == path.start()) && matches!(last, Ok(ref c) if c == path.goal())
    };
    let mut min_sep = f64::INFINITY;
    let mut max_step: f64 = 0.0;
    for (k, (_, tracks)) in samples.iter().enumerate() {
        min_sep = min_sep.min(min_separation(tracks));
        if k > 0 {
            let prev = &samples[k - 1].1;
            for (a, b) in prev.iter().zip(tracks) {
                max_step = max_step.max(a.distance(b));
            }
        }
    }
    ValidationReport {
        endpoints_ok,
        min_separation_over_samples: min_sep,
        max_step_displacement: max_step,
        samples: samples.len(),
    }
}
