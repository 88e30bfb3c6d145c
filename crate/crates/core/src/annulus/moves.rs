use serde::Serialize;

use crate::config_space::{circle_diff, AnnulusPoint, Motion, MoveKind};

/// Primitive moves of the annulus planner. Heights always interpolate
/// linearly in local time.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum AnnulusMove {
    /// Each track moves inside its own fiber (angles change by at most the
    /// fiber-grouping tolerance).
    FiberwiseLinear {
        start: Vec<AnnulusPoint>,
        end: Vec<AnnulusPoint>,
    },
    /// Track `k` advances its angle by `advance[k] ∈ [0, 1)` turns in the
    /// increasing direction; tracks with zero advance and equal endpoints stay put.
    ArcSlide {
        start: Vec<AnnulusPoint>,
        end: Vec<AnnulusPoint>,
        advance: Vec<f64>,
    },
}

impl AnnulusMove {
    pub fn constant(points: Vec<AnnulusPoint>) -> Self {
        AnnulusMove::FiberwiseLinear {
            start: points.clone(),
            end: points,
        }
    }

    fn angle_change(&self, k: usize) -> f64 {
        match self {
            AnnulusMove::FiberwiseLinear { start, end } => circle_diff(start[k].theta(), end[k].theta()),
            AnnulusMove::ArcSlide { advance, .. } => advance[k],
        }
    }
}

fn lerp(a: f64, b: f64, s: f64) -> f64 {
    (1.0 - s) * a + s * b
}

impl Motion for AnnulusMove {
    type Point = AnnulusPoint;

    fn kind(&self) -> MoveKind {
        match self {
            AnnulusMove::FiberwiseLinear { .. } => MoveKind::FiberwiseLinear,
            AnnulusMove::ArcSlide { .. } => MoveKind::ArcSlide,
        }
    }

    fn start(&self) -> &[AnnulusPoint] {
        match self {
            AnnulusMove::FiberwiseLinear { start, .. } | AnnulusMove::ArcSlide { start, .. } => start,
        }
    }

    fn end(&self) -> &[AnnulusPoint] {
        match self {
            AnnulusMove::FiberwiseLinear { end, .. } | AnnulusMove::ArcSlide { end, .. } => end,
        }
    }

    fn eval(&self, s: f64) -> Vec<AnnulusPoint> {
        if s <= 0.0 {
            return self.start().to_vec();
        }
        if s >= 1.0 {
            return self.end().to_vec();
        }
        let (start, end) = (self.start(), self.end());
        (0..start.len())
            .map(|k| {
                if start[k] == end[k] {
                    return start[k];
                }
                AnnulusPoint::new(
                    start[k].theta() + s * self.angle_change(k),
                    lerp(start[k].height(), end[k].height(), s),
                )
            })
            .collect()
    }

    fn speed_bound(&self) -> f64 {
        let (start, end) = (self.start(), self.end());
        (0..start.len())
            .map(|k| self.angle_change(k).hypot(end[k].height() - start[k].height()))
            .fold(0.0, f64::max)
    }

    fn permuted(&self, perm: &[usize]) -> Self {
        let pick = |v: &[AnnulusPoint]| perm.iter().map(|&i| v[i]).collect::<Vec<_>>();
        match self {
            AnnulusMove::FiberwiseLinear { start, end } => AnnulusMove::FiberwiseLinear {
                start: pick(start),
                end: pick(end),
            },
            AnnulusMove::ArcSlide { start, end, advance } => AnnulusMove::ArcSlide {
                start: pick(start),
                end: pick(end),
                advance: perm.iter().map(|&i| advance[i]).collect(),
            },
        }
    }
}
