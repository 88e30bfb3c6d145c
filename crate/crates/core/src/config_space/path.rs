use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::configuration::{canonicalize, Configuration};
use super::point::SurfacePoint;
use crate::error::{PlanError, Result};

/// The primitive move families a path can be built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    FiberwiseLinear,
    ArcSlide,
    PlaneLinear,
    RotationAboutOrigin,
    RadialSlide,
    ArcEqualize,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::FiberwiseLinear => "fiberwise-linear",
            MoveKind::ArcSlide => "arc-slide",
            MoveKind::PlaneLinear => "plane-linear",
            MoveKind::RotationAboutOrigin => "rotation-about-origin",
            MoveKind::RadialSlide => "radial-slide",
            MoveKind::ArcEqualize => "arc-equalize",
        }
    }
}

/// A primitive move of a list of tracks over local time `s ∈ [0, 1]`.
///
/// Track `k` of `start()` moves continuously to track `k` of `end()`.
/// Implementations must return `start()` and `end()` verbatim at `s = 0`
/// and `s = 1`, so that chained segments meet exactly.
pub trait Motion: Clone + std::fmt::Debug + Serialize + Send + Sync {
    type Point: SurfacePoint;

    fn kind(&self) -> MoveKind;

    fn start(&self) -> &[Self::Point];

    fn end(&self) -> &[Self::Point];

    fn eval(&self, s: f64) -> Vec<Self::Point>;

    /// Upper bound on the speed of any track in local time.
    fn speed_bound(&self) -> f64;

    /// Reorders tracks: track `k` of the result is track `perm[k]` of `self`.
    fn permuted(&self, perm: &[usize]) -> Self;
}

/// One primitive move inside a path, with its share of the global time.
#[derive(Debug, Clone)]
pub struct Segment<M> {
    pub motion: M,
    pub reversed: bool,
    pub weight: f64,
}

impl<M: Motion> Segment<M> {
    pub fn new(motion: M) -> Self {
        Segment {
            motion,
            reversed: false,
            weight: 1.0,
        }
    }

    pub fn start(&self) -> &[M::Point] {
        if self.reversed {
            self.motion.end()
        } else {
            self.motion.start()
        }
    }

    pub fn end(&self) -> &[M::Point] {
        if self.reversed {
            self.motion.start()
        } else {
            self.motion.end()
        }
    }

    pub fn eval(&self, s: f64) -> Vec<M::Point> {
        let s = if self.reversed { 1.0 - s } else { s };
        if s <= 0.0 {
            self.motion.start().to_vec()
        } else if s >= 1.0 {
            self.motion.end().to_vec()
        } else {
            self.motion.eval(s)
        }
    }

    fn reverse(mut self) -> Self {
        self.reversed = !self.reversed;
        self
    }

    fn permuted(&self, perm: &[usize]) -> Self {
        Segment {
            motion: self.motion.permuted(perm),
            reversed: self.reversed,
            weight: self.weight,
        }
    }
}

impl<M: Motion> Serialize for Segment<M> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        if self.reversed {
            map.serialize_entry("kind", "reverse-of")?;
            map.serialize_entry("weight", &self.weight)?;
            map.serialize_entry("of", &self.motion)?;
        } else {
            map.serialize_entry("kind", self.motion.kind().as_str())?;
            map.serialize_entry("weight", &self.weight)?;
            map.serialize_entry("move", &self.motion)?;
        }
        map.end()
    }
}

/// A symbolic, exactly re-evaluable trajectory of a configuration.
#[derive(Debug, Clone)]
pub struct PathPlan<M: Motion> {
    segments: Vec<Segment<M>>,
    /// Cumulative time at the start of each segment, plus a final 1.0.
    breaks: Vec<f64>,
    start: Configuration<M::Point>,
    goal: Configuration<M::Point>,
}

impl<M: Motion> PathPlan<M> {
    /// Builds a path from chained segments; weights are normalized to sum to 1.
    pub fn from_segments(segments: Vec<Segment<M>>) -> Result<Self> {
        if segments.is_empty() {
            return Err(PlanError::PreconditionViolated(
                "a path needs at least one segment".into(),
            ));
        }
        for pair in segments.windows(2) {
            if pair[0].end() != pair[1].start() {
                return Err(PlanError::BrokenChain);
            }
        }
        if segments.iter().any(|s| !s.weight.is_finite() || s.weight <= 0.0) {
            return Err(PlanError::PreconditionViolated(
                "segment weights must be positive".into(),
            ));
        }
        let total: f64 = segments.iter().map(|s| s.weight).sum();
        let mut breaks = Vec::with_capacity(segments.len() + 1);
        let mut acc = 0.0;
        breaks.push(0.0);
        let mut segments = segments;
        for seg in segments.iter_mut() {
            seg.weight /= total;
            acc += seg.weight;
            breaks.push(acc);
        }
        *breaks.last_mut().unwrap() = 1.0;
        let start = canonicalize(segments[0].start().to_vec())?;
        let goal = canonicalize(segments.last().unwrap().end().to_vec())?;
        Ok(PathPlan {
            segments,
            breaks,
            start,
            goal,
        })
    }

    /// A single-segment path.
    pub fn single(motion: M) -> Result<Self> {
        Self::from_segments(vec![Segment::new(motion)])
    }

    pub fn start(&self) -> &Configuration<M::Point> {
        &self.start
    }

    pub fn goal(&self) -> &Configuration<M::Point> {
        &self.goal
    }

    pub fn segments(&self) -> &[Segment<M>] {
        &self.segments
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// Track positions at the start, in track order.
    pub fn start_tracks(&self) -> &[M::Point] {
        self.segments[0].start()
    }

    /// Track positions at the end, in track order.
    pub fn end_tracks(&self) -> &[M::Point] {
        self.segments.last().unwrap().end()
    }

    /// Raw track positions at global time `t`, without canonicalization.
    pub fn tracks_at(&self, t: f64) -> Result<Vec<M::Point>> {
        if !(0.0..=1.0).contains(&t) {
            return Err(PlanError::TimeOutOfRange(t));
        }
        let idx = match self.breaks[1..].iter().position(|&b| t < b) {
            Some(i) => i,
            None => self.segments.len() - 1,
        };
        let seg = &self.segments[idx];
        let local = if t == 1.0 {
            1.0
        } else {
            ((t - self.breaks[idx]) / seg.weight).clamp(0.0, 1.0)
        };
        Ok(seg.eval(local))
    }

    /// The configuration at global time `t`.
    pub fn evaluate(&self, t: f64) -> Result<Configuration<M::Point>> {
        canonicalize(self.tracks_at(t)?)
    }

    /// The same trajectory traversed backwards.
    pub fn reversed(&self) -> Self {
        let segments: Vec<_> = self.segments.iter().rev().cloned().map(Segment::reverse).collect();
        Self::from_segments(segments).expect("reversal preserves chaining")
    }

    /// Upper bound on track speed in global time.
    pub fn max_speed(&self) -> f64 {
        self.segments
            .iter()
            .map(|s| s.motion.speed_bound() / s.weight)
            .fold(0.0, f64::max)
    }

    /// Concatenates `first` and `second`; `first` receives `first_share` of the
    /// global time. The tracks of `second` are relabeled to continue those of
    /// `first` when both describe the same configuration in another order.
    pub fn join(first: &Self, second: &Self, first_share: f64) -> Result<Self> {
        if !(first_share > 0.0 && first_share < 1.0) {
            return Err(PlanError::PreconditionViolated("time share must lie in (0, 1)".into()));
        }
        let perm = match_tracks(first.end_tracks(), second.start_tracks()).ok_or(PlanError::BrokenChain)?;
        let mut segments = Vec::with_capacity(first.segments.len() + second.segments.len());
        segments.extend(first.segments.iter().map(|s| Segment {
            weight: s.weight * first_share,
            ..s.clone()
        }));
        segments.extend(second.segments.iter().map(|s| {
            let mut seg = s.permuted(&perm);
            seg.weight *= 1.0 - first_share;
            seg
        }));
        Self::from_segments(segments)
    }

    /// Concatenates paths, giving every segment the same share of time and
    /// relabeling tracks so that each path continues the previous one.
    pub fn chain(paths: &[&Self]) -> Result<Self> {
        let mut segments: Vec<Segment<M>> = Vec::new();
        for path in paths {
            let perm = match segments.last() {
                None => (0..path.start_tracks().len()).collect(),
                Some(last) => match_tracks(last.end(), path.start_tracks()).ok_or(PlanError::BrokenChain)?,
            };
            segments.extend(path.segments.iter().map(|s| {
                let mut seg = s.permuted(&perm);
                seg.weight = 1.0;
                seg
            }));
        }
        Self::from_segments(segments)
    }

    /// Samples `count ≥ 2` uniform times including both endpoints.
    pub fn sample_tracks(&self, count: usize) -> Vec<(f64, Vec<M::Point>)> {
        let count = count.max(2);
        (0..count)
            .map(|k| {
                let t = k as f64 / (count - 1) as f64;
                (t, self.tracks_at(t).expect("sample time in range"))
            })
            .collect()
    }
}

impl<M: Motion> Serialize for PathPlan<M> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.segments.serialize(serializer)
    }
}

/// Returns `perm` with `from[perm[k]] == target[k]` for every `k`, if `from`
/// is a reordering of `target`.
fn match_tracks<P: SurfacePoint>(target: &[P], from: &[P]) -> Option<Vec<usize>> {
    if target.len() != from.len() {
        return None;
    }
    let mut used = vec![false; from.len()];
    let mut perm = Vec::with_capacity(target.len());
    for t in target {
        let idx = from.iter().enumerate().position(|(i, p)| !used[i] && p == t)?;
        used[idx] = true;
        perm.push(idx);
    }
    Some(perm)
}

/// Evaluates `path` at global time `t`.
pub fn evaluate_path<M: Motion>(path: &PathPlan<M>, t: f64) -> Result<Configuration<M::Point>> {
    path.evaluate(t)
}
