use std::f64::consts::{FRAC_PI_2, FRAC_PI_8};

use num_complex::Complex64;
use serde::Serialize;

use super::orientation::orientation_of;
use crate::config_space::{Motion, MoveKind, PlanePoint};
use crate::error::{PlanError, Result};

/// Lift of the orientation drift `δ(H(s)) / δ(H(0))` of an underlying
/// homotopy `H` to the universal cover `ℝ → S¹`.
///
/// The phase is tabulated on a grid that starts uniform and is bisected
/// wherever the orientation turns quickly; between grid points it is
/// recovered exactly from the grid value and the principal argument of the
/// local ratio, so compensating by `e^{-iφ/6}` keeps the orientation fixed
/// up to rounding.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseLift {
    /// Lifted phase at the end of the stage.
    pub total_phase: f64,
    #[serde(skip)]
    times: Vec<f64>,
    #[serde(skip)]
    phases: Vec<f64>,
    #[serde(skip)]
    grid: Vec<Complex64>,
}

/// Adjacent grid samples may not differ in phase by more than this.
const MAX_LIFT_JUMP: f64 = FRAC_PI_2;
/// Intervals whose phase changes by more than this are bisected.
const REFINE_JUMP: f64 = FRAC_PI_8;
const MAX_REFINE_DEPTH: u32 = 48;

impl PhaseLift {
    fn build(steps: usize, underlying: impl Fn(f64) -> [Complex64; 3]) -> Result<Self> {
        let delta = |s: f64| orientation_of(&underlying(s));
        let mut lift = PhaseLift {
            total_phase: 0.0,
            times: vec![0.0],
            phases: vec![0.0],
            grid: vec![delta(0.0)],
        };
        for k in 1..=steps {
            let b = k as f64 / steps as f64;
            lift.extend_to(&delta, b, delta(b), 0)?;
        }
        lift.total_phase = *lift.phases.last().unwrap();
        Ok(lift)
    }

    fn extend_to(&mut self, delta: &impl Fn(f64) -> Complex64, b: f64, db: Complex64, depth: u32) -> Result<()> {
        let a = *self.times.last().unwrap();
        let jump = (db / *self.grid.last().unwrap()).arg();
        let mid = 0.5 * (a + b);
        if jump.abs() > REFINE_JUMP && depth < MAX_REFINE_DEPTH && mid > a && mid < b {
            self.extend_to(delta, mid, delta(mid), depth + 1)?;
            return self.extend_to(delta, b, db, depth + 1);
        }
        if jump.abs() > MAX_LIFT_JUMP {
            return Err(PlanError::LiftUnwrapFailure { jump });
        }
        let phase = self.phases.last().unwrap() + jump;
        self.times.push(b);
        self.phases.push(phase);
        self.grid.push(db);
        Ok(())
    }

    fn phase_at(&self, s: f64, current: Complex64) -> f64 {
        let k = self.times.partition_point(|&t| t <= s).clamp(1, self.times.len() - 1) - 1;
        self.phases[k] + (current / self.grid[k]).arg()
    }

    /// Largest phase change per unit local time seen on the grid.
    fn max_rate(&self) -> f64 {
        self.phases
            .windows(2)
            .zip(self.times.windows(2))
            .map(|(p, t)| (p[1] - p[0]).abs() / (t[1] - t[0]))
            .fold(0.0, f64::max)
    }
}

fn to_triple(points: &[PlanePoint]) -> [Complex64; 3] {
    [points[0].to_complex(), points[1].to_complex(), points[2].to_complex()]
}

fn spin(z: [Complex64; 3], angle: f64) -> [Complex64; 3] {
    let w = Complex64::from_polar(1.0, angle);
    z.map(|p| p * w)
}

fn from_triple(z: [Complex64; 3]) -> Vec<PlanePoint> {
    z.iter().map(|&p| PlanePoint::from(p)).collect()
}

/// Primitive moves of the 3-point disc planner.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum PlaneMove {
    /// Straight-line interpolation of every track.
    Linear {
        start: Vec<PlanePoint>,
        end: Vec<PlanePoint>,
    },
    /// Tracks slide along rays towards `target`, optionally rotated back so
    /// that the orientation stays fixed.
    Radial {
        start: Vec<PlanePoint>,
        end: Vec<PlanePoint>,
        target: Vec<PlanePoint>,
        compensation: Option<PhaseLift>,
    },
    /// Rigid rotation about the origin by `angle` radians.
    Rotation {
        start: Vec<PlanePoint>,
        end: Vec<PlanePoint>,
        angle: f64,
    },
    /// Points on the unit circle slide along it by `advance[k]` radians,
    /// with orientation compensation.
    ArcEqualize {
        start: Vec<PlanePoint>,
        end: Vec<PlanePoint>,
        advance: Vec<f64>,
        compensation: PhaseLift,
    },
}

fn lerp(a: PlanePoint, b: PlanePoint, s: f64) -> PlanePoint {
    PlanePoint::new((1.0 - s) * a.re + s * b.re, (1.0 - s) * a.im + s * b.im)
}

impl PlaneMove {
    pub fn constant(points: Vec<PlanePoint>) -> Self {
        PlaneMove::Linear {
            start: points.clone(),
            end: points,
        }
    }

    pub fn linear(start: Vec<PlanePoint>, end: Vec<PlanePoint>) -> Self {
        PlaneMove::Linear { start, end }
    }

    /// Rotation of `start` by `angle`; the end is the rotated start unless
    /// an exact `end` is supplied.
    pub fn rotation(start: Vec<PlanePoint>, angle: f64, end: Option<Vec<PlanePoint>>) -> Self {
        let w = Complex64::from_polar(1.0, angle);
        let end = end.unwrap_or_else(|| start.iter().map(|p| PlanePoint::from(p.to_complex() * w)).collect());
        PlaneMove::Rotation { start, end, angle }
    }

    /// Uncompensated radial slide.
    pub fn radial(start: Vec<PlanePoint>, target: Vec<PlanePoint>) -> Self {
        PlaneMove::Radial {
            start,
            end: target.clone(),
            target,
            compensation: None,
        }
    }

    /// Radial slide of three points with orientation compensation.
    pub fn compensated_radial(start: Vec<PlanePoint>, target: Vec<PlanePoint>, steps: usize) -> Result<Self> {
        let (a, b) = (start.clone(), target.clone());
        let underlying = move |s: f64| {
            let z: Vec<PlanePoint> = a.iter().zip(&b).map(|(&p, &q)| lerp(p, q, s)).collect();
            to_triple(&z)
        };
        let lift = PhaseLift::build(steps, &underlying)?;
        let end = from_triple(spin(underlying(1.0), -lift.total_phase / 6.0));
        Ok(PlaneMove::Radial {
            start,
            end,
            target,
            compensation: Some(lift),
        })
    }

    /// Slide of three unit-circle points by per-point angles, with
    /// orientation compensation.
    pub fn arc_equalize(start: Vec<PlanePoint>, advance: Vec<f64>, steps: usize) -> Result<Self> {
        let (a, adv) = (to_triple(&start), advance.clone());
        let underlying = move |s: f64| [0, 1, 2].map(|k| a[k] * Complex64::from_polar(1.0, s * adv[k]));
        let lift = PhaseLift::build(steps, &underlying)?;
        let end = from_triple(spin(underlying(1.0), -lift.total_phase / 6.0));
        Ok(PlaneMove::ArcEqualize {
            start,
            end,
            advance,
            compensation: lift,
        })
    }

    fn compensate(lift: &PhaseLift, s: f64, z: [Complex64; 3]) -> Vec<PlanePoint> {
        let phase = lift.phase_at(s, orientation_of(&z));
        from_triple(spin(z, -phase / 6.0))
    }
}

impl Motion for PlaneMove {
    type Point = PlanePoint;

    fn kind(&self) -> MoveKind {
        match self {
            PlaneMove::Linear { .. } => MoveKind::PlaneLinear,
            PlaneMove::Radial { .. } => MoveKind::RadialSlide,
            PlaneMove::Rotation { .. } => MoveKind::RotationAboutOrigin,
            PlaneMove::ArcEqualize { .. } => MoveKind::ArcEqualize,
        }
    }

    fn start(&self) -> &[PlanePoint] {
        match self {
            PlaneMove::Linear { start, .. }
            | PlaneMove::Radial { start, .. }
            | PlaneMove::Rotation { start, .. }
            | PlaneMove::ArcEqualize { start, .. } => start,
        }
    }

    fn end(&self) -> &[PlanePoint] {
        match self {
            PlaneMove::Linear { end, .. }
            | PlaneMove::Radial { end, .. }
            | PlaneMove::Rotation { end, .. }
            | PlaneMove::ArcEqualize { end, .. } => end,
        }
    }

    fn eval(&self, s: f64) -> Vec<PlanePoint> {
        if s <= 0.0 {
            return self.start().to_vec();
        }
        if s >= 1.0 {
            return self.end().to_vec();
        }
        match self {
            PlaneMove::Linear { start, end } => start.iter().zip(end).map(|(&p, &q)| lerp(p, q, s)).collect(),
            PlaneMove::Radial {
                start,
                target,
                compensation,
                ..
            } => {
                let base: Vec<PlanePoint> = start.iter().zip(target).map(|(&p, &q)| lerp(p, q, s)).collect();
                match compensation {
                    None => base,
                    Some(lift) => Self::compensate(lift, s, to_triple(&base)),
                }
            }
            PlaneMove::Rotation { start, angle, .. } => {
                let w = Complex64::from_polar(1.0, s * angle);
                start.iter().map(|p| PlanePoint::from(p.to_complex() * w)).collect()
            }
            PlaneMove::ArcEqualize {
                start,
                advance,
                compensation,
                ..
            } => {
                let a = to_triple(start);
                let z = [0, 1, 2].map(|k| a[k] * Complex64::from_polar(1.0, s * advance[k]));
                Self::compensate(compensation, s, z)
            }
        }
    }

    fn speed_bound(&self) -> f64 {
        let radius = |pts: &[PlanePoint]| pts.iter().map(|p| p.to_complex().norm()).fold(0.0, f64::max);
        let gap = |a: &[PlanePoint], b: &[PlanePoint]| {
            a.iter()
                .zip(b)
                .map(|(p, q)| (p.to_complex() - q.to_complex()).norm())
                .fold(0.0, f64::max)
        };
        match self {
            PlaneMove::Linear { start, end } => gap(start, end),
            PlaneMove::Rotation { start, angle, .. } => radius(start) * angle.abs(),
            PlaneMove::Radial {
                start,
                target,
                compensation,
                ..
            } => {
                let own = gap(start, target);
                let spin = compensation
                    .as_ref()
                    .map_or(0.0, |l| radius(start).max(radius(target)) * 2.0 * l.max_rate() / 6.0);
                own + spin
            }
            PlaneMove::ArcEqualize {
                advance, compensation, ..
            } => {
                let own = advance.iter().map(|a| a.abs()).fold(0.0, f64::max);
                own + 2.0 * compensation.max_rate() / 6.0
            }
        }
    }

    fn permuted(&self, perm: &[usize]) -> Self {
        let pick = |v: &[PlanePoint]| perm.iter().map(|&i| v[i]).collect::<Vec<_>>();
        match self {
            PlaneMove::Linear { start, end } => PlaneMove::Linear {
                start: pick(start),
                end: pick(end),
            },
            PlaneMove::Radial {
                start,
                end,
                target,
                compensation,
            } => PlaneMove::Radial {
                start: pick(start),
                end: pick(end),
                target: pick(target),
                compensation: compensation.clone(),
            },
            PlaneMove::Rotation { start, end, angle } => PlaneMove::Rotation {
                start: pick(start),
                end: pick(end),
                angle: *angle,
            },
            PlaneMove::ArcEqualize {
                start,
                end,
                advance,
                compensation,
            } => PlaneMove::ArcEqualize {
                start: pick(start),
                end: pick(end),
                advance: perm.iter().map(|&i| advance[i]).collect(),
                compensation: compensation.clone(),
            },
        }
    }
}
