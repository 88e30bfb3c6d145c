use serde::Serialize;

use super::fibers::{decompose, psi_class, AnnulusStratum, FiberDecomposition, Fibers};
use super::moves::AnnulusMove;
use crate::config_space::{canonicalize, AnnulusPoint, Configuration, Motion, PathPlan, Segment, Tolerances};
use crate::error::{PlanError, Result};

pub type AnnulusPath = PathPlan<AnnulusMove>;

/// Per-iteration record of a planner run. Entry `j` describes the pair
/// `(x^(j), y)`; the last entry is balanced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnulusTrace {
    pub iterations: usize,
    pub degrees: Vec<usize>,
    pub angles: Vec<Vec<f64>>,
    pub deltas: Vec<Vec<i64>>,
}

#[derive(Debug, Clone)]
pub struct AnnulusPlan {
    pub path: AnnulusPath,
    pub stratum: AnnulusStratum,
    pub trace: AnnulusTrace,
}

/// Maximum number of redistribution steps for `n` points.
pub fn iteration_cap(n: usize) -> usize {
    4 * (n + 2 * n)
}

/// Track indices of each fiber, sorted by increasing height.
fn fiber_members(points: &[AnnulusPoint], fiber: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut members = vec![Vec::new(); k];
    for (idx, &f) in fiber.iter().enumerate() {
        members[f].push(idx);
    }
    for m in &mut members {
        m.sort_by(|&a, &b| points[a].height().total_cmp(&points[b].height()));
    }
    members
}

fn interpolation_move(x: &[AnnulusPoint], y: &[AnnulusPoint], fibers: &Fibers) -> Result<AnnulusMove> {
    let fd = &fibers.decomposition;
    if !fd.is_balanced() {
        return Err(PlanError::PreconditionViolated(
            "fiberwise interpolation needs equal counts on every fiber".into(),
        ));
    }
    let k = fd.degree();
    let xm = fiber_members(x, &fibers.x_fiber, k);
    let ym = fiber_members(y, &fibers.y_fiber, k);
    let mut end = x.to_vec();
    for (xs, ys) in xm.iter().zip(&ym) {
        for (&xi, &yi) in xs.iter().zip(ys) {
            end[xi] = y[yi];
        }
    }
    Ok(AnnulusMove::FiberwiseLinear { start: x.to_vec(), end })
}

fn redistribution_move(x: &[AnnulusPoint], fibers: &Fibers) -> Result<AnnulusMove> {
    let fd = &fibers.decomposition;
    if fd.is_balanced() {
        return Err(PlanError::PreconditionViolated(
            "redistribution needs an unbalanced fiber".into(),
        ));
    }
    let k = fd.degree();
    let members = fiber_members(x, &fibers.x_fiber, k);
    let mut end = x.to_vec();
    let mut advance = vec![0.0; x.len()];
    for i in 0..k {
        let surplus = fd.delta[i];
        if surplus <= 0 {
            continue;
        }
        let next = (i + 1) % k;
        let top_next = members[next].last().map_or(0.0, |&j| x[j].height()).max(0.0);
        let anchor = 1.0 + top_next;
        let movers = &members[i][fd.ny[i]..fd.nx[i]];
        let base = x[movers[0]].height();
        let target = fd.angles[next];
        for &m in movers {
            end[m] = AnnulusPoint::new(target, anchor + (x[m].height() - base));
            advance[m] = (target - x[m].theta()).rem_euclid(1.0);
        }
    }
    Ok(AnnulusMove::ArcSlide {
        start: x.to_vec(),
        end,
        advance,
    })
}

/// Moves the points of `x` onto those of `y` inside each fiber, matching the
/// `j`-th lowest point of `x` with the `j`-th lowest point of `y`.
pub fn interpolate_fiberwise(
    x: &Configuration<AnnulusPoint>,
    y: &Configuration<AnnulusPoint>,
    tol: &Tolerances,
) -> Result<AnnulusPath> {
    let fibers = decompose(x.points(), y.points(), tol)?;
    PathPlan::single(interpolation_move(x.points(), y.points(), &fibers)?)
}

/// One redistribution step against `y`: over every fiber with a surplus,
/// the surplus top points slide to the next fiber, stacking above the
/// points of `x` already there with their gaps preserved.
pub fn redistribution_step(
    x: &Configuration<AnnulusPoint>,
    y: &Configuration<AnnulusPoint>,
    tol: &Tolerances,
) -> Result<(AnnulusPath, Configuration<AnnulusPoint>)> {
    let fibers = decompose(x.points(), y.points(), tol)?;
    let mv = redistribution_move(x.points(), &fibers)?;
    let next = canonicalize(mv.end().to_vec())?;
    Ok((PathPlan::single(mv)?, next))
}

fn record(trace: &mut AnnulusTrace, fd: &FiberDecomposition) {
    trace.degrees.push(fd.degree());
    trace.angles.push(fd.angles.clone());
    trace.deltas.push(fd.delta.clone());
}

/// Plans a collision-free path from `x` to `y`: redistribution steps until
/// every fiber is balanced, then fiberwise interpolation. All segments get
/// equal time.
pub fn plan(x: &Configuration<AnnulusPoint>, y: &Configuration<AnnulusPoint>, tol: &Tolerances) -> Result<AnnulusPlan> {
    tol.validate()?;
    if x.len() != y.len() {
        return Err(PlanError::SizeMismatch(x.len(), y.len()));
    }
    x.check_planner_input()?;
    y.check_planner_input()?;

    let cap = iteration_cap(x.len());
    let mut trace = AnnulusTrace {
        iterations: 0,
        degrees: Vec::new(),
        angles: Vec::new(),
        deltas: Vec::new(),
    };
    let mut tracks = x.points().to_vec();
    let mut segments = Vec::new();
    let mut stratum = None;
    loop {
        let fibers = decompose(&tracks, y.points(), tol)?;
        let fd = &fibers.decomposition;
        debug_assert_eq!(fd.delta.iter().sum::<i64>(), 0);
        debug_assert!(trace.degrees.last().is_none_or(|&d| fd.degree() <= d));
        record(&mut trace, fd);
        stratum.get_or_insert_with(|| psi_class(fd));
        if fd.is_balanced() {
            let mv = interpolation_move(&tracks, y.points(), &fibers)?;
            segments.push(Segment::new(mv));
            break;
        }
        if trace.iterations == cap {
            return Err(PlanError::IterationCapExceeded { cap });
        }
        let mv = redistribution_move(&tracks, &fibers)?;
        tracks = mv.end().to_vec();
        segments.push(Segment::new(mv));
        trace.iterations += 1;
    }
    Ok(AnnulusPlan {
        path: PathPlan::from_segments(segments)?,
        stratum: stratum.expect("at least one decomposition"),
        trace,
    })
}

/// Stratum label of a pair without planning.
pub fn stratum(
    x: &Configuration<AnnulusPoint>,
    y: &Configuration<AnnulusPoint>,
    tol: &Tolerances,
) -> Result<AnnulusStratum> {
    Ok(psi_class(&decompose(x.points(), y.points(), tol)?.decomposition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config_space::{validate_path, MoveKind, SurfacePoint};

    fn conf(pts: &[(f64, f64)]) -> Configuration<AnnulusPoint> {
        Configuration::new(pts.iter().map(|&(t, h)| AnnulusPoint::new(t, h)).collect()).unwrap()
    }

    #[test]
    fn identical_pair_gives_constant_path() {
        let tol = Tolerances::default();
        let x = conf(&[(0.1, 0.0), (0.1, 2.0), (0.6, -1.0)]);
        let p = plan(&x, &x, &tol).unwrap();
        assert_eq!(p.trace.iterations, 0);
        assert_eq!(p.path.segment_count(), 1);
        for t in [0.0, 0.37, 1.0] {
            assert_eq!(p.path.evaluate(t).unwrap(), x);
        }
    }

    #[test]
    fn interpolation_matches_by_rank() {
        let tol = Tolerances::default();
        let x = conf(&[(0.0, 0.0), (0.0, 1.0)]);
        let y = conf(&[(0.0, -1.0), (0.0, 3.0)]);
        let p = interpolate_fiberwise(&x, &y, &tol).unwrap();
        let mid = p.evaluate(0.5).unwrap();
        let heights: Vec<f64> = mid.points().iter().map(|q| q.height()).collect();
        assert_eq!(heights, vec![-0.5, 2.0]);
        assert_eq!(p.evaluate(1.0).unwrap(), y);
    }

    #[test]
    fn interpolation_rejects_unbalanced_pairs() {
        let tol = Tolerances::default();
        let x = conf(&[(0.0, 0.0)]);
        let y = conf(&[(0.5, 0.0)]);
        assert!(matches!(
            interpolate_fiberwise(&x, &y, &tol),
            Err(PlanError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn redistribution_moves_surplus_to_next_fiber() {
        let tol = Tolerances::default();
        let x = conf(&[(0.0, 0.0), (0.0, 1.0)]);
        let y = conf(&[(0.0, 5.0), (0.5, 7.0)]);
        let (seg, next) = redistribution_step(&x, &y, &tol).unwrap();
        assert_eq!(next, conf(&[(0.0, 0.0), (0.5, 1.0)]));
        assert_eq!(seg.segments()[0].motion.kind(), MoveKind::ArcSlide);
        let fd = crate::annulus::fiber_decomposition(&next, &y, &tol).unwrap();
        assert_eq!(fd.delta, vec![0, 0]);
    }

    #[test]
    fn redistribution_single_point() {
        let tol = Tolerances::default();
        let x = conf(&[(0.2, 9.0)]);
        let y = conf(&[(0.7, 0.0)]);
        let (_, next) = redistribution_step(&x, &y, &tol).unwrap();
        assert_eq!(next, conf(&[(0.7, 1.0)]));
        let p = plan(&x, &y, &tol).unwrap();
        assert_eq!(p.trace.iterations, 1);
        assert_eq!(p.trace.deltas.last().unwrap(), &vec![0]);
    }

    #[test]
    fn movers_keep_their_gaps() {
        let tol = Tolerances::default();
        // fiber 0.0 holds three x points but no y point; the top two move
        // onto fiber 0.5 above x's point at height 2.
        let x = conf(&[(0.0, 1.0), (0.0, 4.0), (0.0, 7.0), (0.5, 2.0)]);
        let y = conf(&[(0.0, 0.0), (0.5, 0.0), (0.5, 1.0), (0.5, 3.0)]);
        let (_, next) = redistribution_step(&x, &y, &tol).unwrap();
        let moved: Vec<f64> = next
            .points()
            .iter()
            .filter(|p| p.theta() == 0.5)
            .map(|p| p.height())
            .collect();
        assert_eq!(moved, vec![2.0, 3.0, 6.0]);
    }

    #[test]
    fn redistribution_rejects_balanced_pairs() {
        let tol = Tolerances::default();
        let x = conf(&[(0.0, 0.0)]);
        assert!(matches!(
            redistribution_step(&x, &x, &tol),
            Err(PlanError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn two_point_example_uses_one_step() {
        let tol = Tolerances::default();
        let x = conf(&[(0.0, 0.0), (0.0, 1.0)]);
        let y = conf(&[(0.0, 5.0), (0.5, 7.0)]);
        let p = plan(&x, &y, &tol).unwrap();
        assert_eq!(p.trace.iterations, 1);
        assert_eq!(p.path.segment_count(), 2);
        assert_eq!(p.stratum.degree, 2);
        assert_eq!(p.stratum.psi_class, vec![-1, 1]);
        let report = validate_path(&p.path, &tol);
        assert!(report.endpoints_ok);
        assert!(report.min_separation_over_samples > 0.0);
    }

    #[test]
    fn plan_rejects_crowded_inputs() {
        let tol = Tolerances::default();
        let x = conf(&[(0.0, 0.0), (0.0, 1e-9)]);
        let y = conf(&[(0.0, 0.0), (0.0, 1.0)]);
        assert!(matches!(
            plan(&x, &y, &tol),
            Err(PlanError::InsufficientSeparation { .. })
        ));
    }

    #[test]
    fn movers_travel_in_the_increasing_direction() {
        let tol = Tolerances::default();
        let x = conf(&[(0.9, 0.0)]);
        let y = conf(&[(0.1, 0.0)]);
        let p = plan(&x, &y, &tol).unwrap();
        // first segment covers [0, 1/2]; at its midpoint the point has
        // crossed 0.95 on the way through angle 0
        let q = p.path.tracks_at(0.25).unwrap()[0];
        assert!((q.theta() - 0.0).abs() < 1e-12 || (q.theta() - 1.0).abs() < 1e-12);
        assert!(q.distance(&AnnulusPoint::new(0.0, 0.5)) < 1e-12);
    }
}
