use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use super::moves::PlaneMove;
use super::orientation::{collinear_of, triple};
use crate::config_space::{Configuration, Motion, PathPlan, PlanePoint, Segment, Tolerances};
use crate::error::{PlanError, Result};

pub type DiscPath = PathPlan<PlaneMove>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CanonicalKind {
    /// Origin plus two antipodal unit points.
    LR,
    /// Equilateral triangle inscribed in the unit circle.
    TR,
}

/// A configuration in one of the two rotation-invariant circles the
/// retractions land in, identified by its phase: the angle of an outer
/// point modulo `π` for lines, of a vertex modulo `2π/3` for triangles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CanonicalForm {
    pub kind: CanonicalKind,
    pub phase: f64,
}

impl CanonicalForm {
    /// Reads off the canonical form of a configuration already in `L_R` or `T_R`.
    pub fn of(c: &Configuration<PlanePoint>, tol: &Tolerances) -> Result<Self> {
        let z = triple(c.points())?;
        if collinear_of(&z, tol.tau_geom) {
            let outer = z.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap();
            Ok(CanonicalForm {
                kind: CanonicalKind::LR,
                phase: outer.arg().rem_euclid(PI),
            })
        } else {
            Ok(CanonicalForm {
                kind: CanonicalKind::TR,
                phase: z[0].arg().rem_euclid(TAU / 3.0),
            })
        }
    }
}

fn points(z: &[Complex64]) -> Vec<PlanePoint> {
    z.iter().map(|&p| PlanePoint::from(p)).collect()
}

fn chain(moves: Vec<PlaneMove>) -> Result<DiscPath> {
    PathPlan::from_segments(moves.into_iter().map(Segment::new).collect())
}

/// Index of the point lying between the other two on a (near) line, and the
/// unit direction from the first outer point to the second.
fn line_frame(z: &[Complex64; 3]) -> (usize, usize, usize, Complex64) {
    let pairs = [(0, 1, 2), (1, 2, 0), (0, 2, 1)];
    let (a, b, m) = pairs
        .into_iter()
        .max_by(|p, q| (z[p.0] - z[p.1]).norm().total_cmp(&(z[q.0] - z[q.1]).norm()))
        .unwrap();
    let d = z[b] - z[a];
    (a, b, m, d / d.norm())
}

/// Deformation of a collinear configuration onto `L_R`: translate the
/// central point to the origin, then slide the outer points along the line
/// to unit distance. Two segments; the orientation is unchanged throughout.
pub fn retract_line(c: &Configuration<PlanePoint>, tol: &Tolerances) -> Result<(DiscPath, CanonicalForm)> {
    retract_line_tracks(c.points(), tol)
}

pub(crate) fn retract_line_tracks(pts: &[PlanePoint], tol: &Tolerances) -> Result<(DiscPath, CanonicalForm)> {
    let z = triple(pts)?;
    if !collinear_of(&z, tol.tau_geom) {
        return Err(PlanError::PreconditionViolated("configuration is not collinear".into()));
    }
    let (a, b, m, u) = line_frame(&z);
    let shifted: Vec<Complex64> = z.iter().map(|&p| p - z[m]).collect();
    let mut target = [Complex64::new(0.0, 0.0); 3];
    target[a] = -u;
    target[b] = u;
    let path = chain(vec![
        PlaneMove::linear(pts.to_vec(), points(&shifted)),
        PlaneMove::radial(points(&shifted), points(&target)),
    ])?;
    let form = CanonicalForm {
        kind: CanonicalKind::LR,
        phase: u.arg().rem_euclid(PI),
    };
    Ok((path, form))
}

/// Counter-clockwise arcs between consecutive points of three unit-circle
/// points: `(angles, order, arcs)` where arc `j` runs from `order[j]` to
/// `order[(j + 1) % 3]`.
fn arcs(z: &[PlanePoint]) -> ([f64; 3], [usize; 3], [f64; 3]) {
    let ang = [0, 1, 2].map(|k| z[k].to_complex().arg().rem_euclid(TAU));
    let mut order = [0, 1, 2];
    order.sort_by(|&p, &q| ang[p].total_cmp(&ang[q]));
    let arcs = [0, 1, 2].map(|j| (ang[order[(j + 1) % 3]] - ang[order[j]]).rem_euclid(TAU));
    (ang, order, arcs)
}

/// Wraps an angle into `[-π, π)`.
fn wrap_pi(a: f64) -> f64 {
    (a + PI).rem_euclid(TAU) - PI
}

/// First equalization phase: widen the unique shortest arc by sliding its
/// endpoints apart at equal speed until it ties the next shortest.
fn phase_one_advance(z: &[PlanePoint]) -> Vec<f64> {
    let (_, order, arc) = arcs(z);
    let j = (0..3).min_by(|&p, &q| arc[p].total_cmp(&arc[q])).unwrap();
    let second = arc[(j + 1) % 3].min(arc[(j + 2) % 3]);
    let shift = ((second - arc[j]) / 3.0).max(0.0);
    let mut adv = vec![0.0; 3];
    adv[order[j]] = -shift;
    adv[order[(j + 1) % 3]] = shift;
    adv
}

/// Second phase: the endpoints of the longest arc slide towards each other
/// until the three points are equally spaced.
fn phase_two_advance(z: &[PlanePoint]) -> Vec<f64> {
    let (ang, order, arc) = arcs(z);
    let j = (0..3).max_by(|&p, &q| arc[p].total_cmp(&arc[q])).unwrap();
    let (y, w, x) = (order[j], order[(j + 1) % 3], order[(j + 2) % 3]);
    let mut adv = vec![0.0; 3];
    adv[y] = wrap_pi(ang[x] + TAU / 3.0 - ang[y]);
    adv[w] = wrap_pi(ang[x] - TAU / 3.0 - ang[w]);
    adv
}

/// Deformation of a non-collinear configuration onto `T_R` that keeps the
/// orientation fixed: translate the centroid to the origin, push the points
/// radially onto the unit circle, then equalize the arcs in two phases.
/// The radial and arc stages are rotated back along the lifted orientation
/// drift divided by six. Always four segments.
pub fn retract_triangle(c: &Configuration<PlanePoint>, tol: &Tolerances) -> Result<(DiscPath, CanonicalForm)> {
    retract_triangle_tracks(c.points(), tol)
}

pub(crate) fn retract_triangle_tracks(pts: &[PlanePoint], tol: &Tolerances) -> Result<(DiscPath, CanonicalForm)> {
    let z = triple(pts)?;
    if collinear_of(&z, tol.tau_geom) {
        return Err(PlanError::PreconditionViolated("configuration is collinear".into()));
    }
    let centroid = (z[0] + z[1] + z[2]) / 3.0;
    let centered: Vec<PlanePoint> = points(&z.map(|p| p - centroid));
    let on_circle: Vec<PlanePoint> = centered
        .iter()
        .map(|p| {
            let w = p.to_complex();
            PlanePoint::from(w / w.norm())
        })
        .collect();

    let translate = PlaneMove::linear(pts.to_vec(), centered.clone());
    let project = PlaneMove::compensated_radial(centered, on_circle, tol.lift_steps)?;
    let after_projection = project.end().to_vec();
    let widen = PlaneMove::arc_equalize(
        after_projection.clone(),
        phase_one_advance(&after_projection),
        tol.lift_steps,
    )?;
    let after_widen = widen.end().to_vec();
    let equalize = PlaneMove::arc_equalize(after_widen.clone(), phase_two_advance(&after_widen), tol.lift_steps)?;

    let path = chain(vec![translate, project, widen, equalize])?;
    let form = CanonicalForm {
        kind: CanonicalKind::TR,
        phase: path.end_tracks()[0].to_complex().arg().rem_euclid(TAU / 3.0),
    };
    Ok((path, form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc3::orientation;

    fn conf(pts: &[(f64, f64)]) -> Configuration<PlanePoint> {
        Configuration::new(pts.iter().map(|&(a, b)| PlanePoint::new(a, b)).collect()).unwrap()
    }

    fn max_motion(path: &DiscPath) -> f64 {
        let start = path.start_tracks().to_vec();
        (0..=64)
            .map(|k| {
                let tr = path.tracks_at(k as f64 / 64.0).unwrap();
                tr.iter()
                    .zip(&start)
                    .map(|(a, b)| (a.to_complex() - b.to_complex()).norm())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn line_retracts_to_unit_outer_points() {
        let tol = Tolerances::default();
        let (path, form) = retract_line(&conf(&[(-2.0, 0.0), (0.0, 0.0), (4.0, 0.0)]), &tol).unwrap();
        assert_eq!(path.goal(), &conf(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]));
        assert_eq!(path.segment_count(), 2);
        assert_eq!(form.kind, CanonicalKind::LR);
    }

    #[test]
    fn vertical_line_translates_first() {
        let tol = Tolerances::default();
        let (path, _) = retract_line(&conf(&[(0.0, 1.0), (0.0, 2.0), (0.0, 3.0)]), &tol).unwrap();
        assert_eq!(path.goal(), &conf(&[(0.0, -1.0), (0.0, 0.0), (0.0, 1.0)]));
        let after_translation = crate::config_space::canonicalize(path.segments()[0].end().to_vec()).unwrap();
        assert_eq!(after_translation, conf(&[(0.0, -1.0), (0.0, 0.0), (0.0, 1.0)]));
    }

    #[test]
    fn canonical_line_is_fixed() {
        let tol = Tolerances::default();
        let c = conf(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let (path, _) = retract_line(&c, &tol).unwrap();
        assert_eq!(max_motion(&path), 0.0);
    }

    #[test]
    fn retract_line_needs_collinear_input() {
        let tol = Tolerances::default();
        let c = conf(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        assert!(matches!(
            retract_line(&c, &tol),
            Err(PlanError::PreconditionViolated(_))
        ));
        let l = conf(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert!(matches!(
            retract_triangle(&l, &tol),
            Err(PlanError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn canonical_triangle_is_fixed() {
        let tol = Tolerances::default();
        let s = 3f64.sqrt() / 2.0;
        let c = conf(&[(1.0, 0.0), (-0.5, s), (-0.5, -s)]);
        let (path, form) = retract_triangle(&c, &tol).unwrap();
        assert_eq!(path.segment_count(), 4);
        assert!(max_motion(&path) < 1e-12);
        assert_eq!(form.kind, CanonicalKind::TR);
    }

    #[test]
    fn shifted_triangle_only_translates() {
        let tol = Tolerances::default();
        let s = 3f64.sqrt() / 2.0;
        let c = conf(&[(3.0, 0.0), (1.5, s), (1.5, -s)]);
        let (path, _) = retract_triangle(&c, &tol).unwrap();
        let after = path.segments()[0].end().to_vec();
        for (p, q) in after.iter().zip(path.end_tracks()) {
            assert!((p.to_complex() - q.to_complex()).norm() < 1e-12);
        }
        let moved = after
            .iter()
            .zip(path.start_tracks())
            .map(|(p, q)| (p.to_complex() - q.to_complex()).norm())
            .fold(0.0, f64::max);
        assert!((moved - 2.0).abs() < 1e-12);
    }

    #[test]
    fn scalene_triangle_keeps_orientation() {
        let tol = Tolerances::default();
        let c = conf(&[(0.0, 0.0), (3.0, 0.2), (0.4, 1.1)]);
        let before = orientation(&c).unwrap();
        let (path, _) = retract_triangle(&c, &tol).unwrap();
        for k in 0..=200 {
            let at = path.evaluate(k as f64 / 200.0).unwrap();
            assert!(orientation(&at).unwrap().distance(&before) < 1e-9);
        }
        let (_, _, arc) = arcs(path.end_tracks());
        for a in arc {
            assert!((a / TAU - 1.0 / 3.0).abs() < 1e-9);
        }
        for p in path.end_tracks() {
            assert!((p.to_complex().norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn phase_one_ties_the_two_shortest_arcs() {
        let z: Vec<PlanePoint> = [0.0f64, 0.5, 2.0]
            .iter()
            .map(|&a| PlanePoint::from(Complex64::from_polar(1.0, a)))
            .collect();
        let adv = phase_one_advance(&z);
        let moved: Vec<PlanePoint> = z
            .iter()
            .zip(&adv)
            .map(|(p, a)| PlanePoint::from(p.to_complex() * Complex64::from_polar(1.0, *a)))
            .collect();
        let (_, _, mut arc) = arcs(&moved);
        arc.sort_by(f64::total_cmp);
        assert!((arc[0] - arc[1]).abs() < 1e-12);
        assert!(arc[2] >= arc[1]);
    }
}
