use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI, TAU};

use num_complex::Complex64;

use super::moves::PlaneMove;
use super::orientation::{collinear_of, orientation_of, triple};
use super::retract::DiscPath;
use super::stratum::{Component, DiscStratum};
use crate::config_space::{Configuration, PathPlan, PlanePoint, Tolerances};
use crate::error::{PlanError, Result};

/// Clockwise angle `α ∈ (0, 2π)` with `δ(y) = e^{-iα} δ(x)`.
pub fn coorientation_gap(delta_x: Complex64, delta_y: Complex64) -> f64 {
    let a = (delta_x / delta_y).arg();
    if a <= 0.0 {
        a + TAU
    } else {
        a
    }
}

/// Rotates `x` clockwise about the origin by `α/6` so that it becomes
/// cooriented with `y`.
pub fn coorient(x: &Configuration<PlanePoint>, y: &Configuration<PlanePoint>, tol: &Tolerances) -> Result<DiscPath> {
    coorient_tracks(x.points(), y.points(), tol)
}

pub(crate) fn coorient_tracks(x: &[PlanePoint], y: &[PlanePoint], tol: &Tolerances) -> Result<DiscPath> {
    let dx = orientation_of(&triple(x)?);
    let dy = orientation_of(&triple(y)?);
    if (dx - dy).norm() < tol.tau_geom {
        return Err(PlanError::PreconditionViolated("pair is already cooriented".into()));
    }
    let alpha = coorientation_gap(dx, dy);
    PathPlan::single(PlaneMove::rotation(x.to_vec(), -alpha / 6.0, None))
}

/// Reduces `a` modulo `period` into `[-π/6, period - π/6)`.
fn reduce(a: f64, period: f64) -> f64 {
    (a + FRAC_PI_6).rem_euclid(period) - FRAC_PI_6
}

/// Relative rotation between two canonical forms of the same kind: the angle
/// by which `x` must turn clockwise to land on `y`, reduced modulo the
/// symmetry period of the form (`π` for lines, `2π/3` for triangles).
pub fn relative_angle(x: &[PlanePoint], y: &[PlanePoint], line: bool) -> f64 {
    if line {
        let outer = |pts: &[PlanePoint]| {
            pts.iter()
                .map(|p| p.to_complex())
                .max_by(|a, b| a.norm().total_cmp(&b.norm()))
                .unwrap()
        };
        reduce(outer(x).arg() - outer(y).arg(), PI)
    } else {
        reduce(x[0].to_complex().arg() - y[0].to_complex().arg(), TAU / 3.0)
    }
}

/// Matches every point of `moved` to the nearest unused point of `target`.
fn snap(moved: &[Complex64], target: &[PlanePoint]) -> Vec<PlanePoint> {
    let mut used = vec![false; target.len()];
    moved
        .iter()
        .map(|z| {
            let (idx, _) = target
                .iter()
                .enumerate()
                .filter(|(i, _)| !used[*i])
                .min_by(|a, b| (a.1.to_complex() - z).norm().total_cmp(&(b.1.to_complex() - z).norm()))
                .unwrap();
            used[idx] = true;
            target[idx]
        })
        .collect()
}

/// Moves an inscribed equilateral triangle onto a canonical line parallel to
/// one of its sides: the vertex opposite that side goes to the origin, the
/// side's endpoints go to the nearer outer points of the line.
fn collapse_triangle(tri: &[PlanePoint], line: &[PlanePoint], tol: &Tolerances) -> Result<PlaneMove> {
    let t = triple(tri)?;
    let l = triple(line)?;
    let (centre, outer) = {
        let c = (0..3).min_by(|&a, &b| l[a].norm().total_cmp(&l[b].norm())).unwrap();
        (c, [(c + 1) % 3, (c + 2) % 3])
    };
    let dir = (l[outer[1]] - l[outer[0]]).arg();
    let mismatch = |a: usize, b: usize| {
        let d = (t[b] - t[a]).arg() - dir;
        ((d + FRAC_PI_2).rem_euclid(PI) - FRAC_PI_2).abs()
    };
    let (a, b, opposite) = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
        .into_iter()
        .min_by(|p, q| mismatch(p.0, p.1).total_cmp(&mismatch(q.0, q.1)))
        .unwrap();
    if mismatch(a, b) >= tol.tau_geom {
        return Err(PlanError::NoParallelSide);
    }
    let mut end = tri.to_vec();
    end[opposite] = line[centre];
    let d0 = (t[a] - l[outer[0]]).norm() + (t[b] - l[outer[1]]).norm();
    let d1 = (t[a] - l[outer[1]]).norm() + (t[b] - l[outer[0]]).norm();
    if d0 <= d1 {
        end[a] = line[outer[0]];
        end[b] = line[outer[1]];
    } else {
        end[a] = line[outer[1]];
        end[b] = line[outer[0]];
    }
    Ok(PlaneMove::linear(tri.to_vec(), end))
}

/// Deforms a cooriented pair of canonical forms onto the diagonal. Returns
/// the two tracks `(Hx, Hy)`; their endpoints coincide exactly.
pub fn align_terminal(
    x_hat: &Configuration<PlanePoint>,
    y_hat: &Configuration<PlanePoint>,
    stratum: &DiscStratum,
    tol: &Tolerances,
) -> Result<(DiscPath, DiscPath)> {
    align_tracks(x_hat.points(), y_hat.points(), stratum.component, tol)
}

pub(crate) fn align_tracks(
    x: &[PlanePoint],
    y: &[PlanePoint],
    component: Component,
    tol: &Tolerances,
) -> Result<(DiscPath, DiscPath)> {
    let (zx, zy) = (triple(x)?, triple(y)?);
    let (x_line, y_line) = (collinear_of(&zx, tol.tau_geom), collinear_of(&zy, tol.tau_geom));
    if Component::new(x_line, y_line) != component {
        return Err(PlanError::PreconditionViolated(
            "canonical forms do not match the stratum component".into(),
        ));
    }
    if (orientation_of(&zx) - orientation_of(&zy)).norm() >= tol.tau_geom {
        return Err(PlanError::PreconditionViolated(
            "canonical forms are not cooriented".into(),
        ));
    }
    let hold = |pts: &[PlanePoint]| PathPlan::single(PlaneMove::constant(pts.to_vec()));
    match component {
        Component::LL | Component::TT => {
            let beta = relative_angle(x, y, x_line);
            let w = Complex64::from_polar(1.0, -beta);
            let turned: Vec<Complex64> = zx.iter().map(|&p| p * w).collect();
            let end = snap(&turned, y);
            let hx = PathPlan::single(PlaneMove::rotation(x.to_vec(), -beta, Some(end)))?;
            Ok((hx, hold(y)?))
        }
        Component::LT => {
            let hy = PathPlan::single(collapse_triangle(y, x, tol)?)?;
            Ok((hold(x)?, hy))
        }
        Component::TL => {
            let hx = PathPlan::single(collapse_triangle(x, y, tol)?)?;
            Ok((hx, hold(y)?))
        }
    }
}

/// Turns a deformation of the pair into the diagonal into a path from
/// `Hx(0)` to `Hy(0)`: `Hx` at double speed, then `Hy` backwards.
pub fn pair_deformation_to_path(hx: &DiscPath, hy: &DiscPath) -> Result<DiscPath> {
    if hx.goal() != hy.goal() {
        return Err(PlanError::MidpointMismatch);
    }
    PathPlan::join(hx, &hy.reversed(), 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc3::{orientation, rotate};

    fn conf(pts: &[(f64, f64)]) -> Configuration<PlanePoint> {
        Configuration::new(pts.iter().map(|&(a, b)| PlanePoint::new(a, b)).collect()).unwrap()
    }

    fn unit(angle: f64) -> Complex64 {
        Complex64::from_polar(1.0, angle)
    }

    #[test]
    fn gap_examples() {
        let g = coorientation_gap(Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0));
        assert!((g - PI).abs() < 1e-12);
        let g = coorientation_gap(Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0));
        assert!((g - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn coorient_rotates_by_a_sixth_of_the_gap() {
        let tol = Tolerances::default();
        let x = conf(&[(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0)]);
        let y = conf(&[(0.0, 0.0), (0.0, 1.0), (0.0, -1.0)]);
        let path = coorient(&x, &y, &tol).unwrap();
        match &path.segments()[0].motion {
            PlaneMove::Rotation { angle, .. } => assert!((angle + PI / 6.0).abs() < 1e-12),
            other => panic!("unexpected move {other:?}"),
        }
        let end = orientation(path.goal()).unwrap();
        assert!(end.distance(&orientation(&y).unwrap()) < 1e-9);
        assert!(matches!(
            coorient(&x, &x, &tol),
            Err(PlanError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn diagonal_pair_aligns_trivially() {
        let tol = Tolerances::default();
        let x = conf(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let (hx, hy) = align_tracks(x.points(), x.points(), Component::LL, &tol).unwrap();
        assert_eq!(hx.goal(), &x);
        assert_eq!(hy.goal(), &x);
        let path = pair_deformation_to_path(&hx, &hy).unwrap();
        for k in 0..=10 {
            assert_eq!(path.evaluate(k as f64 / 10.0).unwrap(), x);
        }
    }

    #[test]
    fn lines_at_sixty_degrees_rotate_onto_each_other() {
        let tol = Tolerances::default();
        let x = conf(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let y = rotate(&x, PI / 3.0).unwrap();
        assert!(orientation(&x).unwrap().distance(&orientation(&y).unwrap()) < 1e-9);
        let beta = relative_angle(x.points(), y.points(), true);
        assert!((beta.abs() - PI / 3.0).abs() < 1e-12 || (beta - 2.0 * PI / 3.0).abs() < 1e-12);
        let (hx, hy) = align_tracks(x.points(), y.points(), Component::LL, &tol).unwrap();
        assert_eq!(hx.goal(), &y);
        assert_eq!(hy.goal(), &y);
    }

    #[test]
    fn mixed_pair_collapses_the_triangle() {
        let tol = Tolerances::default();
        // triangle with a vertex at angle 0 and a line at angle π/6, which
        // are cooriented: δ(tri) = -1 and δ(line at π/6) = e^{iπ} = -1
        let tri: Vec<PlanePoint> = [0.0, TAU / 3.0, 2.0 * TAU / 3.0]
            .iter()
            .map(|&a| PlanePoint::from(unit(a)))
            .collect();
        let u = unit(PI / 6.0);
        let line = vec![PlanePoint::from(-u), PlanePoint::new(0.0, 0.0), PlanePoint::from(u)];
        let (hx, hy) = align_tracks(&tri, &line, Component::TL, &tol).unwrap();
        assert_eq!(hx.goal(), hy.goal());
        // the side from 4π/3 to 0 points along π/6; the vertex at 2π/3 is opposite
        let end = hx.end_tracks();
        assert_eq!(end[1], PlanePoint::new(0.0, 0.0));
        assert!((end[0].to_complex() - u).norm() < 1e-15);
        assert!((end[2].to_complex() + u).norm() < 1e-15);
    }

    #[test]
    fn pair_deformation_runs_hy_backwards() {
        let x = conf(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let d = rotate(&x, -PI / 3.0).unwrap();
        let hx = PathPlan::single(PlaneMove::rotation(x.points().to_vec(), -PI / 3.0, None)).unwrap();
        let hy = PathPlan::single(PlaneMove::constant(hx.end_tracks().to_vec())).unwrap();
        let path = pair_deformation_to_path(&hx, &hy).unwrap();
        assert_eq!(path.evaluate(0.0).unwrap(), x);
        assert_eq!(path.evaluate(0.25).unwrap(), hx.evaluate(0.5).unwrap());
        for t in [0.5, 0.75, 1.0] {
            let at = path.evaluate(t).unwrap();
            let dist = crate::config_space::bottleneck_distance(at.points(), d.points());
            assert!(dist < 1e-12);
        }
        let other = PathPlan::single(PlaneMove::constant(x.points().to_vec())).unwrap();
        assert_eq!(
            pair_deformation_to_path(&hx, &other).unwrap_err(),
            PlanError::MidpointMismatch
        );
    }
}
