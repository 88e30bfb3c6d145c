use serde::Serialize;

use super::align::{align_tracks, coorient_tracks, pair_deformation_to_path};
use super::orientation::{collinear_of, triple};
use super::retract::{retract_line_tracks, retract_triangle_tracks, CanonicalForm, DiscPath};
use super::stratum::{stratum, DiscStratum};
use crate::config_space::{Configuration, PathPlan, PlanePoint, Tolerances};
use crate::error::{PlanError, Result};

/// A planned disc motion together with the pair deformation it came from.
#[derive(Debug, Clone, Serialize)]
pub struct DiscPlan {
    pub path: DiscPath,
    pub stratum: DiscStratum,
    /// Deformation of the start onto the common midpoint.
    #[serde(skip)]
    pub hx: DiscPath,
    /// Deformation of the goal onto the common midpoint.
    #[serde(skip)]
    pub hy: DiscPath,
    pub x_form: CanonicalForm,
    pub y_form: CanonicalForm,
}

fn retract(pts: &[PlanePoint], tol: &Tolerances) -> Result<(DiscPath, CanonicalForm)> {
    if collinear_of(&triple(pts)?, tol.tau_geom) {
        retract_line_tracks(pts, tol)
    } else {
        retract_triangle_tracks(pts, tol)
    }
}

/// Plans a motion of three points in the disc from `x` to `y`.
///
/// The start is first turned about the origin until it is cooriented with the
/// goal (strata without `P`), then both ends are retracted onto their
/// canonical forms, which are finally brought together. The deformation of
/// the goal is run backwards in the second half of the time.
pub fn plan(x: &Configuration<PlanePoint>, y: &Configuration<PlanePoint>, tol: &Tolerances) -> Result<DiscPlan> {
    tol.validate()?;
    if x.len() != 3 || y.len() != 3 {
        return Err(PlanError::SizeMismatch(x.len(), y.len()));
    }
    x.check_planner_input()?;
    y.check_planner_input()?;
    let label = stratum(x, y, tol)?;

    let mut x_parts: Vec<DiscPath> = Vec::new();
    let mut x_now = x.points().to_vec();
    if !label.oriented {
        let turn = coorient_tracks(&x_now, y.points(), tol)?;
        x_now = turn.end_tracks().to_vec();
        x_parts.push(turn);
    }
    let (rx, x_form) = retract(&x_now, tol)?;
    let (ry, y_form) = retract(y.points(), tol)?;
    let (tail_x, tail_y) = align_tracks(rx.end_tracks(), ry.end_tracks(), label.component, tol)?;
    x_parts.push(rx);
    x_parts.push(tail_x);
    let hx = PathPlan::chain(&x_parts.iter().collect::<Vec<_>>())?;
    let hy = PathPlan::chain(&[&ry, &tail_y])?;
    let path = pair_deformation_to_path(&hx, &hy)?;
    debug_assert_eq!(path.start(), x);
    debug_assert_eq!(path.goal(), y);
    Ok(DiscPlan {
        path,
        stratum: label,
        hx,
        hy,
        x_form,
        y_form,
    })
}
