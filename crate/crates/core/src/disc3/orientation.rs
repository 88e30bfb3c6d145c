use num_complex::Complex64;
use serde::Serialize;

use crate::config_space::{Configuration, PlanePoint, Tolerances};
use crate::error::{PlanError, Result};

pub(crate) type Triple = [Complex64; 3];

pub(crate) fn triple(points: &[PlanePoint]) -> Result<Triple> {
    match points {
        [a, b, c] => Ok([a.to_complex(), b.to_complex(), c.to_complex()]),
        _ => Err(PlanError::PreconditionViolated(format!(
            "expected 3 points, got {}",
            points.len()
        ))),
    }
}

/// `(z1 - z2)² (z2 - z3)² (z3 - z1)²`.
pub(crate) fn discriminant_of(z: &Triple) -> Complex64 {
    let a = z[0] - z[1];
    let b = z[1] - z[2];
    let c = z[2] - z[0];
    let p = a * b * c;
    p * p
}

pub(crate) fn orientation_of(z: &Triple) -> Complex64 {
    let d = discriminant_of(z);
    d / d.norm()
}

pub(crate) fn collinear_of(z: &Triple, tau_geom: f64) -> bool {
    let area = ((z[1] - z[0]) * (z[2] - z[0]).conj()).im.abs();
    let diam = (z[0] - z[1]).norm().max((z[1] - z[2]).norm()).max((z[2] - z[0]).norm());
    area / (diam * diam) < tau_geom
}

/// The discriminant of a 3-point configuration. It does not depend on the
/// order of the points and vanishes only on collisions.
pub fn discriminant(c: &Configuration<PlanePoint>) -> Result<Complex64> {
    Ok(discriminant_of(&triple(c.points())?))
}

/// The unit-modulus normalization of the discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Orientation {
    pub delta: Complex64,
}

impl Orientation {
    pub fn distance(&self, other: &Orientation) -> f64 {
        (self.delta - other.delta).norm()
    }
}

/// Rotating a configuration by `θ` multiplies its orientation by `θ⁶`.
pub fn orientation(c: &Configuration<PlanePoint>) -> Result<Orientation> {
    Ok(Orientation {
        delta: orientation_of(&triple(c.points())?),
    })
}

/// True when the normalized triangle area is below `tau_geom`.
pub fn is_collinear(c: &Configuration<PlanePoint>, tol: &Tolerances) -> Result<bool> {
    Ok(collinear_of(&triple(c.points())?, tol.tau_geom))
}

/// Rotates every point about the origin by `angle` radians.
pub fn rotate(c: &Configuration<PlanePoint>, angle: f64) -> Result<Configuration<PlanePoint>> {
    let w = Complex64::from_polar(1.0, angle);
    Configuration::new(
        c.points()
            .iter()
            .map(|p| PlanePoint::from(p.to_complex() * w))
            .collect(),
    )
}
