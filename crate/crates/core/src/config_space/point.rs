use std::cmp::Ordering;
use std::fmt::Debug;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Which surface a configuration lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    Annulus,
    Disc,
}

impl Surface {
    pub fn as_str(self) -> &'static str {
        match self {
            Surface::Annulus => "annulus",
            Surface::Disc => "disc",
        }
    }
}

/// A point type that can be stored in a [`Configuration`](super::Configuration).
pub trait SurfacePoint: Copy + PartialEq + Debug + Send + Sync + 'static {
    const SURFACE: Surface;

    fn distance(&self, other: &Self) -> f64;

    /// Total order used to canonicalize unordered configurations.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    fn coords(&self) -> [f64; 2];

    fn from_coords(coords: [f64; 2]) -> Self;
}

/// Shortest signed angular difference `to - from` on ℝ/ℤ, in `[-1/2, 1/2)`.
pub fn circle_diff(from: f64, to: f64) -> f64 {
    let d = (to - from).rem_euclid(1.0);
    if d >= 0.5 {
        d - 1.0
    } else {
        d
    }
}

/// Normalizes an angle into `[0, 1)`.
pub fn wrap_turns(theta: f64) -> f64 {
    let t = theta.rem_euclid(1.0);
    // rem_euclid rounds tiny negatives up to exactly 1.0
    if t >= 1.0 {
        0.0
    } else {
        t
    }
}

/// A point of the annulus `S¹ × ℝ`. The angle is measured in turns, so the
/// circle has circumference 1 under the flat product metric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnulusPoint {
    theta: f64,
    height: f64,
}

impl AnnulusPoint {
    pub fn new(theta: f64, height: f64) -> Self {
        AnnulusPoint {
            theta: wrap_turns(theta),
            height,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn height(&self) -> f64 {
        self.height
    }
}

impl SurfacePoint for AnnulusPoint {
    const SURFACE: Surface = Surface::Annulus;

    fn distance(&self, other: &Self) -> f64 {
        circle_diff(self.theta, other.theta).hypot(self.height - other.height)
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.theta
            .total_cmp(&other.theta)
            .then(self.height.total_cmp(&other.height))
    }

    fn coords(&self) -> [f64; 2] {
        [self.theta, self.height]
    }

    fn from_coords(coords: [f64; 2]) -> Self {
        AnnulusPoint::new(coords[0], coords[1])
    }
}

/// A point of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub re: f64,
    pub im: f64,
}

impl PlanePoint {
    pub fn new(re: f64, im: f64) -> Self {
        PlanePoint { re, im }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl From<Complex64> for PlanePoint {
    fn from(z: Complex64) -> Self {
        PlanePoint { re: z.re, im: z.im }
    }
}

impl From<PlanePoint> for Complex64 {
    fn from(p: PlanePoint) -> Self {
        p.to_complex()
    }
}

impl SurfacePoint for PlanePoint {
    const SURFACE: Surface = Surface::Disc;

    fn distance(&self, other: &Self) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.re.total_cmp(&other.re).then(self.im.total_cmp(&other.im))
    }

    fn coords(&self) -> [f64; 2] {
        [self.re, self.im]
    }

    fn from_coords(coords: [f64; 2]) -> Self {
        PlanePoint::new(coords[0], coords[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_normalized() {
        assert_eq!(AnnulusPoint::new(1.25, 0.0).theta(), 0.25);
        assert_eq!(AnnulusPoint::new(-0.25, 0.0).theta(), 0.75);
        assert_eq!(AnnulusPoint::new(-1e-18, 0.0).theta(), 0.0);
        assert_eq!(AnnulusPoint::new(1.0, 0.0).theta(), 0.0);
    }

    #[test]
    fn annulus_distance_wraps() {
        let a = AnnulusPoint::new(0.95, 0.0);
        let b = AnnulusPoint::new(0.05, 0.0);
        assert!((a.distance(&b) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn circle_diff_is_shortest() {
        assert!((circle_diff(0.9, 0.1) - 0.2).abs() < 1e-12);
        assert!((circle_diff(0.1, 0.9) + 0.2).abs() < 1e-12);
    }
}
