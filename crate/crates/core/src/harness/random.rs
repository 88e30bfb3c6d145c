//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 seeded through `seed_from_u64`, so a
//! seed reproduces the same stream on every platform.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config_space::{circle_diff, AnnulusPoint, Configuration, PlanePoint, Surface, SurfacePoint, Tolerances};
use crate::disc3::{orientation, rotate};

/// Minimum pairwise distance of every generated configuration.
pub const MIN_SEPARATION: f64 = 1e-3;
/// Annulus heights are drawn from `[-HEIGHT_RANGE, HEIGHT_RANGE]`.
pub const HEIGHT_RANGE: f64 = 10.0;
/// Disc points are drawn from the disc of this radius about the origin.
pub const DISC_RADIUS: f64 = 10.0;
/// Distinct angles of a generated annulus pair are at least this far apart.
const MIN_ANGLE_GAP: f64 = 1e-6;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A configuration on either surface.
#[derive(Debug, Clone, PartialEq)]
pub enum SurfaceConfiguration {
    Annulus(Configuration<AnnulusPoint>),
    Disc(Configuration<PlanePoint>),
}

impl SurfaceConfiguration {
    pub fn surface(&self) -> Surface {
        match self {
            SurfaceConfiguration::Annulus(_) => Surface::Annulus,
            SurfaceConfiguration::Disc(_) => Surface::Disc,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            SurfaceConfiguration::Annulus(c) => c.len(),
            SurfaceConfiguration::Disc(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coords(&self) -> Vec<[f64; 2]> {
        match self {
            SurfaceConfiguration::Annulus(c) => c.points().iter().map(SurfacePoint::coords).collect(),
            SurfaceConfiguration::Disc(c) => c.points().iter().map(SurfacePoint::coords).collect(),
        }
    }
}

fn separated<P: SurfacePoint>(points: Vec<P>) -> Option<Configuration<P>> {
    let c = Configuration::new(points).ok()?;
    (c.min_separation() >= MIN_SEPARATION).then_some(c)
}

fn annulus_point<R: Rng + ?Sized>(rng: &mut R, theta: f64) -> AnnulusPoint {
    AnnulusPoint::new(theta, rng.gen_range(-HEIGHT_RANGE..=HEIGHT_RANGE))
}

fn disc_point<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex64 {
    Complex64::from_polar(radius * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))
}

/// `n` independent uniform points of `S¹ × [-10, 10]`, redrawn until separated.
pub fn random_annulus<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Configuration<AnnulusPoint> {
    loop {
        let pts = (0..n)
            .map(|_| {
                let theta = rng.gen();
                annulus_point(rng, theta)
            })
            .collect();
        if let Some(c) = separated(pts) {
            return c;
        }
    }
}

/// `n` independent uniform points of the disc of radius 10, redrawn until separated.
pub fn random_disc<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Configuration<PlanePoint> {
    loop {
        let pts = (0..n).map(|_| PlanePoint::from(disc_point(rng, DISC_RADIUS))).collect();
        if let Some(c) = separated(pts) {
            return c;
        }
    }
}

pub fn random_configuration(surface: Surface, n: usize, seed: u64) -> SurfaceConfiguration {
    let mut rng = seeded(seed);
    match surface {
        Surface::Annulus => SurfaceConfiguration::Annulus(random_annulus(&mut rng, n)),
        Surface::Disc => SurfaceConfiguration::Disc(random_disc(&mut rng, n)),
    }
}

fn angles_well_spread(thetas: &[f64]) -> bool {
    thetas.iter().enumerate().all(|(i, &a)| {
        thetas[i + 1..].iter().all(|&b| {
            let gap = circle_diff(a, b).abs();
            gap == 0.0 || gap >= MIN_ANGLE_GAP
        })
    })
}

/// A random annulus pair. Uniform angles almost never share fibers, so
/// three pairs in four draw all `2n` angles from a small common pool,
/// which makes every degree from 1 to `2n` reachable.
pub fn annulus_pair<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
) -> (Configuration<AnnulusPoint>, Configuration<AnnulusPoint>) {
    loop {
        let thetas: Vec<f64> = if rng.gen_bool(0.75) {
            let m = rng.gen_range(1..=2 * n);
            let pool: Vec<f64> = (0..m).map(|_| rng.gen()).collect();
            (0..2 * n).map(|_| pool[rng.gen_range(0..m)]).collect()
        } else {
            (0..2 * n).map(|_| rng.gen()).collect()
        };
        if !angles_well_spread(&thetas) {
            continue;
        }
        let x = separated(thetas[..n].iter().map(|&t| annulus_point(rng, t)).collect());
        let y = separated(thetas[n..].iter().map(|&t| annulus_point(rng, t)).collect());
        if let (Some(x), Some(y)) = (x, y) {
            return (x, y);
        }
    }
}

/// Three points on a random line through the disc of radius 5, so they stay
/// inside the disc of radius 10.
fn random_line<R: Rng + ?Sized>(rng: &mut R) -> Vec<PlanePoint> {
    let centre = disc_point(rng, DISC_RADIUS / 2.0);
    let dir = Complex64::from_polar(1.0, rng.gen_range(0.0..TAU));
    (0..3)
        .map(|_| PlanePoint::from(centre + dir * rng.gen_range(-DISC_RADIUS / 2.0..=DISC_RADIUS / 2.0)))
        .collect()
}

/// A random pair of 3-point disc configurations. Each factor is collinear
/// with probability 1/2 and the pair is made cooriented with probability
/// 1/2 (by turning `y` about the origin), so all four strata are hit.
pub fn disc_pair<R: Rng + ?Sized>(rng: &mut R) -> (Configuration<PlanePoint>, Configuration<PlanePoint>) {
    let tol = Tolerances::default();
    let factor = |rng: &mut R| loop {
        let pts = if rng.gen_bool(0.5) {
            random_line(rng)
        } else {
            (0..3).map(|_| PlanePoint::from(disc_point(rng, DISC_RADIUS))).collect()
        };
        if let Some(c) = separated(pts) {
            return c;
        }
    };
    loop {
        let x = factor(rng);
        let mut y = factor(rng);
        if rng.gen_bool(0.5) {
            let (dx, dy) = (orientation(&x).expect("3 points"), orientation(&y).expect("3 points"));
            y = rotate(&y, (dx.delta / dy.delta).arg() / 6.0).expect("rotation keeps points distinct");
            if orientation(&y).expect("3 points").distance(&dx) >= tol.tau_geom {
                continue;
            }
        }
        return (x, y);
    }
}
